"""
Tests de propriétés sur des échantillons aléatoires (graine fixe) de
systèmes de base du recensement.
"""

import itertools
import random
import unittest

from core.exceptions import TooLarge
from coxeter import all_rank4_diagrams, census_classes, enumerate_basic_systems, gram_mod_p, reflection_generators
from fp import FieldCtx
from matgroup import brute_force_closure, build_bsgs
from polytope import is_string_cgroup, map_invariants

PRIMES = (3, 5, 7, 11, 13)


def sample_systems(count, seed, primes=PRIMES):
    """Couples (système, contexte) tirés uniformément parmi les diagrammes de rang 4."""
    rng = random.Random(seed)
    diagrams = all_rank4_diagrams()
    samples = []
    for _ in range(count):
        systems = enumerate_basic_systems(rng.choice(diagrams))
        samples.append((rng.choice(systems), FieldCtx(rng.choice(primes))))
    return samples


class TestFormInvariance(unittest.TestCase):
    """Tests de Rᵀ·B·R = B pour chaque réflexion."""

    def test_reflections_preserve_form(self):
        """Test sur 200 systèmes et premiers aléatoires."""
        for system, ctx in sample_systems(200, seed=1):
            gram = gram_mod_p(system, ctx)
            for i, r in enumerate(reflection_generators(system, ctx)):
                with self.subTest(system=system.text, p=ctx.p, generator=i):
                    self.assertEqual(r.transpose() @ gram @ r, gram)
                    self.assertTrue((r @ r).is_identity())


class TestBsgsAgainstBruteForce(unittest.TestCase):
    """Tests de l'ordre BSGS contre la fermeture brute."""

    BRUTE_FORCE_LIMIT = 100_000

    def test_random_subgroups(self):
        """Test sur des sous-ensembles aléatoires de générateurs, p ≤ 7."""
        rng = random.Random(2)
        checked = 0
        for system, ctx in sample_systems(60, seed=3, primes=(3, 5, 7)):
            gens = reflection_generators(system, ctx)
            subset = sorted(rng.sample(range(4), rng.choice((2, 3))))
            chosen = [gens[i] for i in subset]
            try:
                expected = brute_force_closure(chosen, limit=self.BRUTE_FORCE_LIMIT)
            except TooLarge:
                continue
            with self.subTest(system=system.text, p=ctx.p, subset=subset):
                self.assertEqual(build_bsgs(chosen).order(), expected)
            checked += 1
        self.assertGreater(checked, 10)

    def test_standard_subgroups_of_census_classes(self):
        """Test de tous les G_J (|J| = 2, 3) des classes de recensement, p ≤ 7."""
        seen = set()
        checked = 0
        for p in (3, 5, 7):
            ctx = FieldCtx(p)
            for diagram in all_rank4_diagrams():
                for system in census_classes(diagram, ctx):
                    gens = reflection_generators(system, ctx)
                    for size in (2, 3):
                        for subset in itertools.combinations(range(4), size):
                            chosen = [gens[i] for i in subset]
                            key = (p,) + tuple(g.key for g in chosen)
                            if key in seen:
                                continue
                            seen.add(key)
                            order = build_bsgs(chosen).order()
                            if order > self.BRUTE_FORCE_LIMIT:
                                continue
                            with self.subTest(system=system.text, p=p, subset=subset):
                                self.assertEqual(brute_force_closure(chosen, limit=self.BRUTE_FORCE_LIMIT), order)
                            checked += 1
        self.assertGreater(checked, 100)


class TestMapEulerCharacteristic(unittest.TestCase):
    """Tests de la parité de V - E + F sur les cartes orientables."""

    def test_orientable_sections(self):
        """Test sur les sections de rang 3 de systèmes aléatoires, p ≤ 7."""
        checked = 0
        for system, ctx in sample_systems(40, seed=4, primes=(3, 5, 7)):
            gens = reflection_generators(system, ctx)
            for lo in (0, 1):
                section = gens[lo:lo + 3]
                try:
                    build_bsgs(section, order_limit=5000)
                except TooLarge:
                    continue
                if not is_string_cgroup(section).is_cgroup:
                    continue
                invariants = map_invariants(section)
                with self.subTest(system=system.text, p=ctx.p, section=lo):
                    k, l = invariants.type
                    self.assertEqual(invariants.V * 2 * l, invariants.order)
                    self.assertEqual(invariants.F * 2 * k, invariants.order)
                    self.assertEqual(invariants.E * 4, invariants.order)
                    if invariants.orientable:
                        self.assertEqual(invariants.euler % 2, 0)
                        self.assertEqual(invariants.euler, 2 - 2 * invariants.genus)
                    else:
                        self.assertEqual(invariants.euler, 2 - invariants.genus)
                checked += 1
        self.assertGreater(checked, 0)


if __name__ == '__main__':
    unittest.main()
