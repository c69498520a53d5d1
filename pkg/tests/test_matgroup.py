"""
Tests unitaires pour le paquet python/matgroup.

Ce module teste les mots en les générateurs, la chaîne de stabilisateurs
(ordre, appartenance, énumération des éléments, seuils) et les opérations
sur les groupes de matrices.
"""

import unittest

import numpy as np

from core.exceptions import DimensionMismatch, GroupException, NotInvariant, ParseError, TooLarge
from coxeter import gram_mod_p, parse_system, reflection_generators
from fp import FieldCtx, FpMatrix
from matgroup import (
    Word, brute_force_closure, build_bsgs, evaluate_word, graph_subgroup_order, intersect_small,
    matrix_order, parse_word, restrict_action, subgroup, subgroup_generators
)


def permutation_matrix(images, p):
    """Matrice de permutation : e_j ↦ e_{images[j]}."""
    n = len(images)
    data = np.zeros((n, n), dtype=np.int64)
    for j, i in enumerate(images):
        data[i, j] = 1
    return FpMatrix(data, p)


def reflections(text, p):
    return reflection_generators(parse_system(text), FieldCtx(p))


class TestWords(unittest.TestCase):
    """Tests pour Word et parse_word."""

    def test_compact_and_spaced_syntax(self):
        """Test des lettres d'un chiffre et des lettres séparées par des espaces."""
        self.assertEqual(parse_word("101").letters, (1, 0, 1))
        self.assertEqual(parse_word("0 1 2 1").letters, (0, 1, 2, 1))
        self.assertEqual(parse_word("10 2").letters, (10, 2))

    def test_powers_and_inverses(self):
        """Test des exposants (négatifs inclus) et de l'apostrophe."""
        self.assertEqual(len(parse_word("(0 1 2 1)^3")), 12)
        self.assertEqual(parse_word("(01)^12").letters, (0, 1) * 12)
        self.assertEqual(parse_word("1'").letters, (~1,))
        self.assertEqual(parse_word("(01)^-1").letters, (~1, ~0))
        self.assertEqual(parse_word("(01)'"), parse_word("(01)^-1"))

    def test_empty_word(self):
        """Test du mot vide."""
        self.assertEqual(parse_word("").letters, ())
        self.assertEqual(str(Word()), "1")

    def test_parse_errors(self):
        """Test des erreurs de syntaxe avec position."""
        with self.assertRaises(ParseError) as cm:
            parse_word("0 x")
        self.assertEqual(cm.exception.position, 2)
        for text in ("(0 1", "^2", "0 1)", "(01)^"):
            with self.assertRaises(ParseError, msg=text):
                parse_word(text)

    def test_word_operations(self):
        """Test de l'inverse, de la réduction libre et des involutions."""
        w = Word((0, 1, 2))
        self.assertEqual(w.inverse().letters, (~2, ~1, ~0))
        self.assertEqual((w + w.inverse()).free_reduce(), Word())
        self.assertEqual(Word((~0, 1)).invert_involutions((True, False)).letters, (0, 1))
        self.assertEqual(w.generators(), [0, 1, 2])
        self.assertEqual(Word((10, 1)).text, "10 1")
        self.assertEqual(len(w.cyclic_rotations()), 3)

    def test_evaluate_word(self):
        """Test de l'évaluation de gauche à droite et des relations de Coxeter."""
        gens = reflections("[4,4,3]@1,2,1,1", 3)
        self.assertTrue(evaluate_word(gens, parse_word("(01)^4")).is_identity())
        self.assertTrue(evaluate_word(gens, Word()).is_identity())
        w = parse_word("0121")
        self.assertEqual(evaluate_word(gens, w), gens[0] @ gens[1] @ gens[2] @ gens[1])
        self.assertEqual(evaluate_word(gens, w.inverse()), evaluate_word(gens, w).inverse())

    def test_evaluate_word_errors(self):
        """Test d'une lettre hors limites et d'une liste vide."""
        gens = reflections("[4,4,3]@1,2,1,1", 3)
        with self.assertRaises(IndexError):
            evaluate_word(gens, Word((4,)))
        with self.assertRaises(ValueError):
            evaluate_word([], Word((0,)))


class TestBsgs(unittest.TestCase):
    """Tests pour build_bsgs et BsgsGroup."""

    def setUp(self):
        """Configuration des tests : S4 par matrices de permutation modulo 5."""
        self.s4 = [permutation_matrix([1, 0, 2, 3], 5), permutation_matrix([1, 2, 3, 0], 5)]

    def test_symmetric_group_order(self):
        """Test de |S4| = 24, égal à la fermeture brute."""
        group = build_bsgs(self.s4)
        self.assertEqual(group.order(), 24)
        self.assertEqual(brute_force_closure(self.s4), 24)
        self.assertEqual(group.n, 4)

    def test_membership(self):
        """Test d'appartenance exacte par tamisage."""
        group = build_bsgs(self.s4)
        self.assertTrue(group.contains(permutation_matrix([0, 1, 3, 2], 5)))
        self.assertTrue(group.contains(FpMatrix.identity(4, 5)))
        self.assertFalse(group.contains(FpMatrix(2 * np.eye(4, dtype=np.int64), 5)))
        with self.assertRaises(DimensionMismatch):
            group.contains(FpMatrix.identity(3, 5))

    def test_elements_are_distinct(self):
        """Test de l'énumération : chaque élément exactement une fois."""
        group = build_bsgs(self.s4)
        elements = list(group.elements())
        self.assertEqual(len(elements), 24)
        self.assertEqual(len(set(elements)), 24)
        self.assertTrue(all(group.contains(g) for g in elements))

    def test_element_threshold(self):
        """Test du refus d'énumérer au-delà du seuil."""
        with self.assertRaises(TooLarge):
            list(build_bsgs(self.s4).elements(threshold=10))

    def test_universal_443_order(self):
        """Test de [4,4,3]@1,2,1,1 à p = 3 : ordre 1440, facette d'ordre 72."""
        gens = reflections("[4,4,3]@1,2,1,1", 3)
        self.assertEqual(build_bsgs(gens).order(), 1440)
        self.assertEqual(subgroup(gens, [0, 1, 2]).order(), 72)

    def test_singular_633_order(self):
        """Test de [6,3,3]@3,1,1,1 à p = 3 : ordre 1296, G_3 d'ordre 108."""
        gens = reflections("[6,3,3]@3,1,1,1", 3)
        self.assertEqual(build_bsgs(gens).order(), 1296)
        self.assertEqual(subgroup(gens, [0, 1, 2]).order(), 108)

    def test_order_limit(self):
        """Test de l'abandon dès que l'ordre dépasse la borne."""
        gens = reflections("[4,4,3]@1,2,1,1", 3)
        with self.assertRaises(TooLarge) as cm:
            build_bsgs(gens, order_limit=100)
        self.assertEqual(cm.exception.context.get("limit"), "order")

    def test_trivial_and_invalid_generators(self):
        """Test du groupe trivial et des générateurs invalides."""
        self.assertEqual(build_bsgs([], n=3, p=5).order(), 1)
        self.assertEqual(build_bsgs([FpMatrix.identity(2, 7)]).order(), 1)
        with self.assertRaises(DimensionMismatch):
            build_bsgs([])
        with self.assertRaises(DimensionMismatch):
            build_bsgs([FpMatrix.identity(2, 5), FpMatrix.identity(3, 5)])
        with self.assertRaises(GroupException):
            build_bsgs([FpMatrix([[1, 1], [1, 1]], 5)])

    def test_deterministic_base(self):
        """Test du déterminisme de la chaîne pour une entrée fixée."""
        gens = reflections("[4,4,3]@1,2,1,1", 3)
        a, b = build_bsgs(gens), build_bsgs(gens)
        self.assertEqual(a.transversal_sizes, b.transversal_sizes)
        self.assertEqual([v.tolist() for v in a.base], [v.tolist() for v in b.base])


class TestOperations(unittest.TestCase):
    """Tests pour les opérations sur les groupes."""

    def setUp(self):
        """Configuration des tests : transpositions de S4 modulo 5."""
        self.t01 = permutation_matrix([1, 0, 2, 3], 5)
        self.t12 = permutation_matrix([0, 2, 1, 3], 5)
        self.t23 = permutation_matrix([0, 1, 3, 2], 5)

    def test_intersect_small(self):
        """Test de ⟨(01),(12)⟩ ∩ ⟨(12),(23)⟩ = ⟨(12)⟩."""
        a = build_bsgs([self.t01, self.t12])
        b = build_bsgs([self.t12, self.t23])
        common = intersect_small(a, b)
        self.assertEqual(len(common), 2)
        self.assertIn(self.t12, common)

    def test_graph_subgroup_order(self):
        """Test du sous-groupe graphe : l'échange des transpositions se prolonge."""
        self.assertEqual(graph_subgroup_order([self.t01, self.t12], [self.t12, self.t01]), 6)
        with self.assertRaises(DimensionMismatch):
            graph_subgroup_order([self.t01], [self.t01, self.t12])

    def test_subgroup_by_words(self):
        """Test des sous-groupes engendrés par des mots."""
        gens = reflections("[4,4,3]@1,2,1,1", 3)
        self.assertEqual(subgroup(gens, ["01"]).order(), 4)
        chosen = subgroup_generators(gens, [0, Word((1, 2)), "3"])
        self.assertEqual(chosen[1], gens[1] @ gens[2])
        self.assertEqual(chosen[2], gens[3])

    def test_restrict_action(self):
        """Test de la restriction à la droite invariante (1,1,1,1)."""
        restricted = restrict_action([self.t01, self.t23], [np.array([1, 1, 1, 1])])
        self.assertEqual([m.to_list() for m in restricted], [[[1]], [[1]]])
        with self.assertRaises(NotInvariant):
            restrict_action([self.t01], [np.array([1, 0, 0, 0])])
        with self.assertRaises(GroupException):
            restrict_action([self.t01], [np.array([1, 1, 0, 0]), np.array([2, 2, 0, 0])])

    def test_restriction_is_not_injective(self):
        """Test de [4,3,6]@2,1,1,3 à p = 3 : |G_0| = 108 mais sa restriction à V_0 est d'ordre 36."""
        gens = reflections("[4,3,6]@2,1,1,3", 3)
        g0 = [gens[1], gens[2], gens[3]]
        self.assertEqual(build_bsgs(g0).order(), 108)
        basis = [np.array(row) for row in np.eye(4, dtype=np.int64)[1:]]
        restricted = restrict_action(g0, basis)
        self.assertEqual(restricted[0].n, 3)
        self.assertEqual(build_bsgs(restricted).order(), 36)

    def test_restriction_to_full_space(self):
        """Test de la restriction à l'espace entier : mêmes matrices."""
        gens = reflections("[4,4,3]@1,2,1,1", 3)
        basis = [np.array(row) for row in np.eye(4, dtype=np.int64)]
        self.assertEqual(restrict_action(gens, basis), gens)

    def test_intersection_of_end_subgroups(self):
        """Test de |G_0 ∩ G_3| : 12 pour [6,3,6]@1,3,3,1 à p = 5, 8 pour [4,4,3]@1,2,1,1."""
        for text, expected, middle in (("[6,3,6]@1,3,3,1", 12, 6), ("[4,4,3]@1,2,1,1", 8, 8)):
            with self.subTest(system=text):
                gens = reflections(text, 5)
                common = intersect_small(subgroup(gens, [1, 2, 3]), subgroup(gens, [0, 1, 2]))
                self.assertEqual(len(common), expected)
                self.assertEqual(subgroup(gens, [1, 2]).order(), middle)

    def test_order_666(self):
        """Test de [6,6,6]@3,1,3,1 à p = 3 : ordre 432."""
        self.assertEqual(build_bsgs(reflections("[6,6,6]@3,1,3,1", 3)).order(), 432)

    def test_reflection_outside_g0(self):
        """Test de [6,3,∞]@3,1,1,4 à p = 5 : la réflexion de racine b_1 + 2b_2 n'est pas dans G_0."""
        system = parse_system("[6,3,inf]@3,1,1,4")
        ctx = FieldCtx(5)
        gram = np.array(gram_mod_p(system, ctx).to_list(), dtype=object)
        root = np.array([0, 1, 2, 0], dtype=object)
        image = gram.dot(root)
        scale = 2 * ctx.inv(int(root.dot(image)))
        r = FpMatrix(np.eye(4, dtype=object) - scale * np.outer(root, image), 5)
        form = FpMatrix(gram, 5)
        self.assertEqual(r.transpose() @ form @ r, form)
        self.assertTrue((r @ r).is_identity())
        gens = reflection_generators(system, ctx)
        g0 = subgroup(gens, [1, 2, 3])
        self.assertTrue(g0.contains(gens[1]))
        self.assertTrue(g0.contains(FpMatrix.identity(4, 5)))
        self.assertFalse(g0.contains(r))

    def test_matrix_order(self):
        """Test de l'ordre d'un élément et de sa borne."""
        gens = reflections("[inf,3,inf]@4,1,1,4", 5)
        self.assertEqual(matrix_order(gens[0] @ gens[1]), 5)
        with self.assertRaises(TooLarge):
            matrix_order(gens[0] @ gens[1], limit=3)

    def test_brute_force_limit(self):
        """Test de la borne de la fermeture brute."""
        with self.assertRaises(TooLarge):
            brute_force_closure(reflections("[4,4,3]@1,2,1,1", 3), limit=100)


if __name__ == '__main__':
    unittest.main()
