"""
Tests unitaires pour le paquet python/coxeter.

Ce module teste la grammaire des diagrammes, la validation des systèmes
de base, les entiers de Cartan, les réflexions modulo p et l'énumération
des systèmes et classes de recensement.
"""

import math
import unittest

import numpy as np

from core.exceptions import BadBranchLabel, CoxmodException, DimensionMismatch, DiagramException, NonCrystallographic, ParseError
from coxeter import (
    INF, StringDiagram, all_rank4_diagrams, cartan, census_classes, diagonal_class,
    enumerate_basic_systems, equivalent_mod_p, gram_mod_p, is_generic, parse_diagram,
    parse_schlafli, parse_system, reflection_generators, twice_gram, validate
)
from fp import FieldCtx
from matgroup import matrix_order


class TestGrammar(unittest.TestCase):
    """Tests pour l'analyse textuelle des diagrammes."""

    def test_parse_system_round_trip(self):
        """Test de lecture et de réécriture d'un système."""
        system = parse_system("[4,4,3]@1,2,1,1")
        self.assertEqual(system.text, "[4,4,3]@1,2,1,1")
        self.assertEqual(system.rank, 4)
        self.assertEqual(str(system), system.text)

    def test_infinity_spellings(self):
        """Test des écritures inf, INF et ∞."""
        for text in ("[inf,3,inf]@4,1,1,4", "[INF, 3, inf] @ 4,1,1,4", "[∞,3,∞]@4,1,1,4"):
            system = parse_system(text)
            self.assertEqual(system.branches, (INF, 3, INF))
            self.assertEqual(system.text, "[inf,3,inf]@4,1,1,4")

    def test_labels_are_canonicalized(self):
        """Test de la division des étiquettes par leur pgcd."""
        self.assertEqual(parse_system("[4,4,3]@2,4,2,2").node_labels, (1, 2, 1, 1))

    def test_parse_schlafli(self):
        """Test d'un diagramme sans étiquettes."""
        diagram = parse_schlafli("[6,inf,6]")
        self.assertEqual(diagram.branches, (6, INF, 6))
        self.assertTrue(diagram.is_palindromic())

    def test_bad_branch_label(self):
        """Test d'une étiquette de branche non cristallographique."""
        with self.assertRaises(BadBranchLabel) as cm:
            parse_system("[5,3]@1,1,1")
        self.assertEqual(cm.exception.label, 5)
        self.assertIsInstance(cm.exception, DiagramException)

    def test_wrong_label_count(self):
        """Test d'un nombre d'étiquettes incohérent : position du '@'."""
        with self.assertRaises(ParseError) as cm:
            parse_diagram("[4,4,3]@1,2,1")
        self.assertEqual(cm.exception.position, 7)

    def test_syntax_errors(self):
        """Test des erreurs de syntaxe avec position."""
        cases = {
            "[4,4,3@1,2,1,1": 6,
            "[4,4,3]@1,0,1,1": 10,
            "[4,4,3]@1,2,1,1 x": 16,
        }
        for text, position in cases.items():
            with self.assertRaises(ParseError) as cm:
                parse_system(text)
            self.assertEqual(cm.exception.position, position, text)

    def test_non_crystallographic_labels(self):
        """Test d'étiquettes de sommets sans entiers de Cartan entiers."""
        with self.assertRaises(NonCrystallographic) as cm:
            parse_system("[4,3]@1,1,1")
        self.assertEqual(cm.exception.branch_index, 0)
        with self.assertRaises(NonCrystallographic):
            parse_system("[6,3]@1,9,9")


class TestDiagram(unittest.TestCase):
    """Tests pour StringDiagram et validate."""

    def test_diagram_needs_a_branch(self):
        """Test du rejet d'un diagramme de rang 1."""
        with self.assertRaises(CoxmodException):
            StringDiagram(())

    def test_reverse(self):
        """Test du renversement d'un système."""
        system = parse_system("[6,3,3]@3,1,1,1")
        reversed_system = system.reverse()
        self.assertEqual(reversed_system.text, "[3,3,6]@1,1,1,3")
        self.assertEqual(reversed_system.reverse(), system)

    def test_validate_rank_mismatch(self):
        """Test d'un nombre d'étiquettes différent du rang."""
        with self.assertRaises(NonCrystallographic):
            validate(StringDiagram((3, 3)), (1, 1))

    def test_infinity_ratio_one_is_valid(self):
        """Test du rapport 1 sur une branche ∞ (λ = 4)."""
        system = validate(StringDiagram((4, INF, 4)), (1, 2, 2, 1))
        self.assertEqual(cartan(system).pair(1), (-2, -2))


class TestCartan(unittest.TestCase):
    """Tests pour les entiers de Cartan et les réflexions."""

    def test_cartan_443(self):
        """Test de la matrice de Cartan de [4,4,3]@1,2,1,1."""
        m = cartan(parse_system("[4,4,3]@1,2,1,1"))
        self.assertEqual(m.to_list(), [[2, -1, 0, 0], [-2, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]])
        self.assertFalse(m.is_palindromic())

    def test_cartan_products_are_lambda(self):
        """Test de m_ij·m_ji = λ pour chaque branche."""
        expected = {3: 1, 4: 2, 6: 3, INF: 4}
        for text in ("[6,3,3]@3,1,1,1", "[4,6,4]@2,1,3,6", "[inf,3,inf]@4,1,1,4", "[3,inf,3]@1,1,4,4"):
            system = parse_system(text)
            m = cartan(system)
            for i, branch in enumerate(system.branches):
                a, b = m.pair(i)
                self.assertEqual(a * b, expected[branch], text)

    def test_palindromic_cartan(self):
        """Test du chemin palindrome : [6,3,6]@1,3,3,1."""
        self.assertTrue(cartan(parse_system("[6,3,6]@1,3,3,1")).is_palindromic())
        self.assertFalse(cartan(parse_system("[6,3,6]@1,3,3,9")).is_palindromic())

    def test_twice_gram(self):
        """Test de 2B : diagonale 2c_i, hors diagonale -s."""
        doubled = twice_gram(parse_system("[4,4,3]@1,2,1,1"))
        self.assertEqual([int(doubled[i, i]) for i in range(4)], [2, 4, 2, 2])
        self.assertEqual([int(doubled[i, i + 1]) for i in range(3)], [-2, -2, -1])
        self.assertTrue(np.array_equal(doubled, doubled.T))

    def test_reflections_are_involutions_preserving_the_form(self):
        """Test de R_i² = 1 et R_iᵀ·B·R_i = B."""
        for text, p in (("[4,4,3]@1,2,1,1", 3), ("[6,3,3]@3,1,1,1", 3), ("[inf,3,inf]@4,1,1,4", 7)):
            system = parse_system(text)
            ctx = FieldCtx(p)
            gram = gram_mod_p(system, ctx)
            for r in reflection_generators(system, ctx):
                self.assertTrue((r @ r).is_identity())
                self.assertFalse(r.is_identity())
                self.assertEqual(r.transpose() @ gram @ r, gram)

    def test_reflection_acts_on_simple_roots(self):
        """Test de R_i·e_j = e_j - m_ji·e_i."""
        system = parse_system("[4,4,3]@1,2,1,1")
        m = cartan(system)
        gens = reflection_generators(system, FieldCtx(7))
        for i, r in enumerate(gens):
            for j in range(4):
                e = np.zeros(4, dtype=np.int64)
                e[j] = 1
                expected = e.copy()
                expected[i] -= m[j, i]
                self.assertEqual([int(x) for x in r.apply(e)], [int(x) % 7 for x in expected])

    def test_coxeter_relations_realized(self):
        """Test des ordres des produits : étiquettes finies, ∞ ↦ p, paires éloignées d'ordre 2."""
        cases = [("[4,4,3]@1,2,1,1", 5, [4, 4, 3]), ("[inf,3,inf]@4,1,1,4", 5, [5, 3, 5]),
                 ("[3,inf,3]@1,1,4,4", 7, [3, 7, 3]), ("[6,3,3]@3,1,1,1", 7, [6, 3, 3])]
        for text, p, orders in cases:
            gens = reflection_generators(parse_system(text), FieldCtx(p))
            self.assertEqual([matrix_order(gens[i] @ gens[i + 1]) for i in range(3)], orders, text)
            for i in range(4):
                for j in range(i + 2, 4):
                    self.assertEqual(matrix_order(gens[i] @ gens[j]), 2)

    def test_is_generic(self):
        """Test de la généricité de p."""
        self.assertTrue(is_generic(parse_system("[4,4,3]@1,2,1,1"), FieldCtx(3)).generic)
        report = is_generic(parse_system("[6,3,3]@3,1,1,1"), FieldCtx(3))
        self.assertFalse(report.generic)
        self.assertEqual(report.zero_labels_mod_p, (0,))
        self.assertTrue(is_generic(parse_system("[6,3,3]@3,1,1,1"), FieldCtx(5)).generic)
        self.assertTrue(is_generic(parse_system("[inf,3,inf]@4,1,1,4"), FieldCtx(5)).generic)
        self.assertEqual(report.to_dict(), {"generic": False, "zero_labels_mod_p": [0]})


class TestSystems(unittest.TestCase):
    """Tests pour l'énumération des systèmes de base et des classes."""

    def test_enumerate_443(self):
        """Test des quatre systèmes de [4,4,3], triés par étiquettes."""
        systems = enumerate_basic_systems(parse_schlafli("[4,4,3]"))
        self.assertEqual([s.node_labels for s in systems],
                         [(1, 2, 1, 1), (1, 2, 4, 4), (2, 1, 2, 2), (4, 2, 1, 1)])

    def test_enumerate_with_reversal(self):
        """Test de l'identification d'un système et de son renversé."""
        diagram = parse_schlafli("[6,3,6]")
        self.assertEqual(len(enumerate_basic_systems(diagram)), 4)
        systems = enumerate_basic_systems(diagram, identify_reversal=True)
        self.assertEqual([s.labels_text for s in systems], ["1,3,3,1", "1,3,3,9", "3,1,1,3"])

    def test_infinity_ratio_one(self):
        """Test de l'option rapport 1 sur les branches ∞."""
        diagram = parse_schlafli("[inf,3]")
        self.assertEqual(len(enumerate_basic_systems(diagram)), 2)
        self.assertEqual(len(enumerate_basic_systems(diagram, infinity_ratio_one=True)), 3)

    def test_single_system_for_simply_laced(self):
        """Test d'un diagramme à branches 3 : un seul système."""
        systems = enumerate_basic_systems(parse_schlafli("[3,3,3]"))
        self.assertEqual([s.text for s in systems], ["[3,3,3]@1,1,1,1"])

    def test_census_classes(self):
        """Test des classes diagonales : une à p générique, trois à p = 3 pour [6,3,6]."""
        diagram = parse_schlafli("[6,3,6]")
        self.assertEqual(len(census_classes(diagram, FieldCtx(5))), 1)
        self.assertEqual(len(census_classes(diagram, FieldCtx(3))), 3)

    def test_diagonal_class_mirror(self):
        """Test de l'identification des clés miroir pour un diagramme palindrome."""
        ctx = FieldCtx(3)
        a = parse_system("[6,3,6]@1,3,3,9")
        b = parse_system("[6,3,6]@9,3,3,1")
        self.assertEqual(diagonal_class(a, ctx), diagonal_class(b, ctx))
        self.assertNotEqual(diagonal_class(a, ctx, identify_reversal=False),
                            diagonal_class(b, ctx, identify_reversal=False))

    def test_equivalent_mod_p(self):
        """Test de la conjugaison simultanée des réflexions."""
        a = parse_system("[6,3,6]@1,3,3,1")
        b = parse_system("[6,3,6]@3,1,1,3")
        self.assertTrue(equivalent_mod_p(a, a, FieldCtx(3)))
        self.assertTrue(equivalent_mod_p(a, b, FieldCtx(5)))
        self.assertFalse(equivalent_mod_p(a, parse_system("[6,3,6]@1,3,3,9"), FieldCtx(3)))

    def test_equivalent_mod_p_336_pair(self):
        """Test des deux systèmes de [3,3,6] : conjugués à p = 5, distincts à p = 3."""
        systems = enumerate_basic_systems(parse_schlafli("[3,3,6]"))
        self.assertEqual(len(systems), 2)
        a, b = systems
        self.assertTrue(equivalent_mod_p(a, b, FieldCtx(5)))
        self.assertFalse(equivalent_mod_p(a, b, FieldCtx(3)))

    def test_equivalent_mod_p_needs_same_diagram(self):
        """Test du rejet de diagrammes différents."""
        with self.assertRaises(DimensionMismatch):
            equivalent_mod_p(parse_system("[4,4,3]@1,2,1,1"), parse_system("[3,3,3]@1,1,1,1"), FieldCtx(5))

    def test_all_rank4_diagrams(self):
        """Test des 40 diagrammes de rang 4 à renversement près."""
        diagrams = all_rank4_diagrams()
        self.assertEqual(len(diagrams), 40)
        self.assertEqual(len(set(diagrams)), 40)
        for d in diagrams:
            self.assertGreaterEqual(d.branches, tuple(reversed(d.branches)))
            self.assertTrue(all(b in (3, 4, 6, math.inf) for b in d.branches))


if __name__ == '__main__':
    unittest.main()
