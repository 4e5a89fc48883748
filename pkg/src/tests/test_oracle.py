"""Unit tests for functions in `cliquehole.oracle.oracle_search`.
"""

import os
import unittest
from collections import Counter
from parameterized import parameterized, parameterized_class

import networkx as nx

from cliquehole.hole_errors import InvalidInstance, NotMaximumIndependent, NotOdd, TooLarge
from cliquehole.hole_io import parse_instance
from cliquehole.hole_models import Coloring, IndependentSetFamilyIndex, Ring, RingProfile
from cliquehole.oracle.oracle_search import *

__author__ = "Boaty McBoatface, Planey McPlaneface"
__copyright__ = "Copyright 2023, Westmont College"
__credits__ = ["Boaty McBoatface", "Planey McPlaneface"]
__license__ = "MIT"
__email__ = "bmcboatface@westmont.edu"

DATA_DIR = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir, "data")


class ExactSearchTest(unittest.TestCase):
    def setUp(self):
        self.c5 = build_graph(Ring.from_profile([1, 1, 1, 1, 1]))

    def test_build_graph_from_ring(self):
        self.assertEqual(5, self.c5.number_of_nodes())
        self.assertEqual(5, self.c5.number_of_edges())
        self.assertTrue(self.c5.has_edge("a1_v1", "a2_v1"))
        self.assertTrue(self.c5.has_edge("a5_v1", "a1_v1"))

    def test_build_graph_from_hole(self):
        with open(os.path.join(DATA_DIR, "hole_m7_replay.json"), 'r', encoding="utf-8") as fo:
            g = build_graph(parse_instance(fo.read()))
        self.assertEqual(22, g.number_of_nodes())
        self.assertTrue(g.has_edge("p3_v1", "a2_v1"))
        self.assertFalse(g.has_edge("p3_v1", "a4_v1"))

    def test_build_graph_rejects_other_types(self):
        with self.assertRaises(InvalidInstance):
            build_graph(RingProfile([1, 1, 1, 1, 1]))

    @parameterized.expand([
        (2, False),
        (3, True),
        (5, True),
    ])
    def test_c5(self, k, expected):
        found, witness = is_k_colorable(self.c5, k)
        self.assertEqual(expected, found)
        if found:
            self.assertTrue(verify_coloring(self.c5, witness, k)[0])
        else:
            self.assertIsNone(witness)

    def test_degenerate_inputs(self):
        self.assertEqual((True, Coloring({})), is_k_colorable(nx.Graph(), 0))
        self.assertEqual((False, None), is_k_colorable(self.c5, 0))
        self.assertEqual(0, chromatic_number(nx.Graph()))

    @parameterized.expand([
        ("c5", [1, 1, 1, 1, 1], 3),
        ("c4", [1, 1, 1, 1], 2),
        ("over_bound_m5", [3, 2, 3, 2, 1], 6),
        ("extreme_m5", [4, 1, 2, 2, 1], 5),
        ("even_m6", [2, 3, 3, 2, 1, 4], 6),
    ])
    def test_chromatic_number(self, _, a, expected):
        self.assertEqual(expected, chromatic_number(build_graph(Ring.from_profile(a))))

    def test_size_guard(self):
        g = build_graph(Ring.from_profile([3, 3, 3, 3, 3, 3, 3]))
        with self.assertRaises(TooLarge):
            is_k_colorable(g, 7, max_vertices=20)
        with self.assertRaises(TooLarge):
            chromatic_number(g, max_vertices=20)


@parameterized_class(("profile", "expected_total"), [
    ([2, 2, 2, 2, 2], 20),
    ([3, 3, 3, 3, 3, 3, 3], 189),
    ([4, 1, 2, 2, 1], None),
    ([5, 2, 3, 4, 1, 4, 2], None),
])
class MaximumIndependentSetTest(unittest.TestCase):
    def setUp(self):
        self.p = RingProfile(self.profile)
        self.ring = Ring.from_profile(self.p)
        self.sets = enumerate_max_independent_sets(self.ring)

    def test_total_count(self):
        expected = self.expected_total
        if expected is None:
            expected = sum(mis_family_size(self.p, i) for i in range(1, self.p.m + 1))
        self.assertEqual(expected, len(self.sets))
        self.assertEqual(len(self.sets), len(set(self.sets)))

    def test_every_set_lies_in_exactly_one_family(self):
        counts = Counter(classify_mis(self.ring, s).pi_index for s in self.sets)
        for i in range(1, self.p.m + 1):
            self.assertEqual(mis_family_size(self.p, i), counts[i])

    def test_sets_are_independent(self):
        g = build_graph(self.ring)
        for s in self.sets:
            self.assertEqual(self.p.n, len(s))
            self.assertFalse(any(g.has_edge(u, v) for u in s for v in s if u < v))

    def test_substitution_moves_between_neighbouring_families(self):
        g = build_graph(self.ring)
        m = self.p.m
        for s in self.sets:
            i = classify_mis(self.ring, s).pi_index
            for forward, expected_family in ((True, i + 2), (False, i - 2)):
                t = substitute_in_family(self.ring, s, forward)
                self.assertEqual(IndependentSetFamilyIndex((expected_family - 1) % m + 1, m),
                                 classify_mis(self.ring, t))
                self.assertEqual(len(set(s) - set(t)), 1)
                self.assertFalse(any(g.has_edge(u, v) for u in t for v in t if u < v))


class ClassifyTest(unittest.TestCase):
    def setUp(self):
        self.ring = Ring.from_profile([3, 3, 3, 3, 3, 3, 3])

    def test_classify(self):
        family = classify_mis(self.ring, ["a4_v1", "a6_v2", "a1_v3"])
        self.assertEqual(IndependentSetFamilyIndex(4, 7), family)

    @parameterized.expand([
        ("too_small", ["a1_v1", "a3_v1"]),
        ("adjacent_sectors", ["a1_v1", "a2_v1", "a4_v1"]),
        ("same_sector_twice", ["a1_v1", "a1_v2", "a3_v1"]),
        ("unknown_vertex", ["a1_v1", "a3_v1", "zzz"]),
    ])
    def test_not_maximum_independent(self, _, vertex_set):
        with self.assertRaises(NotMaximumIndependent):
            classify_mis(self.ring, vertex_set)

    def test_wrapping_adjacency(self):
        with self.assertRaises(NotMaximumIndependent):
            classify_mis(self.ring, ["a7_v1", "a1_v1", "a4_v1"])

    def test_even_ring(self):
        with self.assertRaises(NotOdd):
            enumerate_max_independent_sets(Ring.from_profile([1, 1, 1, 1]))
        with self.assertRaises(NotOdd):
            classify_mis(Ring.from_profile([1, 1, 1, 1]), ["a1_v1", "a3_v1"])

    def test_enumeration_guard(self):
        with self.assertRaises(TooLarge):
            enumerate_max_independent_sets(self.ring, max_vertices=10)

    def test_substitution_with_explicit_vertex(self):
        t = substitute_in_family(self.ring, ["a4_v1", "a6_v2", "a1_v3"], vertex="a3_v2")
        self.assertEqual(("a1_v3", "a3_v2", "a6_v2"), t)
        self.assertEqual(IndependentSetFamilyIndex(6, 7), classify_mis(self.ring, t))

    def test_substitution_with_foreign_vertex(self):
        with self.assertRaises(InvalidInstance):
            substitute_in_family(self.ring, ["a4_v1", "a6_v2", "a1_v3"], vertex="a5_v1")


class VerifyColoringTest(unittest.TestCase):
    def setUp(self):
        self.g = build_graph(Ring.from_profile([1, 1, 1, 1, 1]))
        self.proper = Coloring({"a1_v1": 0, "a2_v1": 1, "a3_v1": 0, "a4_v1": 1, "a5_v1": 2})

    def test_proper(self):
        self.assertEqual((True, []), verify_coloring(self.g, self.proper, 3))

    def test_too_few_colors(self):
        ok, violations = verify_coloring(self.g, self.proper, 2)
        self.assertFalse(ok)
        self.assertEqual(["out-of-range"], [v.kind for v in violations])

    def test_not_total(self):
        ok, violations = verify_coloring(self.g, self.proper.restricted(["a1_v1", "a2_v1"]), 3)
        self.assertFalse(ok)
        self.assertEqual({"not-total"}, {v.kind for v in violations})
        self.assertTrue(str(violations[0]).startswith("not total"))

    def test_monochromatic_edge(self):
        ok, violations = verify_coloring(self.g, self.proper.merged({"a5_v1": 0}), 3)
        self.assertFalse(ok)
        self.assertEqual([("a1_v1", "a5_v1")], [v.vertices for v in violations])


if __name__ == '__main__':
    unittest.main()
