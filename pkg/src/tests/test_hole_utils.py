"""Unit tests for functions in `cliquehole.hole_utils`.
"""

import os
import random
import unittest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from parameterized import parameterized

from cliquehole.hole_errors import InvalidHole, InvalidMove
from cliquehole.hole_io import parse_instance, random_ring_profile
from cliquehole.hole_models import CliqueHole, RingProfile, TransformationMove, wrap
from cliquehole.hole_utils import *

__author__ = "Boaty McBoatface, Planey McPlaneface"
__copyright__ = "Copyright 2023, Westmont College"
__credits__ = ["Boaty McBoatface", "Planey McPlaneface"]
__license__ = "MIT"
__email__ = "bmcboatface@westmont.edu"

PROPERTY_SETTINGS = settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])

DATA_DIR = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir, "data")


def load_hole(name):
    with open(os.path.join(DATA_DIR, name), 'r', encoding="utf-8") as fo:
        return parse_instance(fo.read())


@st.composite
def ring_profiles(draw, odd_only=False):
    m = draw(st.sampled_from([5, 7, 9, 11] if odd_only else [4, 5, 6, 7, 8, 9]))
    n = m // 2
    highest = m * n + (n if m % 2 else 0)
    target = draw(st.integers(min_value=m, max_value=highest))
    return random_ring_profile(m, target, draw(st.integers(min_value=0, max_value=2 ** 16)))


class ValidateCliqueHoleTest(unittest.TestCase):
    def test_c4_is_valid(self):
        hole = CliqueHole([["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]])
        self.assertTrue(validate_clique_hole(hole).is_valid)

    @parameterized.expand([
        ("hole_m7_replay.json",),
        ("hole_m5_over_bound.json",),
        ("hole_m5_sub_extreme.json",),
        ("hole_m13_stuck.json",),
        ("hole_m6_even.json",),
        ("hole_c4.json",),
        ("hole_c5.json",),
    ])
    def test_fixtures_are_valid(self, name):
        self.assertTrue(validate_clique_hole(load_hole(name)).is_valid)

    def test_too_few_cliques(self):
        report = validate_clique_hole(CliqueHole([["x", "y"], ["y", "z"], ["z", "x"]]))
        self.assertIn("m<4", report.codes)
        self.assertIn("m < 4 (got m = 3)", str(report))

    def test_non_consecutive_intersection(self):
        hole = CliqueHole([["a", "b", "x"], ["b", "c"], ["c", "d", "x"], ["d", "a"]])
        report = validate_clique_hole(hole)
        self.assertIn("non-consecutive-intersection", report.codes)
        self.assertIn("non-consecutive intersection (1,3)", str(report))

    def test_missing_intersection(self):
        hole = CliqueHole([["a", "b"], ["c", "d"], ["d", "e"], ["e", "a"]])
        self.assertIn("missing-intersection", validate_clique_hole(hole).codes)

    def test_clique_too_large(self):
        hole = CliqueHole([["a", "b", "p", "q", "r"], ["b", "c"], ["c", "d"], ["d", "a"]])
        self.assertIn("clique-too-large", validate_clique_hole(hole).codes)

    def test_empty_and_duplicate_cliques(self):
        hole = CliqueHole([["a", "b"], [], ["a", "b"], ["b", "a"]])
        codes = validate_clique_hole(hole).codes
        self.assertIn("empty-clique", codes)
        self.assertIn("duplicate-clique", codes)

    def test_non_maximal_clique(self):
        # {a, b} is extended by c, which is adjacent to both through the other cliques.
        hole = CliqueHole([["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"], ["a", "c"]])
        self.assertIn("non-maximal-clique", validate_clique_hole(hole).codes)

    def test_reserved_and_empty_ids(self):
        hole = CliqueHole([["~virtual:a1_v1", "b"], ["b", "c"], ["c", ""], ["", "~virtual:a1_v1"]])
        codes = validate_clique_hole(hole).codes
        self.assertIn("reserved-id", codes)
        self.assertIn("empty-id", codes)

    def test_reports_every_violation(self):
        hole = CliqueHole([["a", "b", "x"], ["c", "d"], ["d", "x"], ["d", "a"]])
        self.assertGreaterEqual(len(validate_clique_hole(hole)), 2)


class ExtractRingTest(unittest.TestCase):
    def test_replay_instance(self):
        hole = load_hole("hole_m7_replay.json")
        ring = extract_ring(hole)
        self.assertEqual(RingProfile([5, 2, 3, 4, 1, 4, 2]), profile_of(ring))
        self.assertIs(hole, ring.origin)
        self.assertEqual(("p3_v1",), private_vertices(hole, 3))
        self.assertEqual((), private_vertices(hole, 1))

    def test_invalid_hole_carries_report(self):
        with self.assertRaises(InvalidHole) as ctx:
            extract_ring(CliqueHole([["x", "y"], ["y", "z"], ["z", "x"]]))
        self.assertIn("m<4", ctx.exception.report.codes)

    @parameterized.expand([
        ("hole_m7_replay.json",),
        ("hole_m6_even.json",),
        ("hole_m5_sub_extreme.json",),
    ])
    def test_sector_adjacency(self, name):
        hole = load_hole(name)
        ring = extract_ring(hole)
        neighbors = union_neighbors(hole)
        for i in range(1, hole.m + 1):
            expected_neighborhood = set(hole.clique(i)) | set(hole.clique(i + 1))
            for v in ring.sector(i):
                self.assertEqual(expected_neighborhood - {v}, neighbors[v])
            self.assertFalse(set(ring.sector(i)) & set(ring.sector(i + 2)))


class DeficitWitnessTest(unittest.TestCase):
    @parameterized.expand([
        ("replay", [5, 2, 3, 4, 1, 4, 2], 5),
        ("m5_example", [4, 1, 2, 2, 1], 5),
        ("balanced", [3, 3, 3, 3, 3, 3, 3], None),
        ("sub_extreme", [1, 1, 1, 1, 1], 1),
    ])
    def test_witness(self, _, a, expected):
        self.assertEqual(expected, deficit_witness(RingProfile(a)))

    def test_balanced(self):
        self.assertTrue(is_balanced(RingProfile([2, 2, 2, 2, 2])))
        self.assertFalse(is_balanced(RingProfile([3, 2, 2, 2, 1])))

    @PROPERTY_SETTINGS
    @given(p=ring_profiles())
    def test_witness_exists_within_bound(self, p):
        if p.total > p.bound or is_balanced(p):
            return
        i = deficit_witness(p)
        self.assertLess(p.at(i), p.n)
        self.assertLessEqual(p.at(i - 1) + p.at(i), 2 * p.n)


class ApplyMoveTest(unittest.TestCase):
    def test_apply_and_invert(self):
        p = RingProfile([5, 2, 3, 4, 1, 4, 2])
        mv = TransformationMove(1, 7)
        q = apply_move(p, mv)
        self.assertEqual(RingProfile([4, 2, 3, 4, 1, 4, 3]), q)
        self.assertEqual(p, apply_move(q, invert_move(mv)))

    def test_out_of_range(self):
        with self.assertRaises(InvalidMove):
            apply_move(RingProfile([1, 1, 1, 1, 1]), TransformationMove(6, 1))

    def test_invalid_result(self):
        with self.assertRaises(InvalidMove):
            apply_move(RingProfile([1, 1, 1, 1, 1]), TransformationMove(2, 1))
        with self.assertRaises(InvalidMove):
            apply_move(RingProfile([2, 3, 2, 3, 2]), TransformationMove(1, 2))

    def test_ten_thousand_unit_move_round_trips(self):
        rng = random.Random(128)
        checked = 0
        while checked < 10 ** 4:
            m = rng.choice([4, 5, 6, 7, 8, 9])
            highest = m * (m // 2) + (m // 2 if m % 2 else 0)
            p = random_ring_profile(m, rng.randint(m, highest), rng.randrange(2 ** 20))
            k = rng.randint(1, m)
            direction = rng.choice([-1, 1])
            mv = TransformationMove(k, wrap(k + direction, m), direction)
            try:
                q = apply_move(p, mv)
            except InvalidMove:
                continue
            self.assertEqual(p, apply_move(q, invert_move(mv)))
            checked += 1

    @PROPERTY_SETTINGS
    @given(p=ring_profiles(), data=st.data())
    def test_round_trip_property(self, p, data):
        k = data.draw(st.integers(min_value=1, max_value=p.m))
        direction = data.draw(st.sampled_from([-1, 1]))
        mv = TransformationMove(k, wrap(k + direction, p.m), direction)
        try:
            q = apply_move(p, mv)
        except InvalidMove:
            return
        self.assertEqual(p, apply_move(q, invert_move(mv)))


if __name__ == '__main__':
    unittest.main()
