"""Unit tests for functions in `cliquehole.colorability`, cross-checked against the exact oracle.
"""

import itertools
import os
import unittest
from parameterized import parameterized

from cliquehole.colorability import *
from cliquehole.hole_errors import DomainError, InvalidHole, InvalidInstance, InvalidRing
from cliquehole.hole_io import parse_instance, random_ring_profile
from cliquehole.hole_models import CliqueHole, Ring, RingProfile
from cliquehole.oracle.oracle_search import build_graph, is_k_colorable

__author__ = "Boaty McBoatface, Planey McPlaneface"
__copyright__ = "Copyright 2023, Westmont College"
__credits__ = ["Boaty McBoatface", "Planey McPlaneface"]
__license__ = "MIT"
__email__ = "bmcboatface@westmont.edu"

DATA_DIR = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir, "data")


def all_valid_profiles(m):
    for a in itertools.product(range(1, m), repeat=m):
        try:
            yield RingProfile(a)
        except InvalidRing:
            continue


class ColorabilityBoundTest(unittest.TestCase):
    @parameterized.expand([
        (4, 8),
        (5, 10),
        (6, 18),
        (7, 21),
        (13, 78),
    ])
    def test_bound(self, m, expected):
        self.assertEqual(expected, colorability_bound(m))

    def test_too_small(self):
        with self.assertRaises(DomainError):
            colorability_bound(3)


class DecideTest(unittest.TestCase):
    def test_replay_instance(self):
        with open(os.path.join(DATA_DIR, "hole_m7_replay.json"), 'r', encoding="utf-8") as fo:
            verdict = decide(parse_instance(fo.read()))
        self.assertTrue(verdict.colorable)
        self.assertTrue(verdict.is_extreme)
        self.assertEqual("colorable: sum 21 <= bound 21 (slack 0)", str(verdict))

    def test_over_bound_profile(self):
        verdict = decide(RingProfile([3, 2, 3, 2, 1]))
        self.assertFalse(verdict.colorable)
        self.assertEqual(-1, verdict.slack)
        self.assertEqual("not colorable: 11 > 10", str(verdict))

    def test_ring_and_profile_agree(self):
        p = RingProfile([2, 3, 3, 2, 1, 4])
        self.assertEqual(decide(p), decide(Ring.from_profile(p)))

    def test_invalid_hole(self):
        with self.assertRaises(InvalidHole):
            decide(CliqueHole([["x", "y"], ["y", "z"], ["z", "x"]]))

    def test_unsupported_type(self):
        with self.assertRaises(InvalidInstance):
            decide([5, 2, 3, 4, 1, 4, 2])

    def test_even_rings_are_always_colorable(self):
        for m in (4, 6):
            for p in all_valid_profiles(m):
                self.assertTrue(decide(p).colorable, msg=str(p))


class ExhaustiveEquivalenceTest(unittest.TestCase):
    def test_m5_decide_matches_exact_search(self):
        checked = 0
        for p in all_valid_profiles(5):
            found, _ = is_k_colorable(build_graph(Ring.from_profile(p)), 5)
            self.assertEqual(decide(p).colorable, found, msg=str(p))
            checked += 1
        self.assertGreater(checked, 0)

    @parameterized.expand([
        ("hand_picked", [3, 2, 3, 2, 1]),
        ("fuzzed_sum_11", list(random_ring_profile(5, 11, 1))),
        ("fuzzed_sum_12", list(random_ring_profile(5, 12, 2))),
    ])
    def test_over_bound_rings_are_not_m_colorable(self, _, a):
        p = RingProfile(a)
        self.assertFalse(decide(p).colorable)
        found, witness = is_k_colorable(build_graph(Ring.from_profile(p)), p.m)
        self.assertFalse(found)
        self.assertIsNone(witness)


if __name__ == '__main__':
    unittest.main()
