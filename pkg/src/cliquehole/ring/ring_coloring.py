"""Constructs proper m-colorings of rings and of the clique holes around them.

Odd rings are balanced: one unit at a time moves from a surplus sector back to a deficit sector until every sector
holds ⌊m/2⌋ vertices, while the selection counts sᵢ track how many of the m disjoint maximum independent sets are
taken from each family Πᵢ. The counts are then materialized into an explicit partition, one color per set. Even
rings use the alternating scheme, and sub-extreme odd rings are first padded with virtual vertices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from loguru import logger

from cliquehole.colorability import ColorabilityVerdict, decide
from cliquehole.hole_errors import (CoverageMismatch, DomainError, InternalInvariant, InvalidInstance, NegativeCounts,
                                    NotColorable, NotEven, NotExtreme, NotOdd, PaddingStuck, TooLarge, Unresolved)
from cliquehole.hole_models import (VIRTUAL_PREFIX, CliqueHole, Coloring, IndependentSetFamilyIndex, Ring,
                                    RingProfile, SelectionCounts, TraceRecord, TransformationMove, VertexId, wrap)
from cliquehole.hole_utils import apply_move, extract_ring, is_balanced, private_vertices
from cliquehole.oracle.oracle_search import DEFAULT_MAX_VERTICES, build_graph, is_k_colorable, verify_coloring
from cliquehole.ring.ring_pickers import IndexPicker, SmallestIndexPicker

__author__ = "Boaty McBoatface, Planey McPlaneface"
__copyright__ = "Copyright 2023, Westmont College"
__credits__ = ["Boaty McBoatface", "Planey McPlaneface"]
__license__ = "MIT"
__email__ = "bmcboatface@westmont.edu"


class BalancingTrace:
    """Full record of one balancing run.

    Attributes:
        _initial (RingProfile): the extreme profile the run started from.
        _records (tuple[TraceRecord, ...]): one record per state, the last one balanced with no pick.
        _moves (tuple[TransformationMove, ...]): the batch move executed in every iteration.
        _final_counts (SelectionCounts): the selection counts at termination.

    """
    def __init__(self, initial: RingProfile, records: list[TraceRecord], moves: list[TransformationMove],
                 final_counts: SelectionCounts) -> None:
        self._initial: RingProfile = initial
        self._records: tuple[TraceRecord, ...] = tuple(records)
        self._moves: tuple[TransformationMove, ...] = tuple(moves)
        self._final_counts: SelectionCounts = final_counts

    def __str__(self) -> str:
        return f"BalancingTrace({self._initial} in {self.iterations} iterations -> s = {self._final_counts})"

    @property
    def initial(self) -> RingProfile:
        return self._initial

    @property
    def records(self) -> tuple[TraceRecord, ...]:
        return self._records

    @property
    def moves(self) -> tuple[TransformationMove, ...]:
        return self._moves

    @property
    def final_counts(self) -> SelectionCounts:
        return self._final_counts

    @property
    def iterations(self) -> int:
        return len(self._moves)

    def unit_steps(self) -> list[TransformationMove]:
        """Expands every batch move into the unit transformations it is made of."""
        return [step for mv in self._moves for step in mv.single_steps(self._initial.m)]


@dataclass(frozen=True)
class MISPartition:
    """m pairwise disjoint maximum independent sets, each tagged with its family; set `k` gets color `k`."""
    sets: tuple[tuple[IndependentSetFamilyIndex, tuple[VertexId, ...]], ...]

    def __len__(self) -> int:
        return len(self.sets)

    def shape_counts(self) -> Counter:
        """Number of sets per family index."""
        return Counter(family.pi_index for family, _ in self.sets)

    def to_coloring(self) -> Coloring:
        return Coloring({v: k for k, (_, vertices) in enumerate(self.sets) for v in vertices})


@dataclass(frozen=True)
class PaddingPlan:
    """How a sub-extreme odd profile is raised to the extreme sum.

    Attributes:
        original (RingProfile): the profile before padding.
        padded (RingProfile): an extreme profile, pointwise at least `original`.
        virtual (Mapping[int, tuple[VertexId, ...]]): virtual vertex ids added to each 1-based sector.

    """
    original: RingProfile
    padded: RingProfile
    virtual: Mapping[int, tuple[VertexId, ...]] = field(default_factory=dict)

    @property
    def is_identity(self) -> bool:
        return self.original == self.padded


@dataclass(frozen=True)
class RingColoringResult:
    """A ring coloring plus the artifacts that produced it.

    `method` is "balancing", "alternating", "direct-counts" (balancing went negative and the counts were solved
    directly), or "exact-search" (the fallback when padding gets stuck).
    """
    coloring: Coloring
    method: str
    trace: BalancingTrace | None = None
    padding: PaddingPlan | None = None
    partition: MISPartition | None = None
    stuck: PaddingStuck | None = None
    balancing_failure: NegativeCounts | None = None


@dataclass(frozen=True)
class HoleColoringResult:
    coloring: Coloring
    verdict: ColorabilityVerdict
    ring_result: RingColoringResult


def _first_surplus_after(p: RingProfile, i: int) -> int | None:
    for step in range(1, p.m):
        j = wrap(i + step, p.m)
        if p.at(j) > p.n:
            return j
    return None


def balance_and_count(p: RingProfile, picker: IndexPicker | None = None) -> BalancingTrace:
    """Balances an extreme odd profile and derives the selection counts sᵢ.

    Every iteration picks a deficit index `i` (aᵢ < n, aᵢ₋₁ + aᵢ ≤ 2n) through `picker`, takes `j` as the first
    index after `i` in cyclic order with aⱼ > n, increments sᵢ₊₁ and sᵢ₊₂, decrements sⱼ₊₁ and sⱼ₊₂, and moves one
    unit from Aⱼ down to Aᵢ.

    Args:
        p (RingProfile): an extreme profile (Σaᵢ = m⌊m/2⌋) with odd `m`.
        picker (IndexPicker | None): choice strategy for `i`; defaults to the smallest qualifying index.

    Returns:
        A `BalancingTrace`; its final counts describe m disjoint maximum independent sets covering the ring.

    Raises:
        NotOdd: if `m` is even.
        NotExtreme: if Σaᵢ ≠ m⌊m/2⌋.
        NegativeCounts: if a count goes negative. This happens on some valid extreme profiles, e.g. (1,1,4,1,3)
            for every choice of picks; `color_odd_ring` recovers through `solve_counts`.
        InternalInvariant: if no qualifying index or surplus sector exists, or the total
            deficit fails to drop by exactly one.

    Example:
        >>> trace = balance_and_count(RingProfile([4, 1, 2, 2, 1]))
        >>> str(trace.final_counts)
        '(2,0,0,2,1)'
    """
    if p.m % 2 == 0:
        raise NotOdd(f"Balancing needs an odd number of sectors, got m = {p.m}.")
    if not p.is_extreme:
        raise NotExtreme(f"Balancing needs an extreme profile (sum {p.bound}), {p} sums to {p.total}.")

    picker = picker if picker is not None else SmallestIndexPicker()
    m, n = p.m, p.n
    a = p
    s = [1] * m
    records: list[TraceRecord] = []
    moves: list[TransformationMove] = []
    initial_deficit = p.total_deficit()

    while True:
        deficits = a.deficit_set()
        if not deficits:
            records.append(TraceRecord(len(moves), a.a, tuple(s), ()))
            break

        diagnostics = {"initial": list(p.a), "profile": list(a.a), "counts": s[:], "moves": list(map(str, moves))}
        candidates = tuple(i for i in deficits if a.at(i - 1) + a.at(i) <= 2 * n)
        if not candidates:
            raise InternalInvariant(f"No qualifying deficit index on {a}.", diagnostics)
        i = picker.pick(a, candidates)
        j = _first_surplus_after(a, i)
        if j is None:
            raise InternalInvariant(f"No surplus sector after {i} on {a}.", diagnostics)
        records.append(TraceRecord(len(moves), a.a, tuple(s), deficits, i, j))
        logger.debug("iteration {}: B = {}, i = {}, j = {}, profile {}", len(moves) + 1, deficits, i, j, a)

        for k in (i + 2, i + 1):
            s[wrap(k, m) - 1] += 1
        for k in (j + 2, j + 1):
            s[wrap(k, m) - 1] -= 1
        if any(x < 0 for x in s):
            raise NegativeCounts(f"Selection counts went negative: {s}.", tuple(s), {**diagnostics, "counts": s[:]})

        move = TransformationMove(j, i)
        before = a.total_deficit()
        a = apply_move(a, move)
        if a.total_deficit() != before - 1:
            raise InternalInvariant(f"Deficit did not drop by one after move {move}.", diagnostics)
        moves.append(move)

    picker.finish()
    counts = SelectionCounts(s)
    if counts.total != m or len(moves) != initial_deficit:
        raise InternalInvariant("Balancing ended with sum(s) = {} after {} iterations (expected {} and {}).".format(
            counts.total, len(moves), m, initial_deficit), {"initial": list(p.a), "counts": s})
    return BalancingTrace(p, records, moves, counts)


def coverage_sums(s: SelectionCounts) -> tuple[int, ...]:
    """Entry j counts the selected sets that need a vertex of Aⱼ: Σ_{k<n} s_{j−2k}."""
    m, n = s.m, s.m // 2
    return tuple(sum(s.at(j - 2 * k) for k in range(n)) for j in range(1, m + 1))


def solve_counts(p: RingProfile) -> SelectionCounts:
    """Solves coverage_sums(s) = p directly for an extreme odd profile: sₜ = m − aₜ₋₂ − aₜ₋₁.

    Every sector other than Aⱼ is counted exactly once in the coverage sum for j, so the sum comes to m⌊m/2⌋ minus
    (Σaᵢ − aⱼ), which is aⱼ on an extreme profile. The solution is unique, so any m-coloring of an extreme ring
    uses these counts, and balancing ends at them whenever it finishes. Pair sums of a valid profile are at most
    m, so no entry is negative.

    Raises:
        NotOdd: if `m` is even.
        NotExtreme: if Σaᵢ ≠ m⌊m/2⌋.
        CoverageMismatch: if the counts fail to cover the profile.

    Example:
        >>> str(solve_counts(RingProfile([1, 1, 4, 1, 3])))
        '(1,1,3,0,0)'
    """
    if p.m % 2 == 0:
        raise NotOdd(f"Selection counts need an odd number of sectors, got m = {p.m}.")
    if not p.is_extreme:
        raise NotExtreme(f"Selection counts need an extreme profile (sum {p.bound}), {p} sums to {p.total}.")

    s = SelectionCounts([p.m - p.at(t - 2) - p.at(t - 1) for t in range(1, p.m + 1)])
    if s.total != p.m or coverage_sums(s) != p.a:
        raise CoverageMismatch(f"Counts {s} do not cover {p}.", {"profile": list(p.a), "counts": list(s.s)})
    return s


def build_partition(ring: Ring, s: SelectionCounts) -> MISPartition:
    """Materializes selection counts into m disjoint maximum independent sets.

    For every i, sᵢ sets of shape {i, i+2, ..., i+2(n−1)} are emitted; slots are filled position by position
    (all first slots, then all second slots, ...) with the next unused vertex of the sector in canonical order. On
    a balanced ring with all sᵢ = 1 this yields π⁰ᵢ = {v_{i,1}, v_{i+2,2}, ...}.

    Raises:
        NotOdd: if the ring has an even number of sectors.
        CoverageMismatch: if Σsᵢ ≠ m or the counts do not cover the ring profile exactly.
    """
    if ring.m % 2 == 0:
        raise NotOdd(f"Partitions into maximum independent sets need odd m, got m = {ring.m}.")
    m, n = ring.m, ring.m // 2
    if s.m != m or s.total != m or coverage_sums(s) != ring.sizes.a:
        raise CoverageMismatch(f"Counts {s} do not cover profile {ring.sizes}.",
                               {"counts": list(s.s), "profile": list(ring.sizes.a)})

    slots = [i for i in range(1, m + 1) for _ in range(s.at(i))]
    cursor = {j: 0 for j in range(1, m + 1)}
    members: list[list[VertexId]] = [[] for _ in slots]
    for k in range(n):
        for idx, i in enumerate(slots):
            j = wrap(i + 2 * k, m)
            members[idx].append(ring.sector(j)[cursor[j]])
            cursor[j] += 1

    return MISPartition(tuple((IndependentSetFamilyIndex(i, m), tuple(vs)) for i, vs in zip(slots, members)))


def canonical_partition(ring: Ring) -> MISPartition:
    """The partition {π⁰₁, ..., π⁰_m} of a balanced odd ring."""
    if not is_balanced(ring.sizes):
        raise DomainError(f"The canonical partition needs a balanced ring, got {ring.sizes}.")
    return build_partition(ring, SelectionCounts([1] * ring.m))


def _incrementable(a: list[int], i: int, m: int) -> bool:
    return a[i - 2] + a[i - 1] < m and a[i - 1] + a[i % m] < m


def pad_to_extreme(p: RingProfile) -> PaddingPlan:
    """Greedily raises a sub-extreme odd profile to the extreme sum m⌊m/2⌋.

    Each round increments the sector with both adjacent pair sums below `m` that minimizes aᵢ₋₁ + 2aᵢ + aᵢ₊₁ (ties
    to the smallest index). Added vertices get ids with the reserved virtual prefix.

    Raises:
        NotOdd: if `m` is even.
        DomainError: if the profile is already above the bound.
        PaddingStuck: if no sector can grow before the extreme sum is reached.
    """
    if p.m % 2 == 0:
        raise NotOdd(f"Padding targets odd rings, got m = {p.m}.")
    if p.total > p.bound:
        raise DomainError(f"{p} sums to {p.total} > {p.bound}; there is nothing to pad.")

    m = p.m
    a = list(p.a)
    while sum(a) < p.bound:
        options = [i for i in range(1, m + 1) if _incrementable(a, i, m)]
        if not options:
            partial = RingProfile(a)
            raise PaddingStuck(f"Padding is stuck at {partial} (sum {partial.total} < {p.bound}).", partial,
                               {"original": list(p.a), "partial": list(a)})
        i = min(options, key=lambda x: (a[x - 2] + 2 * a[x - 1] + a[x % m], x))
        a[i - 1] += 1
        logger.debug("padding: sector {} -> {}", i, a[i - 1])

    padded = RingProfile(a)
    virtual = {i: tuple(f"{VIRTUAL_PREFIX}a{i}_v{k}" for k in range(1, padded.at(i) - p.at(i) + 1))
               for i in range(1, m + 1) if padded.at(i) > p.at(i)}
    return PaddingPlan(p, padded, virtual)


def _color_by_exact_search(ring: Ring, stuck: PaddingStuck, max_vertices: int) -> RingColoringResult:
    diagnostics = {"profile": list(ring.sizes.a), "partial": list(stuck.partial.a), "reason": str(stuck)}
    logger.warning("padding stuck on {}; falling back to exact search", ring.sizes)
    try:
        found, witness = is_k_colorable(build_graph(ring), ring.m, max_vertices)
    except TooLarge as e:
        raise Unresolved(f"{stuck} Exact search is out of range: {e}",
                         {**diagnostics, **e.diagnostics, "outcome": "too-large"}) from e
    if not found:
        raise Unresolved(f"{stuck} Exact search found no proper {ring.m}-coloring.",
                         {**diagnostics, "outcome": "no-coloring"})
    return RingColoringResult(witness, "exact-search", stuck=stuck)


def color_odd_ring(ring: Ring, picker: IndexPicker | None = None,
                   max_vertices: int = DEFAULT_MAX_VERTICES) -> RingColoringResult:
    """Colors an odd ring with at most m colors by padding, balancing, and partitioning.

    When balancing drives a selection count below zero, the counts are taken from `solve_counts` instead and the
    result carries the failure in `balancing_failure`.

    Args:
        ring (Ring): ring with odd `m` and Σ|Aᵢ| ≤ m⌊m/2⌋.
        picker (IndexPicker | None): choice strategy forwarded to `balance_and_count`.
        max_vertices (int): guard for the exact-search fallback used when padding gets stuck.

    Raises:
        NotOdd: if `m` is even.
        NotColorable: if Σ|Aᵢ| exceeds the bound.
        Unresolved: if padding gets stuck and the exact search cannot produce a coloring.
        CoverageMismatch: if the padded counts fail to cover the padded profile.
    """
    if ring.m % 2 == 0:
        raise NotOdd(f"color_odd_ring needs odd m, got m = {ring.m}.")
    verdict = decide(ring)
    if not verdict.colorable:
        raise NotColorable(verdict)

    try:
        plan = pad_to_extreme(ring.sizes)
    except PaddingStuck as stuck:
        return _color_by_exact_search(ring, stuck, max_vertices)

    padded_ring = ring.with_extra(plan.virtual)
    try:
        trace = balance_and_count(plan.padded, picker)
    except NegativeCounts as failure:
        logger.warning("balancing {} went negative at {}; solving the counts directly", plan.padded, failure.counts)
        partition = build_partition(padded_ring, solve_counts(plan.padded))
        coloring = partition.to_coloring().without_prefix(VIRTUAL_PREFIX)
        return RingColoringResult(coloring, "direct-counts", padding=plan, partition=partition,
                                  balancing_failure=failure)

    partition = build_partition(padded_ring, trace.final_counts)
    coloring = partition.to_coloring().without_prefix(VIRTUAL_PREFIX)
    return RingColoringResult(coloring, "balancing", trace=trace, padding=plan, partition=partition)


def color_even_ring(ring: Ring) -> Coloring:
    """Colors odd-indexed sectors from color 0 upward and even-indexed sectors from color m−1 downward.

    Raises:
        NotEven: if `m` is odd.
    """
    if ring.m % 2 == 1:
        raise NotEven(f"color_even_ring needs even m, got m = {ring.m}.")

    m = ring.m
    colors: dict[VertexId, int] = {}
    for i in range(1, m + 1):
        sector = ring.sector(i)
        palette = range(len(sector)) if i % 2 == 1 else range(m - 1, m - 1 - len(sector), -1)
        colors.update(zip(sector, palette))
    return Coloring(colors)


def extend_to_hole(hole: CliqueHole, ring_coloring: Coloring) -> Coloring:
    """Colors the private vertices of every clique greedily around the already colored ring vertices.

    Ring vertices keep their colors; each private vertex of Φᵢ (canonical order) takes the lowest color not yet used
    inside Φᵢ.

    Raises:
        InvalidInstance: if a ring vertex of `hole` is missing from `ring_coloring`.
        InternalInvariant: if a clique runs out of its m colors.
    """
    m = hole.m
    colors = dict(ring_coloring.assignment)
    for i in range(1, m + 1):
        privates = private_vertices(hole, i)
        shared = [v for v in hole.clique(i) if v not in privates]
        missing = [v for v in shared if v not in colors]
        if missing:
            raise InvalidInstance(f"Ring vertices {missing} of clique {i} have no color.")

        used = {colors[v] for v in shared}
        for v in privates:
            c = min(set(range(len(used) + 1)) - used)
            if c >= m:
                raise InternalInvariant(f"Clique {i} ran out of colors.", {"clique": i, "used": sorted(used)})
            colors[v] = c
            used.add(c)
    return Coloring(colors)


def color_hole(hole: CliqueHole, picker: IndexPicker | None = None,
               max_vertices: int = DEFAULT_MAX_VERTICES) -> HoleColoringResult:
    """Colors a valid m-clique hole with at most m colors, or reports why it cannot.

    Raises:
        InvalidHole: if `hole` is not a valid m-clique hole.
        NotColorable: if the intersection sum exceeds m⌊m/2⌋.
        Unresolved: if the odd-ring fallback is exhausted.
        InternalInvariant: if the final coloring fails verification.
    """
    ring = extract_ring(hole)
    verdict = decide(ring)
    if not verdict.colorable:
        raise NotColorable(verdict)

    if hole.m % 2 == 0:
        ring_result = RingColoringResult(color_even_ring(ring), "alternating")
    else:
        ring_result = color_odd_ring(ring, picker, max_vertices)

    coloring = extend_to_hole(hole, ring_result.coloring)
    proper, violations = verify_coloring(build_graph(hole), coloring, hole.m)
    if not proper:
        raise InternalInvariant("Constructed coloring is not proper.",
                                {"violations": [str(v) for v in violations], "profile": list(ring.sizes.a)})
    return HoleColoringResult(coloring, verdict, ring_result)
