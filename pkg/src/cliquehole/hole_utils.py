"""Structural operations on clique holes and rings: validation, ring extraction, and single transformations.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations

from cliquehole.hole_errors import InternalInvariant, InvalidHole, InvalidMove, InvalidRing
from cliquehole.hole_models import (MIN_CLIQUES, VIRTUAL_PREFIX, CliqueHole, Ring, RingProfile,
                                    TransformationMove, ValidationIssue, ValidationReport, VertexId, wrap)

__author__ = "Boaty McBoatface, Planey McPlaneface"
__copyright__ = "Copyright 2023, Westmont College"
__credits__ = ["Boaty McBoatface", "Planey McPlaneface"]
__license__ = "MIT"
__email__ = "bmcboatface@westmont.edu"


def validate_clique_hole(hole: CliqueHole) -> ValidationReport:
    """Checks every m-clique hole invariant and reports all violations instead of stopping at the first.

    Args:
        hole (CliqueHole): the clique sequence to check.

    Returns:
        A `ValidationReport`; it is empty exactly when `hole` is a valid m-clique hole.

    Example:
        >>> hole = CliqueHole([["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]])
        >>> validate_clique_hole(hole).is_valid
        True
    """
    issues: list[ValidationIssue] = []
    m = hole.m
    cliques = [set(c) for c in hole.cliques]

    if m < MIN_CLIQUES:
        issues.append(ValidationIssue("m<4", f"m < 4 (got m = {m})"))

    for v in hole.vertices:
        if not v:
            issues.append(ValidationIssue("empty-id", "empty vertex id"))
        elif v.startswith(VIRTUAL_PREFIX):
            issues.append(ValidationIssue("reserved-id", f"reserved vertex id {v!r}"))

    for i, clique in enumerate(cliques, start=1):
        if not clique:
            issues.append(ValidationIssue("empty-clique", f"clique {i} is empty", (i,)))
        if len(clique) > m:
            issues.append(ValidationIssue("clique-too-large", f"|Phi_{i}| = {len(clique)} > m = {m}", (i,)))

    for (i, ci), (j, cj) in combinations(enumerate(cliques, start=1), 2):
        if ci == cj:
            issues.append(ValidationIssue("duplicate-clique", f"duplicate clique ({i},{j})", (i, j)))
        consecutive = m >= 2 and (j == wrap(i + 1, m) or i == wrap(j + 1, m))
        if consecutive and not ci & cj:
            issues.append(ValidationIssue(
                "missing-intersection", f"consecutive cliques do not intersect ({i},{j})", (i, j)))
        elif not consecutive and ci & cj:
            issues.append(ValidationIssue(
                "non-consecutive-intersection", f"non-consecutive intersection ({i},{j})", (i, j)))

    neighbors = union_neighbors(hole)
    for i, clique in enumerate(cliques, start=1):
        if not clique:
            continue
        common = set.intersection(*(neighbors[v] for v in clique)) - clique
        if common:
            issues.append(ValidationIssue(
                "non-maximal-clique",
                "clique {} is not maximal (extended by {})".format(i, ",".join(sorted(common))), (i,)))

    return ValidationReport(issues)


def union_neighbors(hole: CliqueHole) -> dict[VertexId, set[VertexId]]:
    """Returns the neighbourhood of every vertex in the union graph of the cliques."""
    neighbors: dict[VertexId, set[VertexId]] = defaultdict(set)
    for clique in hole.cliques:
        for v in clique:
            neighbors[v].update(clique)
            neighbors[v].discard(v)
    return neighbors


def extract_ring(hole: CliqueHole) -> Ring:
    """Builds the ring (A₁, ..., A_m) with Aᵢ = Φᵢ ∩ Φᵢ₊₁ of a valid clique hole.

    Raises:
        InvalidHole: if `hole` fails validation; the exception carries the full report.
    """
    report = validate_clique_hole(hole)
    if not report.is_valid:
        raise InvalidHole(report)

    sectors = [set(hole.clique(i)) & set(hole.clique(i + 1)) for i in range(1, hole.m + 1)]
    try:
        return Ring(sectors, origin=hole)
    except InvalidRing as e:
        raise InternalInvariant(f"A validated hole produced an invalid ring: {e}") from e


def private_vertices(hole: CliqueHole, i: int) -> tuple[VertexId, ...]:
    """Returns the vertices of Φᵢ outside A_{i−1} ∪ Aᵢ, i.e. those that belong to clique `i` only."""
    shared = (set(hole.clique(i)) & set(hole.clique(i - 1))) | (set(hole.clique(i)) & set(hole.clique(i + 1)))
    return tuple(v for v in hole.clique(i) if v not in shared)


def profile_of(ring: Ring) -> RingProfile:
    return ring.sizes


def is_balanced(p: RingProfile) -> bool:
    """A profile is balanced when every sector holds exactly ⌊m/2⌋ vertices."""
    return all(x == p.n for x in p)


def deficit_witness(p: RingProfile) -> int | None:
    """Finds the smallest i with aᵢ < ⌊m/2⌋ and aᵢ₋₁ + aᵢ ≤ 2⌊m/2⌋.

    Such an index exists for every unbalanced profile whose total is within the colorability bound m⌊m/2⌋;
    over-bound profiles may have none, in which case `None` is returned.

    Raises:
        InternalInvariant: if an unbalanced profile within the bound has no witness.
    """
    if is_balanced(p):
        return None

    for i in p.deficit_set():
        if p.at(i - 1) + p.at(i) <= 2 * p.n:
            return i

    if p.total <= p.bound:
        raise InternalInvariant(f"Unbalanced profile {p} has no deficit witness.", {"profile": list(p.a)})
    return None


def apply_move(p: RingProfile, mv: TransformationMove) -> RingProfile:
    """Moves one unit from sector `mv.from_index` to sector `mv.to_index`.

    Raises:
        InvalidMove: if an index is out of range or the result violates a profile invariant.

    Example:
        >>> str(apply_move(RingProfile([5, 2, 3, 4, 1, 4, 2]), TransformationMove(1, 7)))
        '(4,2,3,4,1,4,3)'
    """
    if mv.from_index > p.m or mv.to_index > p.m:
        raise InvalidMove(f"Move {mv} is out of range for m = {p.m}.")

    a = list(p.a)
    a[mv.from_index - 1] -= 1
    a[mv.to_index - 1] += 1
    try:
        return RingProfile(a)
    except InvalidRing as e:
        raise InvalidMove(f"Move {mv} is invalid on {p}: {e}") from e


def invert_move(mv: TransformationMove) -> TransformationMove:
    return mv.inverted()
