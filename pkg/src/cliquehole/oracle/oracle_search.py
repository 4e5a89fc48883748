"""Independent ground truth for the constructive colorings: exact k-colorability by backtracking,
maximum independent set enumeration and classification, and a proper-coloring checker.

Nothing here relies on the colorability bound or on the balancing construction; the graphs are built
straight from the clique (or sector) structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod

import networkx as nx
from loguru import logger

from cliquehole.hole_errors import (ClassificationAmbiguous, InvalidInstance, NotMaximumIndependent, NotOdd,
                                    TooLarge)
from cliquehole.hole_models import (CliqueHole, Coloring, IndependentSetFamilyIndex, Ring, RingProfile,
                                    VertexId, canonical, wrap)

__author__ = "Boaty McBoatface, Planey McPlaneface"
__copyright__ = "Copyright 2023, Westmont College"
__credits__ = ["Boaty McBoatface", "Planey McPlaneface"]
__license__ = "MIT"
__email__ = "bmcboatface@westmont.edu"


DEFAULT_MAX_VERTICES = 26

AdjacencyGraph = nx.Graph


@dataclass(frozen=True)
class ColoringViolation:
    kind: str
    vertices: tuple[VertexId, ...]
    message: str

    def __str__(self) -> str:
        return self.message


def build_graph(instance: CliqueHole | Ring) -> AdjacencyGraph:
    """Builds the vertex-level graph: the union of the cliques Φᵢ for a hole, of the cliques Aᵢ ∪ Aᵢ₊₁ for a ring.

    Vertices are inserted in canonical order so every traversal of the graph is deterministic.
    """
    if isinstance(instance, CliqueHole):
        vertices = instance.vertices
        cliques = instance.cliques
    elif isinstance(instance, Ring):
        vertices = instance.vertices
        cliques = [instance.sector(i) + instance.sector(i + 1) for i in range(1, instance.m + 1)]
    else:
        raise InvalidInstance(f"Cannot build a graph from {type(instance).__name__}.")

    g = nx.Graph()
    g.add_nodes_from(vertices)
    for clique in cliques:
        g.add_edges_from(combinations(sorted(clique), 2))
    return g


def _check_size(g: AdjacencyGraph, max_vertices: int) -> None:
    if g.number_of_nodes() > max_vertices:
        raise TooLarge(f"Exact search is limited to {max_vertices} vertices, the graph has {g.number_of_nodes()}.",
                       {"vertices": g.number_of_nodes(), "max_vertices": max_vertices})


def _first_max_clique(g: AdjacencyGraph) -> list[VertexId]:
    clique, _ = nx.max_weight_clique(g, weight=None)
    return sorted(clique)


def is_k_colorable(g: AdjacencyGraph, k: int,
                   max_vertices: int = DEFAULT_MAX_VERTICES) -> tuple[bool, Coloring | None]:
    """Decides exactly whether `g` has a proper coloring with at most `k` colors.

    The vertices of one maximum clique are fixed to colors 0, 1, ... first; the remaining vertices are colored by
    backtracking, always branching on the uncolored vertex with the most distinct neighbour colors (ties broken by
    higher degree, then canonical order), and never opening more than one new color at a time.

    Args:
        g (AdjacencyGraph): graph to color.
        k (int): number of available colors.
        max_vertices (int): size guard; larger graphs are refused rather than searched.

    Returns:
        `(True, witness)` with a proper coloring using colors `0..k-1`, or `(False, None)`.

    Raises:
        TooLarge: if `g` has more than `max_vertices` vertices.
    """
    _check_size(g, max_vertices)
    vertices = sorted(g.nodes)
    if not vertices:
        return True, Coloring({})
    if k <= 0:
        return False, None

    clique = _first_max_clique(g)
    if len(clique) > k:
        return False, None

    logger.debug("exact search: {} vertices, k = {}, fixed clique of size {}", len(vertices), k, len(clique))
    adj = {v: set(g[v]) for v in vertices}
    rank = {v: idx for idx, v in enumerate(vertices)}
    colors: dict[VertexId, int] = {v: c for c, v in enumerate(clique)}

    def select() -> VertexId | None:
        best, best_key = None, None
        for v in vertices:
            if v in colors:
                continue
            key = (len({colors[u] for u in adj[v] if u in colors}), len(adj[v]), -rank[v])
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def search(opened: int) -> bool:
        v = select()
        if v is None:
            return True
        forbidden = {colors[u] for u in adj[v] if u in colors}
        for c in range(min(k, opened + 1)):
            if c in forbidden:
                continue
            colors[v] = c
            if search(max(opened, c + 1)):
                return True
            del colors[v]
        return False

    if search(len(clique)):
        return True, Coloring(colors)
    return False, None


def chromatic_number(g: AdjacencyGraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    """Returns the least k for which `g` is k-colorable, scanning upward from the maximum clique size."""
    _check_size(g, max_vertices)
    if g.number_of_nodes() == 0:
        return 0

    k = len(_first_max_clique(g))
    while not is_k_colorable(g, k, max_vertices)[0]:
        k += 1
    return k


def enumerate_max_independent_sets(ring: Ring, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[tuple[VertexId, ...]]:
    """Lists every independent set of size ⌊m/2⌋ of an odd ring, in canonical order.

    The search walks the sectors in order, taking at most one vertex per sector and skipping the sector after
    every one it takes; sectors `m` and `1` are never both taken.

    Raises:
        NotOdd: if the ring has an even number of sectors.
        TooLarge: if the ring has more than `max_vertices` vertices.
    """
    if ring.m % 2 == 0:
        raise NotOdd(f"Maximum independent set families are defined for odd m, got m = {ring.m}.")
    if len(ring.vertices) > max_vertices:
        raise TooLarge(f"Enumeration is limited to {max_vertices} vertices, the ring has {len(ring.vertices)}.")

    m, n = ring.m, ring.m // 2
    found: list[tuple[VertexId, ...]] = []

    def extend(s: int, first_taken: bool, chosen: list[VertexId]) -> None:
        if len(chosen) == n:
            found.append(canonical(chosen))
            return
        if s > m:
            return
        extend(s + 1, first_taken, chosen)
        if s == m and first_taken:
            return
        for v in ring.sector(s):
            extend(s + 2, first_taken or s == 1, chosen + [v])

    extend(1, False, [])
    return sorted(found)


def classify_mis(ring: Ring, vertex_set) -> IndependentSetFamilyIndex:
    """Returns the unique family Πᵢ holding the given maximum independent set.

    Raises:
        NotMaximumIndependent: if `vertex_set` is not an independent set of size ⌊m/2⌋ of `ring`.
        ClassificationAmbiguous: if no family, or more than one, matches.
    """
    if ring.m % 2 == 0:
        raise NotOdd(f"Maximum independent set families are defined for odd m, got m = {ring.m}.")

    m, n = ring.m, ring.m // 2
    vertex_set = canonical(vertex_set)
    sectors = [ring.sector_of(v) for v in vertex_set]
    if None in sectors:
        raise NotMaximumIndependent(f"{vertex_set} holds vertices outside the ring.")
    if len(vertex_set) != n or len(set(sectors)) != n:
        raise NotMaximumIndependent(f"{vertex_set} is not an independent set of size {n}.")
    if any(wrap(s + 1, m) in sectors for s in sectors):
        raise NotMaximumIndependent(f"{vertex_set} touches two adjacent sectors.")

    touched = set(sectors)
    matches = [i for i in range(1, m + 1) if set(IndependentSetFamilyIndex(i, m).shape) == touched]
    if len(matches) != 1:
        raise ClassificationAmbiguous(f"{vertex_set} matches families {matches}.",
                                      {"set": list(vertex_set), "families": matches})
    return IndependentSetFamilyIndex(matches[0], m)


def mis_family_size(profile: RingProfile, i: int) -> int:
    """|Πᵢ| = ∏_{k<n} a_{i+2k}."""
    return prod(profile.at(i + 2 * k) for k in range(profile.n))


def substitute_in_family(ring: Ring, vertex_set, forward: bool = True,
                         vertex: VertexId | None = None) -> tuple[VertexId, ...]:
    """Turns a set of Πᵢ into a set of a neighbouring family by swapping exactly one vertex.

    Forward, the vertex of Aᵢ is replaced by a vertex of Aᵢ₋₁ and the result lies in Πᵢ₊₂; backward, the vertex
    of Aᵢ₋₃ is replaced by a vertex of Aᵢ₋₂ and the result lies in Πᵢ₋₂.

    Args:
        ring (Ring): the odd ring both sets live in.
        vertex_set: a maximum independent set of `ring`.
        forward (bool): direction of the substitution.
        vertex (VertexId | None): the replacement vertex; defaults to the first vertex of the receiving sector.

    Raises:
        NotMaximumIndependent: if `vertex_set` is not a maximum independent set of `ring`.
        InvalidInstance: if `vertex` does not belong to the receiving sector.
    """
    i = classify_mis(ring, vertex_set).pi_index
    leaving, entering = (i, i - 1) if forward else (i - 3, i - 2)
    leaving, entering = wrap(leaving, ring.m), wrap(entering, ring.m)

    replacement = vertex if vertex is not None else ring.sector(entering)[0]
    if ring.sector_of(replacement) != entering:
        raise InvalidInstance(f"{replacement} is not a vertex of sector {entering}.")

    kept = [v for v in vertex_set if ring.sector_of(v) != leaving]
    return canonical(kept + [replacement])


def verify_coloring(g: AdjacencyGraph, c: Coloring, k: int) -> tuple[bool, list[ColoringViolation]]:
    """Checks that `c` colors every vertex of `g` with an index below `k` and leaves no edge monochromatic.

    Returns:
        `(True, [])` for a proper coloring, otherwise `(False, violations)` listing every problem found.
    """
    violations: list[ColoringViolation] = []

    for v in sorted(g.nodes):
        if v not in c:
            violations.append(ColoringViolation("not-total", (v,), f"not total: {v} has no color"))
        elif not 0 <= c.color_of(v) < k:
            violations.append(ColoringViolation(
                "out-of-range", (v,), f"color {c.color_of(v)} of {v} is outside 0..{k - 1}"))

    for u, v in sorted(tuple(sorted(e)) for e in g.edges):
        if u in c and v in c and c.color_of(u) == c.color_of(v):
            violations.append(ColoringViolation(
                "monochromatic-edge", (u, v), f"edge {u}-{v} has both ends colored {c.color_of(u)}"))

    return not violations, violations
