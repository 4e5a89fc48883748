"""Reads and writes instance, coloring, and trace documents; generates instances from ring profiles; emits the
coloring diagram as GraphML.

Instance schema: {"version": 1, "m": <int>, "cliques": [[<vertex>, ...], ...]}
Coloring schema: {"m": <int>, "colors": {<vertex>: <int>, ...}}
"""

from __future__ import annotations

import json
import random
from typing import Sequence

import networkx as nx

from cliquehole.hole_errors import (DomainError, InfeasibleSpec, InfeasibleTarget, InvalidHole, InvalidRing,
                                    ParseError)
from cliquehole.hole_models import (MIN_CLIQUES, CliqueHole, Coloring, IndependentSetFamilyIndex, RingProfile,
                                    private_vertex_id, sector_vertex_id, wrap)
from cliquehole.hole_utils import validate_clique_hole
from cliquehole.ring.ring_coloring import BalancingTrace

__author__ = "Boaty McBoatface, Planey McPlaneface"
__copyright__ = "Copyright 2023, Westmont College"
__credits__ = ["Boaty McBoatface", "Planey McPlaneface"]
__license__ = "MIT"
__email__ = "bmcboatface@westmont.edu"


INSTANCE_VERSION = 1
DEFAULT_INDENT = 2
MAX_DRAWS = 1000


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Malformed JSON: {e.msg}", e.lineno, e.colno) from e


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_instance(text: str, validate: bool = True) -> CliqueHole:
    """Parses an instance document into a `CliqueHole`.

    Args:
        text (str): the JSON document.
        validate (bool): when `True`, the hole must also pass `validate_clique_hole`.

    Raises:
        ParseError: if the text is not JSON or does not follow the instance schema.
        InvalidHole: if `validate` is set and the hole violates an m-clique hole invariant.
    """
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise ParseError("An instance document must be a JSON object.")
    if doc.get("version") != INSTANCE_VERSION:
        raise ParseError(f"Unsupported instance version {doc.get('version')!r} (expected {INSTANCE_VERSION}).")

    m, cliques = doc.get("m"), doc.get("cliques")
    if not _is_int(m):
        raise ParseError(f"Key [m] must be an integer, got {m!r}.")
    if not isinstance(cliques, list) or not all(isinstance(c, list) for c in cliques):
        raise ParseError("Key [cliques] must be a list of vertex lists.")
    if len(cliques) != m:
        raise ParseError(f"Key [m] says {m} but {len(cliques)} cliques are listed.")
    for i, clique in enumerate(cliques, start=1):
        if not all(isinstance(v, str) for v in clique):
            raise ParseError(f"Clique {i} holds a vertex id that is not a string.")

    hole = CliqueHole(cliques)
    if validate:
        report = validate_clique_hole(hole)
        if not report.is_valid:
            raise InvalidHole(report)
    return hole


def serialize_instance(hole: CliqueHole, indent: int = DEFAULT_INDENT) -> str:
    doc = {"version": INSTANCE_VERSION, "m": hole.m, "cliques": [list(c) for c in hole.cliques]}
    return json.dumps(doc, indent=indent, ensure_ascii=False) + "\n"


def parse_coloring(text: str) -> tuple[int, Coloring]:
    """Parses a coloring document into `(m, coloring)`.

    Raises:
        ParseError: if the text is not JSON or does not follow the coloring schema.
    """
    doc = _load_json(text)
    if not isinstance(doc, dict) or not _is_int(doc.get("m")) or not isinstance(doc.get("colors"), dict):
        raise ParseError('A coloring document must look like {"m": <int>, "colors": {<vertex>: <int>}}.')
    colors = doc["colors"]
    for v, c in colors.items():
        if not _is_int(c):
            raise ParseError(f"Color of {v} must be an integer, got {c!r}.")
    return doc["m"], Coloring(colors)


def serialize_coloring(coloring: Coloring, m: int, indent: int = DEFAULT_INDENT) -> str:
    doc = {"m": m, "colors": dict(coloring.assignment)}
    return json.dumps(doc, indent=indent, ensure_ascii=False) + "\n"


class GeneratorSpec:
    """Everything needed to generate a clique hole around a ring profile.

    Notes:
        Either `profile` or `target_sum` must be given; with only `target_sum`, the profile is drawn by
        `random_ring_profile` from `seed`.

    Attributes:
        _m (int): number of cliques.
        _profile (tuple[int, ...] | None): sector sizes a₁..a_m.
        _clique_sizes (tuple[int, ...] | None): |Φᵢ| for every clique; defaults to aᵢ₋₁ + aᵢ.
        _target_sum (int | None): Σaᵢ for a random profile.
        _seed (int): seed for the random profile.

    """
    def __init__(self, m: int, profile: Sequence[int] | None = None, clique_sizes: Sequence[int] | None = None,
                 target_sum: int | None = None, seed: int = 0) -> None:
        if profile is None and target_sum is None:
            raise InfeasibleSpec("A generator spec needs a profile or a target sum.")
        self._m: int = m
        self._profile: tuple[int, ...] | None = tuple(profile) if profile is not None else None
        self._clique_sizes: tuple[int, ...] | None = tuple(clique_sizes) if clique_sizes is not None else None
        self._target_sum: int | None = target_sum
        self._seed: int = seed

    @property
    def m(self) -> int:
        return self._m

    @property
    def profile(self) -> tuple[int, ...] | None:
        return self._profile

    @property
    def clique_sizes(self) -> tuple[int, ...] | None:
        return self._clique_sizes

    @property
    def target_sum(self) -> int | None:
        return self._target_sum

    @property
    def seed(self) -> int:
        return self._seed

    def resolve_profile(self) -> RingProfile:
        """Returns the profile to generate around, drawing a random one when none was given.

        Raises:
            InfeasibleSpec: if the given profile is not a valid ring profile for `m`.
        """
        if self._profile is None:
            try:
                return random_ring_profile(self._m, self._target_sum, self._seed)
            except InfeasibleTarget as e:
                raise InfeasibleSpec(str(e)) from e
        if len(self._profile) != self._m:
            raise InfeasibleSpec(f"Profile has {len(self._profile)} entries but m = {self._m}.")
        try:
            return RingProfile(self._profile)
        except InvalidRing as e:
            raise InfeasibleSpec(str(e)) from e


def hole_from_profile(spec: GeneratorSpec) -> CliqueHole:
    """Generates the clique hole Φᵢ = A_{i−1} ∪ Aᵢ ∪ Pᵢ around a ring profile.

    Sector vertices are named `a{i}_v{j}` and private vertices `p{i}_v{j}`. Extracting the ring of the result gives
    the profile back exactly.

    Raises:
        InfeasibleSpec: if the profile is invalid or some |Φᵢ| lies outside [aᵢ₋₁ + aᵢ, m].
    """
    p = spec.resolve_profile()
    m = p.m
    sizes = spec.clique_sizes if spec.clique_sizes is not None else tuple(p.at(i - 1) + p.at(i) for i in range(1, m + 1))
    if len(sizes) != m:
        raise InfeasibleSpec(f"Expected {m} clique sizes, got {len(sizes)}.")

    cliques = []
    for i in range(1, m + 1):
        low = p.at(i - 1) + p.at(i)
        if not low <= sizes[i - 1] <= m:
            raise InfeasibleSpec(f"|Phi_{i}| = {sizes[i - 1]} must lie in [{low}, {m}].")
        clique = [sector_vertex_id(wrap(i - 1, m), j) for j in range(1, p.at(i - 1) + 1)]
        clique += [sector_vertex_id(i, j) for j in range(1, p.at(i) + 1)]
        clique += [private_vertex_id(i, j) for j in range(1, sizes[i - 1] - low + 1)]
        cliques.append(clique)
    return CliqueHole(cliques)


def _fits(a: list[int], m: int) -> bool:
    return all(x >= 1 for x in a) and all(a[k - 1] + a[k] <= m for k in range(m))


def _draw_profile(m: int, rng: random.Random) -> list[int]:
    for _ in range(MAX_DRAWS):
        a = [rng.randint(1, m - 1) for _ in range(m)]
        if _fits(a, m):
            return a
    return [1] * m


def _transfer(a: list[int], m: int, rng: random.Random) -> None:
    src, dst = rng.randrange(m), rng.randrange(m)
    if src == dst or a[src] < 2:
        return
    a[src] -= 1
    a[dst] += 1
    if not _fits(a, m):
        a[src] += 1
        a[dst] -= 1


def _alternating_profile(m: int, target_sum: int, rng: random.Random) -> list[int]:
    n = m // 2
    shortfall = max(1, target_sum - m * n) if m % 2 else 1
    x = rng.randint(shortfall, m - shortfall)
    a = [x if k % 2 == 0 else m - x for k in range(m)]
    if m % 2:
        a[-1] = min(x, m - x)
    while sum(a) > target_sum:
        a[rng.choice([k for k in range(m) if a[k] >= 2])] -= 1
    return a


def random_ring_profile(m: int, target_sum: int, seed: int = 0) -> RingProfile:
    """Draws a valid ring profile with Σaᵢ = `target_sum`, deterministically from `seed`.

    Entries are drawn uniformly from 1..m−1 until the draw is a valid profile (all ones after `MAX_DRAWS` misses).
    The sum is then walked to the target one unit at a time through random valid increments or decrements; when no
    increment is valid, a random unit moves between two sectors instead. If the walk runs out of steps, a shrunken
    alternating profile of maximum sum takes its place. Finally 4m² random valid unit transfers mix the profile at
    the target sum.

    Args:
        m (int): number of sectors.
        target_sum (int): the requested Σaᵢ.
        seed (int): seed for the private random generator.

    Raises:
        InfeasibleTarget: unless 4 ≤ m and m ≤ target_sum ≤ ⌊m²/2⌋.
    """
    if m < MIN_CLIQUES:
        raise InfeasibleTarget(f"m must be at least {MIN_CLIQUES}, got {m}.")
    n = m // 2
    highest = m * n + (n if m % 2 else 0)
    if target_sum is None or not m <= target_sum <= highest:
        raise InfeasibleTarget(f"Target sum {target_sum} is outside [{m}, {highest}] for m = {m}.")

    rng = random.Random(seed)
    a = _draw_profile(m, rng)
    for _ in range(8 * m * m):
        gap = target_sum - sum(a)
        if gap == 0:
            break
        if gap < 0:
            a[rng.choice([k for k in range(m) if a[k] >= 2])] -= 1
            continue
        grow = [k for k in range(m) if a[k - 1] + a[k] < m and a[k] + a[(k + 1) % m] < m]
        if grow:
            a[rng.choice(grow)] += 1
        else:
            _transfer(a, m, rng)
    if sum(a) != target_sum:
        a = _alternating_profile(m, target_sum, rng)

    for _ in range(4 * m * m):
        _transfer(a, m, rng)
    return RingProfile(a)


def _format_set(indices: Sequence[int]) -> str:
    return "{" + ",".join(map(str, indices)) + "}" if indices else "∅"


def emit_trace(trace: BalancingTrace) -> str:
    """Formats a balancing trace as a tab-separated table: one column per state, rows |A₁|..|A_m|, s₁..s_m, B, i, j.

    Example:
        The first lines for the profile (5,2,3,4,1,4,2) replayed with picks 7, 2, 5, 5:

            Iterations  initial  Iter. 1  Iter. 2  Iter. 3  Iter. 4
            |A1|        5        4        4        4        3
    """
    records = trace.records
    m = trace.initial.m
    header = ["Iterations"] + ["initial" if r.iteration == 0 else f"Iter. {r.iteration}" for r in records]
    rows = [header]
    rows += [[f"|A{k}|"] + [str(r.profile[k - 1]) for r in records] for k in range(1, m + 1)]
    rows += [[f"s{k}"] + [str(r.counts[k - 1]) for r in records] for k in range(1, m + 1)]
    rows.append(["B"] + [_format_set(r.deficit_set) for r in records])
    rows.append(["i"] + ["-" if r.i is None else str(r.i) for r in records])
    rows.append(["j"] + ["-" if r.j is None else str(r.j) for r in records])
    return "\n".join("\t".join(row) for row in rows) + "\n"


def trace_document(trace: BalancingTrace) -> dict:
    return {
        "m": trace.initial.m,
        "n": trace.initial.n,
        "initial": list(trace.initial.a),
        "iterations": [
            {"iteration": r.iteration, "profile": list(r.profile), "counts": list(r.counts),
             "deficit_set": list(r.deficit_set), "i": r.i, "j": r.j}
            for r in trace.records
        ],
        "moves": [{"from": mv.from_index, "to": mv.to_index} for mv in trace.moves],
        "final_counts": list(trace.final_counts.s),
    }


def emit_trace_json(trace: BalancingTrace, indent: int = DEFAULT_INDENT) -> str:
    return json.dumps(trace_document(trace), indent=indent) + "\n"


def emit_diagram(m: int) -> str:
    """Emits the coloring diagram for odd `m` as GraphML.

    Nodes are the families Pi1..Pi{m} (annotated with their shape); each edge between Piᵢ and Piᵢ₊₂ is labeled with the
    substitution pair "i<->i-1" that turns a set of one family into a set of the other.

    Raises:
        DomainError: if `m` is even or below 5.
    """
    if m % 2 == 0 or m < 5:
        raise DomainError(f"The coloring diagram is defined for odd m >= 5, got m = {m}.")

    g = nx.Graph(name=f"coloring diagram m={m}")
    for i in range(1, m + 1):
        g.add_node(f"Pi{i}", shape=",".join(map(str, IndependentSetFamilyIndex(i, m).shape)))
    for i in range(1, m + 1):
        g.add_edge(f"Pi{i}", f"Pi{wrap(i + 2, m)}", substitution=f"{i}<->{wrap(i - 1, m)}")
    return "\n".join(nx.generate_graphml(g)) + "\n"
