"""Data models for m-clique holes, their rings, and the artifacts of coloring them.

All indices exposed by these models are 1-based and wrap around modulo `m` (index `m + 1` is index `1`,
index `0` is index `m`). Vertex sets are stored as lexicographically sorted tuples so every model has a
single canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from cliquehole.hole_errors import InvalidInstance, InvalidRing

__author__ = "Boaty McBoatface, Planey McPlaneface"
__copyright__ = "Copyright 2023, Westmont College"
__credits__ = ["Boaty McBoatface", "Planey McPlaneface"]
__license__ = "MIT"
__email__ = "bmcboatface@westmont.edu"


MIN_CLIQUES = 4  # A hole has at least four vertices.
VIRTUAL_PREFIX = "~virtual:"  # Reserved for padding vertices; never valid in an input instance.
TRUNCATION_THRESHOLD = 20  # Constant used for formatting __str__ outputs.

VertexId = str


def wrap(i: int, m: int) -> int:
    """Maps any integer index onto the 1-based cyclic range `1..m`."""
    return (i - 1) % m + 1


def canonical(vertices: Iterable[VertexId]) -> tuple[VertexId, ...]:
    """Returns the vertices as a sorted tuple without duplicates."""
    return tuple(sorted(set(vertices)))


class CliqueHole:
    """The clique sequence (Φ₁, ..., Φ_m) that defines an instance.

    Construction does not validate the hole structure; use `hole_utils.validate_clique_hole` for that.

    Attributes:
        _cliques (tuple[tuple[VertexId, ...], ...]): canonical vertex tuple of every clique, in sequence order.

    """
    def __init__(self, cliques: Sequence[Iterable[VertexId]]) -> None:
        self._cliques: tuple[tuple[VertexId, ...], ...] = tuple(canonical(c) for c in cliques)
        for clique in self._cliques:
            for v in clique:
                if not isinstance(v, str):
                    raise InvalidInstance(f"Vertex ids must be strings, got {v!r}.")

    def __eq__(self, other) -> bool:
        if other is None or not isinstance(other, CliqueHole):
            return False
        return self._cliques == other.cliques

    def __hash__(self) -> int:
        return hash(self._cliques)

    def __str__(self) -> str:
        return "CliqueHole(m={}, sizes={})".format(self.m, [len(c) for c in self._cliques])

    @property
    def m(self) -> int:
        return len(self._cliques)

    @property
    def cliques(self) -> tuple[tuple[VertexId, ...], ...]:
        return self._cliques

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return canonical(v for c in self._cliques for v in c)

    def clique(self, i: int) -> tuple[VertexId, ...]:
        """Returns Φᵢ (1-based, wrapping)."""
        return self._cliques[wrap(i, self.m) - 1]


class RingProfile:
    """The cardinality vector (|A₁|, ..., |A_m|) of a ring.

    Notes:
        A `RingProfile` only enforces the structural invariants (every entry positive, every cyclic pair sum at
        most `m`); profiles whose total exceeds the colorability bound are still valid profiles.

    Attributes:
        _a (tuple[int, ...]): the entries, stored 0-based.

    """
    def __init__(self, a: Sequence[int]) -> None:
        self._a: tuple[int, ...] = tuple(int(x) for x in a)
        m = len(self._a)
        if m < MIN_CLIQUES:
            raise InvalidRing(f"A ring needs at least {MIN_CLIQUES} sectors, got {m}.")
        for i in range(1, m + 1):
            if self.at(i) < 1:
                raise InvalidRing(f"Sector {i} is empty in profile {self}.")
            if self.at(i) + self.at(i + 1) > m:
                raise InvalidRing("Sectors ({}, {}) sum to {} > m = {} in profile {}.".format(
                    i, wrap(i + 1, m), self.at(i) + self.at(i + 1), m, self))

    def __eq__(self, other) -> bool:
        if other is None or not isinstance(other, RingProfile):
            return False
        return self._a == other.a

    def __hash__(self) -> int:
        return hash(self._a)

    def __len__(self) -> int:
        return len(self._a)

    def __iter__(self) -> Iterator[int]:
        return iter(self._a)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self._a)) + ")"

    def __repr__(self) -> str:
        return f"RingProfile({self})"

    @property
    def m(self) -> int:
        return len(self._a)

    @property
    def a(self) -> tuple[int, ...]:
        return self._a

    @property
    def n(self) -> int:
        return self.m // 2

    @property
    def total(self) -> int:
        return sum(self._a)

    @property
    def bound(self) -> int:
        return self.m * self.n

    @property
    def is_extreme(self) -> bool:
        return self.total == self.bound

    def at(self, i: int) -> int:
        """Returns aᵢ (1-based, wrapping)."""
        return self._a[wrap(i, self.m) - 1]

    def deficit_set(self) -> tuple[int, ...]:
        """Returns B = {i : aᵢ < n} in ascending order."""
        return tuple(i for i in range(1, self.m + 1) if self.at(i) < self.n)

    def total_deficit(self) -> int:
        """Returns Σ_{i∈B} (n − aᵢ)."""
        return sum(self.n - self.at(i) for i in self.deficit_set())


class Ring:
    """The induced structure (A₁, ..., A_m) on the vertices shared by consecutive cliques.

    Attributes:
        _sectors (tuple[tuple[VertexId, ...], ...]): canonical vertex tuple of every sector.
        _origin (CliqueHole | None): the hole the ring was extracted from, if any.
        _sector_of (dict[VertexId, int]): 1-based sector index of every ring vertex.

    """
    def __init__(self, sectors: Sequence[Iterable[VertexId]], origin: CliqueHole | None = None) -> None:
        self._sectors: tuple[tuple[VertexId, ...], ...] = tuple(canonical(s) for s in sectors)
        self._origin: CliqueHole | None = origin
        self._profile: RingProfile = RingProfile([len(s) for s in self._sectors])
        self._sector_of: dict[VertexId, int] = {}
        for i, sector in enumerate(self._sectors, start=1):
            for v in sector:
                if v in self._sector_of:
                    raise InvalidRing(f"Vertex {v} appears in sectors {self._sector_of[v]} and {i}.")
                self._sector_of[v] = i

    @classmethod
    def from_profile(cls, profile: RingProfile | Sequence[int]) -> Ring:
        """Builds a ring whose sector `i` holds the vertices `a{i}_v1`, ..., `a{i}_v{aᵢ}`."""
        sizes = profile.a if isinstance(profile, RingProfile) else tuple(profile)
        return cls([[sector_vertex_id(i, j) for j in range(1, size + 1)] for i, size in enumerate(sizes, start=1)])

    def __eq__(self, other) -> bool:
        if other is None or not isinstance(other, Ring):
            return False
        return self._sectors == other.sectors

    def __hash__(self) -> int:
        return hash(self._sectors)

    def __str__(self) -> str:
        return f"Ring(m={self.m}, profile={self._profile})"

    @property
    def m(self) -> int:
        return len(self._sectors)

    @property
    def sectors(self) -> tuple[tuple[VertexId, ...], ...]:
        return self._sectors

    @property
    def origin(self) -> CliqueHole | None:
        return self._origin

    @property
    def sizes(self) -> RingProfile:
        return self._profile

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return tuple(sorted(self._sector_of))

    def sector(self, i: int) -> tuple[VertexId, ...]:
        """Returns Aᵢ (1-based, wrapping)."""
        return self._sectors[wrap(i, self.m) - 1]

    def sector_of(self, v: VertexId) -> int | None:
        """Returns the 1-based index of the sector holding `v`, or `None` if `v` is not a ring vertex."""
        return self._sector_of.get(v)

    def with_extra(self, extra: Mapping[int, Iterable[VertexId]]) -> Ring:
        """Returns a copy of this ring with the given vertices added to the given 1-based sectors."""
        sectors = [list(s) for s in self._sectors]
        for i, vertices in extra.items():
            sectors[wrap(i, self.m) - 1].extend(vertices)
        return Ring(sectors, self._origin)


def sector_vertex_id(i: int, j: int) -> VertexId:
    """Canonical name of the `j`-th vertex of sector `i`, v_{i,j}."""
    return f"a{i}_v{j}"


def private_vertex_id(i: int, j: int) -> VertexId:
    """Canonical name of the `j`-th vertex that belongs to clique `i` only."""
    return f"p{i}_v{j}"


class TransformationMove:
    """Moves one unit of cardinality from sector `from_index` to sector `to_index`.

    Notes:
        A batch move walks from `from_index` to `to_index` in `direction` (-1 walks down through
        `from_index - 1`, `from_index - 2`, ...; +1 walks up) and decomposes into `steps(m)` unit
        transformations between neighbouring sectors.

    Attributes:
        _from_index (int): 1-based sector losing a unit.
        _to_index (int): 1-based sector gaining a unit.
        _direction (int): -1 or +1.

    """
    def __init__(self, from_index: int, to_index: int, direction: int = -1) -> None:
        if from_index < 1 or to_index < 1:
            raise InvalidInstance("Move indices are 1-based.")
        if from_index == to_index:
            raise InvalidInstance(f"A move needs two distinct sectors, got {from_index} twice.")
        if direction not in (-1, 1):
            raise InvalidInstance(f"Direction must be -1 or +1, got {direction}.")
        self._from_index: int = from_index
        self._to_index: int = to_index
        self._direction: int = direction

    def __eq__(self, other) -> bool:
        if other is None or not isinstance(other, TransformationMove):
            return False
        return (self._from_index, self._to_index, self._direction) == \
            (other.from_index, other.to_index, other.direction)

    def __hash__(self) -> int:
        return hash((self._from_index, self._to_index, self._direction))

    def __str__(self) -> str:
        return f"{self._from_index}->{self._to_index}"

    def __repr__(self) -> str:
        return f"TransformationMove({self._from_index}, {self._to_index}, {self._direction})"

    @property
    def from_index(self) -> int:
        return self._from_index

    @property
    def to_index(self) -> int:
        return self._to_index

    @property
    def direction(self) -> int:
        return self._direction

    def inverted(self) -> TransformationMove:
        return TransformationMove(self._to_index, self._from_index, -self._direction)

    def steps(self, m: int) -> int:
        """Number of unit transformations this move takes on a ring with `m` sectors."""
        return (self._from_index - self._to_index) * -self._direction % m

    def single_steps(self, m: int) -> list[TransformationMove]:
        """Decomposes the move into unit transformations between neighbouring sectors, in walking order."""
        moves = []
        k = self._from_index
        for _ in range(self.steps(m)):
            nxt = wrap(k + self._direction, m)
            moves.append(TransformationMove(k, nxt, self._direction))
            k = nxt
        return moves


class SelectionCounts:
    """The vector (s₁, ..., s_m): how many of the chosen maximum independent sets come from each family Πᵢ."""
    def __init__(self, s: Sequence[int]) -> None:
        self._s: tuple[int, ...] = tuple(int(x) for x in s)
        if any(x < 0 for x in self._s):
            raise InvalidInstance(f"Selection counts must be non-negative, got {self}.")

    def __eq__(self, other) -> bool:
        if other is None or not isinstance(other, SelectionCounts):
            return False
        return self._s == other.s

    def __hash__(self) -> int:
        return hash(self._s)

    def __iter__(self) -> Iterator[int]:
        return iter(self._s)

    def __len__(self) -> int:
        return len(self._s)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self._s)) + ")"

    def __repr__(self) -> str:
        return f"SelectionCounts({self})"

    @property
    def m(self) -> int:
        return len(self._s)

    @property
    def s(self) -> tuple[int, ...]:
        return self._s

    @property
    def total(self) -> int:
        return sum(self._s)

    def at(self, i: int) -> int:
        return self._s[wrap(i, self.m) - 1]


class IndependentSetFamilyIndex:
    """Identifies the family Πᵢ of maximum independent sets of shape {i, i+2, ..., i+2(n−1)}.

    Every set in Πᵢ holds exactly one vertex of each sector in `shape` and misses sectors i−2 and i−1.

    """
    def __init__(self, pi_index: int, m: int) -> None:
        if m < MIN_CLIQUES or not 1 <= pi_index <= m:
            raise InvalidInstance(f"Family index {pi_index} is out of range for m = {m}.")
        self._pi_index: int = pi_index
        self._m: int = m

    def __eq__(self, other) -> bool:
        if other is None or not isinstance(other, IndependentSetFamilyIndex):
            return False
        return (self._pi_index, self._m) == (other.pi_index, other.m)

    def __hash__(self) -> int:
        return hash((self._pi_index, self._m))

    def __str__(self) -> str:
        return "Pi{}{{{}}}".format(self._pi_index, ",".join(map(str, self.shape)))

    def __repr__(self) -> str:
        return f"IndependentSetFamilyIndex({self._pi_index}, {self._m})"

    @property
    def pi_index(self) -> int:
        return self._pi_index

    @property
    def m(self) -> int:
        return self._m

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(wrap(self._pi_index + 2 * k, self._m) for k in range(self._m // 2))


class Coloring:
    """A map from vertex ids to 0-based color indices.

    Attributes:
        _assignment (Mapping[VertexId, int]): read-only view of the assignment, keys in canonical order.

    """
    def __init__(self, assignment: Mapping[VertexId, int]) -> None:
        self._assignment: Mapping[VertexId, int] = MappingProxyType(
            {v: int(assignment[v]) for v in sorted(assignment)})

    def __eq__(self, other) -> bool:
        if other is None or not isinstance(other, Coloring):
            return False
        return dict(self._assignment) == dict(other.assignment)

    def __hash__(self) -> int:
        return hash(tuple(self._assignment.items()))

    def __len__(self) -> int:
        return len(self._assignment)

    def __contains__(self, v: VertexId) -> bool:
        return v in self._assignment

    def __str__(self) -> str:
        items = list(self._assignment.items())
        is_truncate = len(items) >= TRUNCATION_THRESHOLD
        shown = ", ".join(f"{v}:{c}" for v, c in items[:TRUNCATION_THRESHOLD])
        return "Coloring({}{}; {} colors)".format(shown, " ..." if is_truncate else "", self.num_colors)

    @property
    def assignment(self) -> Mapping[VertexId, int]:
        return self._assignment

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return tuple(self._assignment)

    @property
    def colors_used(self) -> tuple[int, ...]:
        return tuple(sorted(set(self._assignment.values())))

    @property
    def num_colors(self) -> int:
        return len(self.colors_used)

    def color_of(self, v: VertexId) -> int:
        return self._assignment[v]

    def restricted(self, vertices: Iterable[VertexId]) -> Coloring:
        keep = set(vertices)
        return Coloring({v: c for v, c in self._assignment.items() if v in keep})

    def without_prefix(self, prefix: str) -> Coloring:
        return Coloring({v: c for v, c in self._assignment.items() if not v.startswith(prefix)})

    def merged(self, other: Mapping[VertexId, int]) -> Coloring:
        """Returns a coloring holding this assignment plus `other`; entries of `other` win on conflict."""
        combined = dict(self._assignment)
        combined.update(other)
        return Coloring(combined)


@dataclass(frozen=True)
class TraceRecord:
    """One column of the balancing table: the state before a pick, plus the pick made from it.

    `i` and `j` are `None` on the final (balanced) column.
    """
    iteration: int
    profile: tuple[int, ...]
    counts: tuple[int, ...]
    deficit_set: tuple[int, ...]
    i: int | None = None
    j: int | None = None


@dataclass(frozen=True)
class ValidationIssue:
    code: str
    message: str
    indices: tuple[int, ...] = ()

    def __str__(self) -> str:
        return self.message


class ValidationReport:
    """Every invariant a clique hole violates; an empty report means the hole is valid."""
    def __init__(self, issues: Iterable[ValidationIssue] = ()) -> None:
        self._issues: tuple[ValidationIssue, ...] = tuple(issues)

    def __len__(self) -> int:
        return len(self._issues)

    def __iter__(self) -> Iterator[ValidationIssue]:
        return iter(self._issues)

    def __str__(self) -> str:
        if not self._issues:
            return "valid"
        return "\n".join(f"  - {issue}" for issue in self._issues)

    @property
    def issues(self) -> tuple[ValidationIssue, ...]:
        return self._issues

    @property
    def is_valid(self) -> bool:
        return not self._issues

    @property
    def codes(self) -> tuple[str, ...]:
        return tuple(issue.code for issue in self._issues)
