"""Decides m-colorability of m-clique holes from the sum of consecutive clique intersections.

An m-clique hole is m-colorable exactly when Σ|Φᵢ ∩ Φᵢ₊₁| ≤ m⌊m/2⌋.
"""

from __future__ import annotations

from dataclasses import dataclass

from cliquehole.hole_errors import DomainError, InvalidInstance
from cliquehole.hole_models import MIN_CLIQUES, CliqueHole, Ring, RingProfile
from cliquehole.hole_utils import extract_ring

__author__ = "Boaty McBoatface, Planey McPlaneface"
__copyright__ = "Copyright 2023, Westmont College"
__credits__ = ["Boaty McBoatface", "Planey McPlaneface"]
__license__ = "MIT"
__email__ = "bmcboatface@westmont.edu"


@dataclass(frozen=True)
class ColorabilityVerdict:
    """Exact outcome of the colorability test.

    Attributes:
        m (int): number of cliques.
        n (int): ⌊m/2⌋.
        intersection_sum (int): Σ|Aᵢ|.
        bound (int): m·n.
        colorable (bool): `intersection_sum <= bound`.
        slack (int): `bound - intersection_sum`; zero for extreme instances, negative when not colorable.

    """
    m: int
    n: int
    intersection_sum: int
    bound: int
    colorable: bool
    slack: int

    @property
    def is_extreme(self) -> bool:
        return self.slack == 0

    def __str__(self) -> str:
        if self.colorable:
            return f"colorable: sum {self.intersection_sum} <= bound {self.bound} (slack {self.slack})"
        return f"not colorable: {self.intersection_sum} > {self.bound}"


def colorability_bound(m: int) -> int:
    """Returns m·⌊m/2⌋, the largest intersection sum an m-colorable m-clique hole can have.

    Raises:
        DomainError: if `m` < 4.
    """
    if m < MIN_CLIQUES:
        raise DomainError(f"m must be at least {MIN_CLIQUES}, got {m}.")
    return m * (m // 2)


def decide(instance: CliqueHole | Ring | RingProfile) -> ColorabilityVerdict:
    """Decides m-colorability without constructing a coloring.

    Args:
        instance: a clique hole (validated and reduced to its ring), a ring, or a bare ring profile.

    Raises:
        InvalidInstance: if `instance` is not a valid hole, ring, or profile.

    Example:
        >>> str(decide(RingProfile([5, 2, 3, 4, 1, 4, 2])))
        'colorable: sum 21 <= bound 21 (slack 0)'
    """
    if isinstance(instance, CliqueHole):
        profile = extract_ring(instance).sizes
    elif isinstance(instance, Ring):
        profile = instance.sizes
    elif isinstance(instance, RingProfile):
        profile = instance
    else:
        raise InvalidInstance(f"Cannot decide colorability of {type(instance).__name__}.")

    bound = colorability_bound(profile.m)
    return ColorabilityVerdict(
        m=profile.m,
        n=profile.n,
        intersection_sum=profile.total,
        bound=bound,
        colorable=profile.total <= bound,
        slack=bound - profile.total,
    )
