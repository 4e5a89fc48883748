"""Choice strategies for the deficit index picked in each balancing iteration.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Iterable

from loguru import logger

from cliquehole.hole_errors import ScriptedPickError
from cliquehole.hole_models import RingProfile

__author__ = "Boaty McBoatface, Planey McPlaneface"
__copyright__ = "Copyright 2023, Westmont College"
__credits__ = ["Boaty McBoatface", "Planey McPlaneface"]
__license__ = "MIT"
__email__ = "bmcboatface@westmont.edu"


class IndexPicker(ABC):
    """Picks one index among the qualifying deficit indices of a balancing iteration.

    A qualifying index `i` has aᵢ < ⌊m/2⌋ and aᵢ₋₁ + aᵢ ≤ 2⌊m/2⌋; any of them keeps the balancing valid.

    """
    @abstractmethod
    def pick(self, profile: RingProfile, candidates: tuple[int, ...]) -> int:
        """Returns one of `candidates` (never empty, ascending, 1-based) for the current `profile`."""
        pass

    def finish(self) -> None:
        """Called once the ring is balanced; the default does nothing."""
        pass


class SmallestIndexPicker(IndexPicker):
    """Deterministic default: always the smallest qualifying index."""
    def pick(self, profile: RingProfile, candidates: tuple[int, ...]) -> int:
        return candidates[0]


class ScriptedPicker(IndexPicker):
    """Replays an explicit sequence of picks, e.g. to reproduce a published trace.

    Attributes:
        _sequence (tuple[int, ...]): the scripted 1-based indices.
        _cursor (int): number of picks consumed so far.

    """
    def __init__(self, sequence: Iterable[int]) -> None:
        self._sequence: tuple[int, ...] = tuple(int(i) for i in sequence)
        self._cursor: int = 0

    def __str__(self) -> str:
        return "ScriptedPicker({}; {} used)".format(",".join(map(str, self._sequence)), self._cursor)

    @property
    def sequence(self) -> tuple[int, ...]:
        return self._sequence

    @property
    def consumed(self) -> int:
        return self._cursor

    def pick(self, profile: RingProfile, candidates: tuple[int, ...]) -> int:
        if self._cursor >= len(self._sequence):
            raise ScriptedPickError("Scripted sequence {} ran out at iteration {} on {} (candidates {}).".format(
                self._sequence, self._cursor + 1, profile, candidates))

        i = self._sequence[self._cursor]
        if i not in candidates:
            raise ScriptedPickError("Scripted pick {} at iteration {} does not qualify on {} (candidates {}).".format(
                i, self._cursor + 1, profile, candidates))
        self._cursor += 1
        return i

    def finish(self) -> None:
        if self._cursor < len(self._sequence):
            logger.warning("scripted picks {} were not used", self._sequence[self._cursor:])
