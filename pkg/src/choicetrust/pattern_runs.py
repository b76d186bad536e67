"""Run extraction from pattern vectors via the stop/run scanning rules.

Reading a joint pattern vector left to right, a 0 is a "stop" and a 1 is a
"run". Every maximal block of 1s belongs to the n-bit row it lies in, and a
row's run total is the number of objects that row's object is preferred to
in that period. A row of n zeros yields run total 0. Per object and period
the totals collapse into the run pattern omega, where a zero total and
absence from the period's catalog both normalize to the empty-run symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .choice_model import ValidatedEpisode
from .errors import DomainError, UnknownObjectError
from .preference_graph import PatternVector, derive_matrix, flatten

__all__ = [
    "EPSILON",
    "RunCount",
    "RunPattern",
    "scan_runs",
    "omega",
    "single_period_rationality_pattern",
]


@dataclass(frozen=True)
class RunCount:
    """A per-period run total: either a positive integer or the empty run.

    ``value`` is ``None`` for the empty-run symbol, which covers both "no run
    observed" and "object absent that period". Stored as an integer count;
    the unary 1-string form is display only (:meth:`unary`).
    """

    value: int | None = None

    def __post_init__(self) -> None:
        if self.value is not None:
            v = int(self.value)
            if v < 1:
                raise DomainError(f"run count must be a positive integer or empty, got {self.value}")
            object.__setattr__(self, "value", v)

    @property
    def is_epsilon(self) -> bool:
        return self.value is None

    @property
    def numeric(self) -> int:
        """Integer view used for ordering; the empty run compares as 0."""
        return 0 if self.value is None else self.value

    def unary(self) -> str:
        return "" if self.value is None else "1" * self.value

    def __str__(self) -> str:
        return "ε" if self.value is None else str(self.value)


EPSILON = RunCount(None)


@dataclass(frozen=True)
class RunPattern:
    """Per-object run totals across periods, plus absence bookkeeping.

    ``absent_flags[k]`` distinguishes "present but never preferred" from
    "not offered in period k"; both render as the empty run downstream.
    """

    object: str
    slots: tuple[RunCount, ...]
    absent_flags: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.slots) != len(self.absent_flags):
            raise DomainError("slots and absent_flags must have equal length")
        for slot, absent in zip(self.slots, self.absent_flags):
            if absent and not slot.is_epsilon:
                raise DomainError("an absent period must carry the empty run")

    @property
    def periods(self) -> int:
        return len(self.slots)

    def render(self) -> str:
        """Report form, e.g. ``{3,ε}``."""
        return "{" + ",".join(str(s) for s in self.slots) + "}"


def scan_runs(pattern: PatternVector) -> tuple[int, ...]:
    """Scan a pattern vector and total the runs per (period, object) slot.

    Walks the bits of each n-bit row: 1s extend the current run, a 0 stops
    it and banks it for the row's object, and the row edge banks whatever is
    still open (a run never continues across rows or periods). An all-zero
    row banks nothing, so its slot totals 0.

    Returns period-major totals, catalog order within each period; length is
    periods * n.
    """
    n = pattern.n
    totals: list[int] = []
    for start in range(0, len(pattern.bits), n):
        total = 0
        run = 0
        for bit in pattern.bits[start : start + n]:
            if bit:
                run += 1
            else:
                total += run
                run = 0
        totals.append(total + run)
    return tuple(totals)


def omega(episodes: Sequence[ValidatedEpisode], obj: str) -> RunPattern:
    """Extract one object's run pattern across a period-sorted episode list.

    Slot k holds the object's run total in period k with 0 normalized to the
    empty run; a period whose catalog lacks the object contributes the empty
    run with its absence flag set.

    Raises:
        DomainError: Episodes are not strictly sorted by period.
        UnknownObjectError: The object is in no period's catalog.
    """
    episodes = tuple(episodes)
    if not episodes:
        raise DomainError("need at least one episode")
    periods = [e.period for e in episodes]
    if any(b <= a for a, b in zip(periods, periods[1:])):
        raise DomainError(f"episodes must be strictly sorted by period, got {periods}")

    slots: list[RunCount] = []
    absent: list[bool] = []
    seen = False
    for episode in episodes:
        if obj not in episode.ranks:
            slots.append(EPSILON)
            absent.append(True)
            continue
        seen = True
        matrix = derive_matrix(episode)
        totals = scan_runs(flatten(matrix))
        count = totals[matrix.order.index(obj)]
        slots.append(EPSILON if count == 0 else RunCount(count))
        absent.append(False)
    if not seen:
        raise UnknownObjectError(f"object {obj!r} appears in no period's catalog")
    return RunPattern(object=obj, slots=tuple(slots), absent_flags=tuple(absent))


def single_period_rationality_pattern(n: int) -> tuple[int, ...]:
    """Descending run sequence (n-1, ..., 1) of a strict single-period chain."""
    if n < 2:
        raise DomainError(f"need at least 2 objects, got {n}")
    return tuple(range(n - 1, 0, -1))
