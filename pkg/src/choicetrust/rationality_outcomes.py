"""The rationality outcome set, its rank classes, bars, and degrees.

For t periods with n_k objects each, the outcome set is the full Cartesian
product of the per-period run alphabets {empty, 1, ..., n_k - 1}. Two-period
patterns additionally bin by the signed difference of their run totals
(second minus first, empty counting as 0), which partitions the product into
2n - 1 bars whose frequencies form the degree-of-membership table.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError
from .pattern_runs import EPSILON, RunCount

__all__ = [
    "RankClass",
    "TauPattern",
    "Bin",
    "BinTable",
    "Degree",
    "slot_alphabet",
    "build_tau",
    "count_tau_two_periods",
    "two_period_decomposition",
    "classify_rank",
    "signed_difference",
    "bar_label",
    "bin_pattern",
    "bin_table",
    "bin_frequencies",
    "membership",
]

MEMBERSHIP_VARIANTS = ("minmax", "smoothed")

# Canonical bar letters of the two-period tree; differences beyond +/-3
# (catalogs larger than four) fall back to the signed difference itself.
_BAR_LETTERS = {-3: "C", -2: "B", -1: "A", 0: "D", 1: "E", 2: "F", 3: "G"}


class RankClass(str, Enum):
    REFLEXIVE = "Reflexive"
    INCREASING = "Increasing"
    DECREASING = "Decreasing"
    MIXED = "Mixed"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class TauPattern:
    """One admissible run tuple with its rank class and (for t=2) bar."""

    slots: tuple[RunCount, ...]
    rank_class: RankClass
    bin: str | None

    @property
    def periods(self) -> int:
        return len(self.slots)

    def render(self) -> str:
        return "{" + ",".join(str(s) for s in self.slots) + "}"


@dataclass(frozen=True)
class Bin:
    """One bar of the two-period tree: all patterns sharing a difference."""

    difference: int
    label: str
    patterns: tuple[TauPattern, ...]

    @property
    def frequency(self) -> int:
        return len(self.patterns)


@dataclass(frozen=True)
class BinTable:
    """Bars of a two-period outcome set, ascending by signed difference."""

    ns: tuple[int, int]
    bins: tuple[Bin, ...]

    def by_label(self, label: str) -> Bin:
        for b in self.bins:
            if b.label == label:
                return b
        raise DomainError(f"no bar labelled {label!r} in this table")

    def by_difference(self, d: int) -> Bin:
        for b in self.bins:
            if b.difference == d:
                return b
        raise DomainError(f"no bar with difference {d} in this table")

    @property
    def min_frequency(self) -> int:
        return min(b.frequency for b in self.bins)

    @property
    def max_frequency(self) -> int:
        return max(b.frequency for b in self.bins)


@dataclass(frozen=True)
class Degree:
    """A membership degree plus a flag for degenerate (all-equal) tables."""

    value: Fraction
    degenerate: bool = False


def slot_alphabet(n: int) -> tuple[RunCount, ...]:
    """Admissible run totals for one period with n objects: empty, 1..n-1."""
    if n < 2:
        raise DomainError(f"need at least 2 objects per period, got {n}")
    return (EPSILON,) + tuple(RunCount(k) for k in range(1, n))


def classify_rank(slots: Sequence[RunCount]) -> RankClass:
    """Rank a run tuple: reflexive, then increasing, decreasing, mixed.

    The empty run compares as 0. Reflexive (all slots equal) is the highest
    rank; increasing means nondecreasing with at least one strict rise,
    decreasing the mirror image, and mixed has steps both ways.
    """
    values = [s.numeric for s in slots]
    ups = any(b > a for a, b in zip(values, values[1:]))
    downs = any(b < a for a, b in zip(values, values[1:]))
    if not ups and not downs:
        return RankClass.REFLEXIVE
    if ups and downs:
        return RankClass.MIXED
    return RankClass.INCREASING if ups else RankClass.DECREASING


def signed_difference(slots: Sequence[RunCount]) -> int:
    """Second-period total minus first (empty as 0); defined for t=2 only."""
    if len(slots) != 2:
        raise DomainError(f"signed difference needs exactly 2 periods, got {len(slots)}")
    return slots[1].numeric - slots[0].numeric


def bar_label(d: int) -> str:
    return _BAR_LETTERS.get(d, f"{d:+d}")


def bin_pattern(slots: Sequence[RunCount]) -> str:
    """Bar label of a two-period pattern, determined by its signed difference."""
    return bar_label(signed_difference(slots))


def build_tau(ns: Sequence[int]) -> tuple[TauPattern, ...]:
    """Enumerate the full rationality outcome set for per-period sizes ns.

    The product includes the all-empty tuple; for t periods of a fixed n the
    set has exactly n**t members. Listing order is deterministic: the empty
    run sorts first, then ascending totals, later periods varying fastest.
    """
    ns = tuple(int(n) for n in ns)
    if not ns:
        raise DomainError("need at least one period")
    alphabets = [slot_alphabet(n) for n in ns]
    two_period = len(ns) == 2
    out = []
    for combo in itertools.product(*alphabets):
        out.append(
            TauPattern(
                slots=combo,
                rank_class=classify_rank(combo),
                bin=bin_pattern(combo) if two_period else None,
            )
        )
    return tuple(out)


def two_period_decomposition(n: int) -> tuple[int, int]:
    """Counts of strictly-decreasing and nondecreasing two-period patterns.

    Over the alphabet {empty, 1, ..., n-1} there are C(n, 2) strictly
    decreasing pairs and n(n+1)/2! nondecreasing ones (rising factorial over
    2!, i.e. multiset pairs); together they partition the n**2 product.
    """
    if n < 2:
        raise DomainError(f"need at least 2 objects, got {n}")
    decreasing = math.comb(n, 2)
    nondecreasing = (n * (n + 1)) // math.factorial(2)
    return decreasing, nondecreasing


def count_tau_two_periods(n: int) -> int:
    """Size of the two-period outcome set for a fixed n (equals n**2)."""
    decreasing, nondecreasing = two_period_decomposition(n)
    return decreasing + nondecreasing


def _as_two_period_patterns(patterns: Iterable[TauPattern]) -> list[TauPattern]:
    out = list(patterns)
    for p in out:
        if p.periods != 2:
            raise DomainError("bin tables are defined for two-period patterns only")
    return out


def bin_table(ns: Sequence[int]) -> BinTable:
    """Group a two-period outcome set into bars by signed difference."""
    ns = tuple(int(n) for n in ns)
    if len(ns) != 2:
        raise DomainError(f"bin tables need exactly 2 periods, got {len(ns)}")
    patterns = _as_two_period_patterns(build_tau(ns))
    groups: dict[int, list[TauPattern]] = {}
    for p in patterns:
        groups.setdefault(signed_difference(p.slots), []).append(p)
    bins = tuple(
        Bin(difference=d, label=bar_label(d), patterns=tuple(groups[d]))
        for d in sorted(groups)
    )
    return BinTable(ns=ns, bins=bins)


def bin_frequencies(n: int) -> BinTable:
    """Bar frequencies over the fixed-n two-period outcome set."""
    return bin_table((n, n))


def membership(bar: str | int, table: BinTable, variant: str = "minmax") -> Degree:
    """Degree of one bar from the frequency table.

    ``minmax`` rescales frequency to (f - min) / (max - min), which bottoms
    out at 0 on the rarest bars; ``smoothed`` uses f / max and stays strictly
    positive. A degenerate table (all frequencies equal) yields degree 1 with
    the flag set.
    """
    if variant not in MEMBERSHIP_VARIANTS:
        raise DomainError(f"membership variant must be one of {MEMBERSHIP_VARIANTS}, got {variant!r}")
    b = table.by_difference(bar) if isinstance(bar, int) else table.by_label(bar)
    lo, hi = table.min_frequency, table.max_frequency
    if variant == "smoothed":
        return Degree(value=Fraction(b.frequency, hi), degenerate=False)
    if hi == lo:
        return Degree(value=Fraction(1), degenerate=True)
    return Degree(value=Fraction(b.frequency - lo, hi - lo), degenerate=False)
