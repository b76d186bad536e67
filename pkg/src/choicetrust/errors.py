"""Exception types shared across the library."""

from __future__ import annotations


class ChoiceTrustError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(ChoiceTrustError):
    """Attribute vectors and constraint rows disagree on dimension."""


class DuplicateItemError(ChoiceTrustError):
    """An object id occurs more than once within a single stage set."""


class NestingError(ChoiceTrustError):
    """A stage set contains an item missing from its enclosing stage."""

    def __init__(self, stage: str, item: str) -> None:
        super().__init__(f"item {item!r} appears in stage {stage!r} but not in the enclosing stage")
        self.stage = stage
        self.item = item


class EmptyFinalError(ChoiceTrustError):
    """The final choice set of an episode is empty."""


class UnknownObjectError(ChoiceTrustError):
    """A referenced object id is not part of any catalog in scope."""


class ShapeError(ChoiceTrustError):
    """Matrix or pattern-vector dimensions are inconsistent."""


class DomainError(ChoiceTrustError):
    """An argument lies outside the domain an operation is defined on."""


class EmptyListError(ChoiceTrustError):
    """A choice was requested from an empty list."""


class GradeError(ChoiceTrustError):
    """Fuzzy membership grades violate 0 <= mu, nu and mu + nu <= 1."""

    def __init__(self, element_id: str, message: str) -> None:
        super().__init__(f"element {element_id!r}: {message}")
        self.element_id = element_id


class IncompleteTableError(DomainError):
    """A choice-function table does not cover every nonempty subset."""

    def __init__(self, missing: tuple[tuple[str, ...], ...]) -> None:
        shown = ", ".join("{" + ",".join(s) + "}" for s in missing[:5])
        more = "" if len(missing) <= 5 else f" (+{len(missing) - 5} more)"
        super().__init__(f"choice table is missing subsets: {shown}{more}")
        self.missing = missing
