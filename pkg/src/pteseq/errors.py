"""Exception types shared across the package."""

from __future__ import annotations


class PteSeqError(Exception):
    """Base class for all package-specific errors."""


class MaterializationCapError(PteSeqError):
    """A sequence is too long to materialize under the configured cap.

    Callers that only need individual elements or moments should switch to
    the virtual (streamed) access path instead of raising the cap.
    """

    def __init__(self, index: int, length: int, cap: int):
        self.index = index
        self.length = length
        self.cap = cap
        super().__init__(
            f"sequence {index} has {length} elements, exceeding the "
            f"materialization cap of {cap}; use virtual access"
        )


class MalformedSequenceError(PteSeqError, ValueError):
    """Input data does not describe a valid P-sequence."""


class WorkBudgetError(PteSeqError):
    """Estimated work for a search or comparison exceeds the budget."""

    def __init__(self, estimated: int, budget: int):
        self.estimated = estimated
        self.budget = budget
        super().__init__(
            f"estimated work of {estimated} units exceeds budget of {budget}"
        )


class PairFormatError(PteSeqError, ValueError):
    """A pair document is not schema-valid JSON."""
