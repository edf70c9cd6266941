"""Exception types shared across the package."""


class NsgError(Exception):
    """Base class for all package errors."""


class InvalidSpecError(NsgError):
    """A generator specification violates its invariants."""


class NonCofiniteError(NsgError):
    """Generators with gcd > 1 and no truncation: the complement is infinite."""


class HypothesisViolation(NsgError):
    """A construction hypothesis failed.

    `clause` names the first failed hypothesis, in the order the
    hypotheses are stated for the construction.
    """

    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        self.detail = detail
        super().__init__(f"{clause}: {detail}" if detail else clause)


class SearchLimitExceeded(NsgError):
    """A bounded search (greedy B_h extension) hit its cap without success."""
