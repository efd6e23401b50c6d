"""Shared exception types."""


class SyzexError(Exception):
    """Base class for all workbench errors."""


class SpecError(SyzexError):
    """Malformed input file or inconsistent user-supplied data (exit code 2)."""


class NonHomogeneousRelation(SpecError):
    pass


class NonParallelRelation(SpecError):
    pass


class NotFiniteDimensional(SpecError):
    pass


class AlgebraMismatch(SyzexError):
    pass


class BudgetExceeded(SyzexError):
    """A configured enumeration or member budget was exhausted (exit code 1)."""


class UnknownCorpusId(SpecError):
    pass


class ContradictoryFacts(SpecError):
    """A lower bound exceeded an upper bound; carries both provenance chains."""

    def __init__(self, message, lower_fact=None, upper_fact=None):
        super().__init__(message)
        self.lower_fact = lower_fact
        self.upper_fact = upper_fact
