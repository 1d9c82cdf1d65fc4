"""Exception taxonomy shared by all modules.

The CLI maps these onto exit codes: ValidationError (and its subclass
InfeasibleError) -> 2, ResourceBudgetError -> 3, ConstructionInvariantError -> 4.
"""


class GracefulError(Exception):
    """Base class for all package errors."""


class ValidationError(GracefulError):
    """The caller supplied input violating a documented precondition."""


class InfeasibleError(ValidationError):
    """The requested object provably does not exist (not a search limit)."""


class ResourceBudgetError(GracefulError):
    """A search ran out of its node budget before reaching a verdict."""


class ConstructionInvariantError(GracefulError):
    """A construction step violated a guarantee it is supposed to carry.

    Raising this means either a bug or a genuine counterexample to the
    underlying existence claim, so callers should surface it loudly.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
