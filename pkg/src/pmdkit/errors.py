"""Exception hierarchy shared by every pmdkit module."""


class PmdError(Exception):
    """Base class for all pmdkit errors."""


class InvalidSpec(PmdError, ValueError):
    pass


class InvalidInput(PmdError, ValueError):
    pass


class BudgetExceeded(PmdError):
    """Raised when a search runs out of its time or node budget.

    ``lower`` and ``upper`` carry the best bounds known when the budget ran out
    (``upper`` is ``None`` when no feasible solution was seen).
    """

    def __init__(self, message="budget exceeded", lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class NotAMatching(PmdError, ValueError):
    pass


class NotPositive(PmdError, ValueError):
    pass


class NotATree(PmdError, ValueError):
    pass


class HypothesisViolated(PmdError, ValueError):
    pass


class InvalidCover(PmdError, ValueError):
    pass


class OutOfRange(PmdError, ValueError):
    pass


class InvalidPartition(PmdError, ValueError):
    pass


class Infeasible(PmdError):
    """A Latin completion does not exist.

    ``symbols``/``cells`` hold a Hall violation when one was located.
    """

    def __init__(self, message, column=None, cells=None, symbols=None):
        super().__init__(message)
        self.column = column
        self.cells = cells
        self.symbols = symbols


class AlreadySquare(PmdError, ValueError):
    pass


class Disconnected(PmdError, ValueError):
    pass


class InvalidParams(PmdError, ValueError):
    pass


class OutOfDomain(PmdError, ValueError):
    pass


class InvalidFamily(PmdError, ValueError):
    pass


class NoCover(PmdError):
    pass
