"""Error types shared across the package.

DomainError covers every precondition violation (bad vertex, shape mismatch,
unstable subspaces, ...).  BudgetError signals that a finite-field enumeration
would exceed its configured tuple budget; it carries the estimate so callers
can report it.
"""


class DomainError(ValueError):
    pass


class BudgetError(RuntimeError):
    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate
