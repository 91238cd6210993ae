"""Exception types shared across the library."""


class PossibilityError(ValueError):
    """Base class for domain-specific failures."""


class DivergenceError(PossibilityError):
    """An information integral or distance has no finite value."""


class OrderViolationError(PossibilityError):
    """A pointwise-order precondition does not hold."""


class InfeasibleProblemError(PossibilityError):
    """No admissible distribution satisfies the given constraints.

    ``witness`` carries the best point found by phase-1 of the internal LP
    together with its total constraint violation, so a caller can inspect
    why the problem has no solution.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SchemaError(PossibilityError):
    """A document does not match the expected schema."""
