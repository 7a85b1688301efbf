"""Exception types shared by all solvers."""


class BoundedCodeError(Exception):
    """Base class for every error raised by this package."""


class InputError(BoundedCodeError):
    """Malformed problem input (bad weights, bounds, penalty, flags)."""


class InfeasibleError(BoundedCodeError):
    """No prefix code exists within the requested length bounds."""


class CapacityError(BoundedCodeError):
    """Exact width arithmetic would exceed the supported 128-bit range."""


class NoSolutionError(BoundedCodeError):
    """The coin-selection subproblem has no subset of the exact target width."""
