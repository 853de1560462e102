"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ConvergenceError(RuntimeError):
    """An iterative numerical method failed to converge."""


class PivotPoleError(ArithmeticError):
    """A pivot in the tridiagonal elimination chain vanished; the requested
    energy is a root of a lower-order condition and the u-chain has a pole."""


class InconsistentSolutionError(ValueError):
    """The terminal row of the coefficient recursion does not close, i.e. the
    supplied energy is not actually a root of the determinant condition."""


class RootScanWarning(UserWarning):
    """The bracketing scan may have missed real roots (fewer sign changes
    than the expected count)."""
