"""Exception types shared across the solver."""


class Weno7Error(Exception):
    """Base class for all solver errors."""


class NonPhysicalState(Weno7Error):
    """Density or pressure left the physical range (rho <= 0 or p <= 0)."""


class VacuumState(Weno7Error):
    """The Riemann pressure iteration collapsed toward vacuum."""


class NoConvergence(Weno7Error):
    """An iterative solve exceeded its iteration budget."""


class UnknownProblem(Weno7Error):
    """Requested problem name is not registered."""


class ConfigError(Weno7Error):
    """Run configuration is inconsistent or incomplete."""


class GridMismatch(Weno7Error):
    """Two fields that must share a grid do not."""
