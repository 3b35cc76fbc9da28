"""Seventh-order WENO finite-difference solver for hyperbolic conservation laws.

Schemes: the L1-norm smoothness-indicator variant (ns7) plus the classical
quadratic-form (bs7) and global-indicator (z7) baselines, with flux-split
upwinding and SSP Runge-Kutta time stepping on 1D and 2D structured grids.
"""

__version__ = "0.1.0"

from .errors import (ConfigError, GridMismatch, NoConvergence, NonPhysicalState,
                     UnknownProblem, VacuumState, Weno7Error)
from .kernels import SchemeConfig, backend_name

__all__ = [
    "__version__",
    "backend_name",
    "SchemeConfig",
    "Weno7Error",
    "NonPhysicalState",
    "VacuumState",
    "NoConvergence",
    "UnknownProblem",
    "ConfigError",
    "GridMismatch",
]
