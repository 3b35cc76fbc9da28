"""Uniform structured grids, ghost-padded field storage, boundary fills."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

#: Ghost-layer depth.  Interface j+1/2 reads cells j-3..j+3 for the positive
#: flux and j-2..j+4 for the mirrored negative flux; four layers cover both.
NGHOST = 4


@dataclass(frozen=True)
class Grid1D:
    x_min: float
    x_max: float
    n_cells: int
    n_ghost: int = NGHOST

    def __post_init__(self):
        if self.n_cells <= 0:
            raise ValueError("n_cells must be positive")
        if self.x_max <= self.x_min:
            raise ValueError("x_max must exceed x_min")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    @property
    def n_total(self) -> int:
        return self.n_cells + 2 * self.n_ghost

    def cell_centers(self) -> np.ndarray:
        j = np.arange(self.n_cells)
        return self.x_min + (j + 0.5) * self.dx

    def padded_centers(self) -> np.ndarray:
        """Cell centers including the ghost layers."""
        j = np.arange(-self.n_ghost, self.n_cells + self.n_ghost)
        return self.x_min + (j + 0.5) * self.dx

    def interfaces(self) -> np.ndarray:
        """The n_cells + 1 interface coordinates x_{j+1/2}."""
        return self.x_min + np.arange(self.n_cells + 1) * self.dx


@dataclass(frozen=True)
class Grid2D:
    x: Grid1D
    y: Grid1D

    @classmethod
    def square(cls, x_min, x_max, nx, y_min=None, y_max=None, ny=None) -> "Grid2D":
        y_min = x_min if y_min is None else y_min
        y_max = x_max if y_max is None else y_max
        ny = nx if ny is None else ny
        return cls(Grid1D(x_min, x_max, nx), Grid1D(y_min, y_max, ny))


def cell_centers(grid: Grid1D) -> np.ndarray:
    return grid.cell_centers()


class BoundaryKind(Enum):
    PERIODIC = "periodic"
    TRANSMISSIVE = "transmissive"
    DIRICHLET_FROZEN = "dirichlet_frozen"


@dataclass
class BoundaryCondition:
    kind: BoundaryKind
    # For DIRICHLET_FROZEN: full padded array of the initial condition, from
    # which the ghost entries are copied verbatim at every fill.
    frozen: np.ndarray | None = None

    def __post_init__(self):
        if self.kind is BoundaryKind.DIRICHLET_FROZEN and self.frozen is None:
            raise ValueError("dirichlet_frozen needs the frozen padded array")


@dataclass
class GridField:
    """Conserved variables on a padded grid.

    ``data`` has shape (n_vars, n_cells + 2*n_ghost) in 1D or
    (n_vars, ny + 2*n_ghost, nx + 2*n_ghost) in 2D.
    """

    data: np.ndarray
    n_ghost: int = NGHOST

    @classmethod
    def zeros_1d(cls, n_vars: int, grid: Grid1D) -> "GridField":
        return cls(np.zeros((n_vars, grid.n_total)), grid.n_ghost)

    @classmethod
    def zeros_2d(cls, n_vars: int, grid: Grid2D) -> "GridField":
        return cls(np.zeros((n_vars, grid.y.n_total, grid.x.n_total)), grid.x.n_ghost)

    @classmethod
    def from_interior(cls, interior: np.ndarray, n_ghost: int = NGHOST) -> "GridField":
        interior = np.atleast_2d(np.asarray(interior, dtype=float))
        pad = [(0, 0)] + [(n_ghost, n_ghost)] * (interior.ndim - 1)
        return cls(np.pad(interior, pad), n_ghost)

    @property
    def n_vars(self) -> int:
        return self.data.shape[0]

    @property
    def interior(self) -> np.ndarray:
        g = self.n_ghost
        if self.data.ndim == 2:
            return self.data[:, g:-g]
        return self.data[:, g:-g, g:-g]

    @interior.setter
    def interior(self, values: np.ndarray) -> None:
        g = self.n_ghost
        if self.data.ndim == 2:
            self.data[:, g:-g] = values
        else:
            self.data[:, g:-g, g:-g] = values

    def copy(self) -> "GridField":
        return GridField(self.data.copy(), self.n_ghost)


def _fill_axis(data: np.ndarray, axis: int, g: int, kind: BoundaryKind) -> None:
    n = data.shape[axis] - 2 * g
    sl = [slice(None)] * data.ndim

    def take(lo, hi):
        s = sl.copy()
        s[axis] = slice(lo, hi)
        return tuple(s)

    if kind is BoundaryKind.PERIODIC:
        data[take(0, g)] = data[take(n, n + g)]
        data[take(n + g, n + 2 * g)] = data[take(g, 2 * g)]
    elif kind is BoundaryKind.TRANSMISSIVE:
        edge_lo = take(g, g + 1)
        edge_hi = take(n + g - 1, n + g)
        data[take(0, g)] = data[edge_lo]
        data[take(n + g, n + 2 * g)] = data[edge_hi]
    else:
        raise ValueError(f"axis fill does not handle {kind}")


def fill_ghosts(fld: GridField, grid: Grid1D | Grid2D, bc: BoundaryCondition) -> GridField:
    """Populate every ghost entry of ``fld`` per the boundary kind.

    The interior is untouched; refilling is idempotent.  Mutates in place and
    returns the field.
    """
    g = fld.n_ghost
    data = fld.data
    if bc.kind is BoundaryKind.DIRICHLET_FROZEN:
        frozen = bc.frozen
        if frozen.shape != data.shape:
            raise ValueError("frozen array shape mismatch")
        if data.ndim == 2:
            data[:, :g] = frozen[:, :g]
            data[:, -g:] = frozen[:, -g:]
        else:
            mask = np.ones(data.shape[1:], dtype=bool)
            mask[g:-g, g:-g] = False
            data[:, mask] = frozen[:, mask]
        return fld

    if data.ndim == 2:
        _fill_axis(data, 1, g, bc.kind)
    else:
        _fill_axis(data, 2, g, bc.kind)  # x direction, then y (corners follow)
        _fill_axis(data, 1, g, bc.kind)
    return fld
