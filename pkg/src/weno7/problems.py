"""Benchmark problems: initial conditions, references, registry."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import NoConvergence, UnknownProblem
from .fluxes import (Burgers, Euler1D, Euler2D, FluxModel, LinearAdvection,
                     conserved_from_primitive)
from .grid import (BoundaryCondition, BoundaryKind, Grid1D, Grid2D, GridField,
                   fill_ghosts)
from .riemann import RiemannState, exact_riemann_1d


class ReferenceKind(Enum):
    EXACT_SHIFT = "exact_shift"
    BURGERS_CHARACTERISTICS = "burgers_characteristics"
    EXACT_RIEMANN_1D = "exact_riemann_1d"
    FINE_GRID_SELF = "fine_grid_self"
    NONE = "none"


@dataclass(frozen=True)
class ProblemSpec:
    name: str
    model: FluxModel
    domain: tuple  # (x0, x1) or ((x0, x1), (y0, y1))
    bc_kind: BoundaryKind
    t_final: float
    ic: Callable  # ic(x) -> (n_vars, ...) conserved; 2D: ic(x, y)
    reference: ReferenceKind
    default_n: int = 200
    riemann: RiemannState | None = None
    fine_grid_n: int | None = None  # FINE_GRID_SELF resolution

    @property
    def is_2d(self) -> bool:
        return isinstance(self.model, Euler2D)

    def grid(self, n: int | None = None) -> Grid1D | Grid2D:
        n = self.default_n if n is None else n
        if self.is_2d:
            (x0, x1), (y0, y1) = self.domain
            return Grid2D(Grid1D(x0, x1, n), Grid1D(y0, y1, n))
        x0, x1 = self.domain
        return Grid1D(x0, x1, n)


# ---------------------------------------------------------------------------
# initial conditions
# ---------------------------------------------------------------------------

def _ic_jump(x):
    x = np.asarray(x, dtype=float)
    base = -np.sin(np.pi * x) - 0.5 * x ** 3
    return np.where(x >= 0.0, base + 1.0, base)[None, ...]


def _ic_sine(x):
    return np.sin(np.pi * np.asarray(x, dtype=float))[None, ...]


def _ic_cp1(x):
    x = np.asarray(x, dtype=float)
    return np.sin(np.pi * x - np.sin(np.pi * x) / np.pi)[None, ...]


def _ic_cp2(x):
    return (np.sin(np.pi * np.asarray(x, dtype=float)) ** 3)[None, ...]


_SHAPES_A = 0.5
_SHAPES_Z = -0.7
_SHAPES_DELTA = 0.005
_SHAPES_ALPHA = 10.0
_SHAPES_BETA = math.log(2.0) / (36.0 * _SHAPES_DELTA ** 2)


def _gauss(x, z):
    return np.exp(-_SHAPES_BETA * (x - z) ** 2)


def _ellipse(x, a):
    return np.sqrt(np.maximum(1.0 - _SHAPES_ALPHA ** 2 * (x - a) ** 2, 0.0))


def _ic_shapes(x):
    x = np.asarray(x, dtype=float)
    u = np.zeros_like(x)
    m = (x >= -0.8) & (x <= -0.6)
    u = np.where(m, (_gauss(x, _SHAPES_Z - _SHAPES_DELTA)
                     + _gauss(x, _SHAPES_Z + _SHAPES_DELTA)
                     + 4.0 * _gauss(x, _SHAPES_Z)) / 6.0, u)
    u = np.where((x >= -0.4) & (x <= -0.2), 1.0, u)
    m = (x >= 0.0) & (x <= 0.2)
    u = np.where(m, 1.0 - np.abs(10.0 * (x - 0.1)), u)
    m = (x >= 0.4) & (x <= 0.6)
    u = np.where(m, (_ellipse(x, _SHAPES_A - _SHAPES_DELTA)
                     + _ellipse(x, _SHAPES_A + _SHAPES_DELTA)
                     + 4.0 * _ellipse(x, _SHAPES_A)) / 6.0, u)
    return u[None, ...]


def _ic_burgers_steady(x):
    return (-np.sin(np.pi * np.asarray(x, dtype=float)))[None, ...]


def _ic_burgers_moving(x):
    return (0.5 + np.sin(np.pi * np.asarray(x, dtype=float)))[None, ...]


def _riemann_ic(states: RiemannState, model: Euler1D):
    def ic(x):
        x = np.asarray(x, dtype=float)
        prim = np.where(x[None, ...] <= states.x_split,
                        np.asarray(states.left)[:, None],
                        np.asarray(states.right)[:, None])
        return conserved_from_primitive(model, prim)
    return ic


_SHOCK_ENTROPY_LEFT = (3.857143, 2.629369, 10.33333)
_SHOCK_ENTROPY_AMP = 0.2
_SHOCK_ENTROPY_K = 5.0


def _ic_shock_entropy(x, model: Euler1D):
    x = np.asarray(x, dtype=float)
    rho = np.where(x < -4.0, _SHOCK_ENTROPY_LEFT[0],
                   1.0 + _SHOCK_ENTROPY_AMP * np.sin(_SHOCK_ENTROPY_K * x))
    vel = np.where(x < -4.0, _SHOCK_ENTROPY_LEFT[1], 0.0)
    p = np.where(x < -4.0, _SHOCK_ENTROPY_LEFT[2], 1.0)
    return conserved_from_primitive(model, np.stack([rho, vel, p]))


_QUADRANTS = {
    # (x >= 0.8, y >= 0.8) -> (rho, u, v, p)
    (True, True): (1.5, 0.0, 0.0, 1.5),
    (False, True): (0.5323, 1.206, 0.0, 0.3),
    (False, False): (0.138, 1.206, 1.206, 0.029),
    (True, False): (0.5323, 0.0, 1.206, 0.3),
}


def _ic_riemann2d(x, y, model: Euler2D):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    x, y = np.broadcast_arrays(x, y)
    prim = np.zeros((4,) + x.shape)
    for (qx, qy), vals in _QUADRANTS.items():
        mask = ((x >= 0.8) == qx) & ((y >= 0.8) == qy)
        for i, v in enumerate(vals):
            prim[i] = np.where(mask, v, prim[i])
    return conserved_from_primitive(model, prim)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

def _build_registry() -> dict[str, Callable[[], ProblemSpec]]:
    adv = LinearAdvection(1.0)
    eu = Euler1D(1.4)
    eu2 = Euler2D(1.4)
    sod = RiemannState((1.0, 0.75, 1.0), (0.125, 0.0, 0.1), 0.5)
    lax = RiemannState((0.445, 0.698, 3.528), (0.5, 0.0, 0.571), 0.0)

    reg: dict[str, Callable[[], ProblemSpec]] = {
        "advect_jump": lambda: ProblemSpec(
            "advect_jump", adv, (-1.0, 1.0), BoundaryKind.PERIODIC, 8.0,
            _ic_jump, ReferenceKind.EXACT_SHIFT, default_n=200),
        "advect_sine": lambda: ProblemSpec(
            "advect_sine", adv, (-1.0, 1.0), BoundaryKind.PERIODIC, 2.0,
            _ic_sine, ReferenceKind.EXACT_SHIFT, default_n=160),
        "advect_cp1": lambda: ProblemSpec(
            "advect_cp1", adv, (-1.0, 1.0), BoundaryKind.PERIODIC, 2.0,
            _ic_cp1, ReferenceKind.EXACT_SHIFT, default_n=160),
        "advect_cp2": lambda: ProblemSpec(
            "advect_cp2", adv, (-1.0, 1.0), BoundaryKind.PERIODIC, 2.0,
            _ic_cp2, ReferenceKind.EXACT_SHIFT, default_n=160),
        "advect_shapes": lambda: ProblemSpec(
            "advect_shapes", adv, (-1.0, 1.0), BoundaryKind.PERIODIC, 8.0,
            _ic_shapes, ReferenceKind.EXACT_SHIFT, default_n=200),
        "burgers_steady": lambda: ProblemSpec(
            "burgers_steady", Burgers(), (-1.0, 1.0), BoundaryKind.PERIODIC, 1.5,
            _ic_burgers_steady, ReferenceKind.BURGERS_CHARACTERISTICS,
            default_n=200),
        "burgers_moving": lambda: ProblemSpec(
            "burgers_moving", Burgers(), (-1.0, 1.0), BoundaryKind.PERIODIC, 0.55,
            _ic_burgers_moving, ReferenceKind.BURGERS_CHARACTERISTICS,
            default_n=200),
        "sod_modified": lambda: ProblemSpec(
            "sod_modified", eu, (0.0, 1.0), BoundaryKind.TRANSMISSIVE, 0.2,
            _riemann_ic(sod, eu), ReferenceKind.EXACT_RIEMANN_1D,
            default_n=200, riemann=sod),
        "lax": lambda: ProblemSpec(
            "lax", eu, (-5.0, 5.0), BoundaryKind.TRANSMISSIVE, 1.3,
            _riemann_ic(lax, eu), ReferenceKind.EXACT_RIEMANN_1D,
            default_n=200, riemann=lax),
        "shock_entropy": lambda: ProblemSpec(
            "shock_entropy", eu, (-5.0, 5.0), BoundaryKind.TRANSMISSIVE, 1.8,
            lambda x: _ic_shock_entropy(x, eu), ReferenceKind.FINE_GRID_SELF,
            default_n=400, fine_grid_n=3200),
        "riemann2d": lambda: ProblemSpec(
            "riemann2d", eu2, ((0.0, 1.0), (0.0, 1.0)),
            BoundaryKind.DIRICHLET_FROZEN, 0.8,
            lambda x, y: _ic_riemann2d(x, y, eu2), ReferenceKind.NONE,
            default_n=400),
    }
    return reg


_REGISTRY = _build_registry()
PROBLEM_NAMES = tuple(sorted(_REGISTRY))


def make_problem(name: str) -> ProblemSpec:
    try:
        return _REGISTRY[name]()
    except KeyError:
        raise UnknownProblem(
            f"unknown problem {name!r}; known: {', '.join(PROBLEM_NAMES)}") from None


def evaluate_ic_pointwise(spec: ProblemSpec, x, y=None) -> np.ndarray:
    """Exact initial condition at the given point(s), conserved variables."""
    if spec.is_2d:
        return spec.ic(x, y)
    return spec.ic(x)


def initial_field(spec: ProblemSpec, grid) -> tuple[GridField, BoundaryCondition]:
    """Padded field sampled pointwise at cell centers, plus the boundary fill."""
    if spec.is_2d:
        xc = grid.x.padded_centers()
        yc = grid.y.padded_centers()
        full = spec.ic(xc[None, :], yc[:, None])
        fld = GridField(np.array(full, dtype=float), grid.x.n_ghost)
    else:
        full = spec.ic(grid.padded_centers())
        fld = GridField(np.array(full, dtype=float), grid.n_ghost)
    frozen = fld.data.copy() if spec.bc_kind is BoundaryKind.DIRICHLET_FROZEN else None
    bc = BoundaryCondition(spec.bc_kind, frozen)
    fill_ghosts(fld, grid, bc)
    return fld, bc


# ---------------------------------------------------------------------------
# references
# ---------------------------------------------------------------------------

def exact_advection(ic: Callable, x, t: float, speed: float,
                    domain: tuple[float, float]) -> np.ndarray:
    """Periodic shift solution of u_t + speed*u_x = 0."""
    x0, x1 = domain
    length = x1 - x0
    xs = x0 + np.mod(np.asarray(x, dtype=float) - speed * t - x0, length)
    return ic(xs)


def _scalar_ic(spec: ProblemSpec) -> Callable[[np.ndarray], np.ndarray]:
    return lambda x: spec.ic(x)[0]


def burgers_characteristic_value(u0: Callable, x: float, t: float,
                                 bracket: tuple[float, float]) -> float:
    """Pre-shock solution u(x,t) = u0(xi) with x = xi + t*u0(xi).

    Safeguarded Newton (numerical derivative) with a bisection fallback on
    the supplied bracket.
    """
    lo, hi = bracket

    def eqn(xi):
        return xi + t * float(u0(np.asarray(xi))) - x

    f_lo, f_hi = eqn(lo), eqn(hi)
    if f_lo > 0.0 or f_hi < 0.0:
        raise NoConvergence("characteristic bracket does not straddle the root")
    xi = 0.5 * (lo + hi)
    for _ in range(100):
        f = eqn(xi)
        if abs(f) < 1e-14 * max(1.0, abs(x)):
            return float(u0(np.asarray(xi)))
        if f > 0.0:
            hi = xi
        else:
            lo = xi
        h = 1e-7
        df = (eqn(xi + h) - eqn(xi - h)) / (2.0 * h)
        step = f / df if df > 0.0 else 0.0
        xi_new = xi - step
        if not lo < xi_new < hi or step == 0.0:
            xi_new = 0.5 * (lo + hi)
        xi = xi_new
    raise NoConvergence("characteristic solve exceeded 100 iterations")


def burgers_shock_time(u0: Callable, domain: tuple[float, float]) -> float:
    """First characteristic-crossing time 1/max(-u0')."""
    xs = np.linspace(domain[0], domain[1], 200001)
    du = np.gradient(u0(xs), xs)
    steepest = -du.min()
    return math.inf if steepest <= 0.0 else 1.0 / steepest


def burgers_reference(spec: ProblemSpec, x: np.ndarray, t: float,
                      scheme_cfg=None, n_fine: int | None = None) -> np.ndarray:
    """Reference for Burgers runs: characteristics before shock formation,
    fine-grid self-reference (16x, same scheme) after."""
    u0 = _scalar_ic(spec)
    x = np.asarray(x, dtype=float)
    t_shock = burgers_shock_time(u0, spec.domain)
    if t < 0.95 * t_shock:
        samples = u0(np.linspace(spec.domain[0], spec.domain[1], 20001))
        lo_pad = float(samples.min()) - 1e-9
        hi_pad = float(samples.max()) + 1e-9
        vals = [burgers_characteristic_value(
                    u0, xv, t, (xv - t * hi_pad, xv - t * lo_pad))
                for xv in x]
        return np.asarray(vals)[None, :]
    n_fine = 16 * x.size if n_fine is None else n_fine
    return _fine_grid_reference(spec, x, n_fine, scheme_cfg)


def _fine_grid_reference(spec: ProblemSpec, x: np.ndarray, n_fine: int,
                         scheme_cfg) -> np.ndarray:
    """Run the problem at n_fine cells and sample at x by linear interpolation.

    Euler output is converted to primitive rows (rho, u, p) before sampling.
    """
    from .harness import default_scheme_config  # import here: harness imports us

    cfg = scheme_cfg or default_scheme_config(spec, "ns7")
    interior, grid = _cached_fine_run(spec.name, n_fine, cfg)
    if isinstance(spec.model, Euler1D):
        from .fluxes import primitive_from_conserved
        interior = primitive_from_conserved(spec.model, interior)
    xc = grid.cell_centers()
    return np.stack([np.interp(x, xc, interior[v]) for v in range(interior.shape[0])])


@lru_cache(maxsize=8)
def _cached_fine_run_impl(name: str, n_fine: int, cfg_key: tuple):
    from .harness import run_in_memory
    from .kernels import SchemeConfig

    cfg = SchemeConfig(*cfg_key)
    spec = make_problem(name)
    grid = spec.grid(n_fine)
    interior, _steps = run_in_memory(spec, grid, cfg)
    return interior, grid


def _cached_fine_run(name: str, n_fine: int, cfg):
    key = (cfg.scheme, cfg.epsilon, cfg.xi1, cfg.xi2, cfg.s_exp, cfg.p_exp,
           cfg.tau_variant)
    return _cached_fine_run_impl(name, n_fine, key)


def reference_solution(spec: ProblemSpec, grid, scheme_cfg=None) -> np.ndarray | None:
    """Reference interior values (n_vars, n) at t_final, or None.

    Euler references are returned as primitive rows (rho, u, p) since the
    solution artifacts report primitives.
    """
    if spec.reference is ReferenceKind.NONE:
        return None
    x = grid.cell_centers() if not spec.is_2d else None
    if spec.reference is ReferenceKind.EXACT_SHIFT:
        return exact_advection(spec.ic, x, spec.t_final, spec.model.speed,
                               spec.domain)
    if spec.reference is ReferenceKind.BURGERS_CHARACTERISTICS:
        return burgers_reference(spec, x, spec.t_final, scheme_cfg)
    if spec.reference is ReferenceKind.EXACT_RIEMANN_1D:
        return exact_riemann_1d(spec.riemann, x, spec.t_final, spec.model.gamma)
    if spec.reference is ReferenceKind.FINE_GRID_SELF:
        return _fine_grid_reference(spec, x, spec.fine_grid_n, scheme_cfg)
    raise AssertionError(spec.reference)
