"""Exact solver for the 1D Euler Riemann problem (reference generator).

Classical two-wave construction: Newton iteration with bisection safeguard
on the pressure function across the left/right waves (shock via the
Rankine-Hugoniot branch, rarefaction via the isentropic branch), then
self-similar sampling by wave pattern, including rarefaction fans.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, VacuumState

_P_FLOOR = 1e-12
_MAX_ITER = 100


@dataclass(frozen=True)
class RiemannState:
    left: tuple[float, float, float]   # (rho, u, p)
    right: tuple[float, float, float]
    x_split: float = 0.0

    def __post_init__(self):
        for rho, _, p in (self.left, self.right):
            if rho <= 0.0 or p <= 0.0:
                raise ValueError("Riemann states need positive rho and p")


def _wave_function(p: float, rho_k: float, p_k: float, c_k: float,
                   gamma: float) -> tuple[float, float]:
    """f_K(p) and its derivative for one side."""
    if p > p_k:  # shock branch
        a = 2.0 / ((gamma + 1.0) * rho_k)
        b = (gamma - 1.0) / (gamma + 1.0) * p_k
        root = math.sqrt(a / (p + b))
        f = (p - p_k) * root
        df = root * (1.0 - 0.5 * (p - p_k) / (p + b))
        return f, df
    # rarefaction branch
    ratio = (p / p_k) ** ((gamma - 1.0) / (2.0 * gamma))
    f = 2.0 * c_k / (gamma - 1.0) * (ratio - 1.0)
    df = 1.0 / (rho_k * c_k) * (p / p_k) ** (-(gamma + 1.0) / (2.0 * gamma))
    return f, df


def solve_star(states: RiemannState, gamma: float = 1.4) -> tuple[float, float]:
    """Star-region pressure and velocity."""
    rho_l, u_l, p_l = states.left
    rho_r, u_r, p_r = states.right
    c_l = math.sqrt(gamma * p_l / rho_l)
    c_r = math.sqrt(gamma * p_r / rho_r)
    du = u_r - u_l
    if 2.0 * (c_l + c_r) / (gamma - 1.0) <= du:
        raise VacuumState("states generate vacuum")

    def total(p):
        fl, dfl = _wave_function(p, rho_l, p_l, c_l, gamma)
        fr, dfr = _wave_function(p, rho_r, p_r, c_r, gamma)
        return fl + fr + du, dfl + dfr

    # bracket: total is increasing in p
    lo, hi = _P_FLOOR, max(p_l, p_r)
    while total(hi)[0] < 0.0:
        hi *= 4.0
        if hi > 1e12:
            raise NoConvergence("pressure bracket blew up")
    p = 0.5 * (p_l + p_r)
    if not lo < p < hi:
        p = 0.5 * (lo + hi)
    for _ in range(_MAX_ITER):
        f, df = total(p)
        if f > 0.0:
            hi = p
        else:
            lo = p
        step = f / df
        p_new = p - step
        if not lo < p_new < hi:
            p_new = 0.5 * (lo + hi)
        if abs(p_new - p) <= 1e-14 * p_new:
            p = p_new
            break
        p = p_new
    else:
        raise NoConvergence("pressure iteration did not converge")
    if p < _P_FLOOR:
        raise VacuumState("star pressure collapsed below floor")
    fl, _ = _wave_function(p, rho_l, p_l, c_l, gamma)
    fr, _ = _wave_function(p, rho_r, p_r, c_r, gamma)
    u = 0.5 * (u_l + u_r) + 0.5 * (fr - fl)
    return p, u


def _sample_side(xi: float, rho_k: float, u_k: float, p_k: float,
                 p_star: float, u_star: float, gamma: float,
                 left: bool) -> tuple[float, float, float]:
    """Sample on one side of the contact at similarity coordinate xi."""
    sign = 1.0 if left else -1.0
    c_k = math.sqrt(gamma * p_k / rho_k)
    gm1, gp1 = gamma - 1.0, gamma + 1.0
    if p_star > p_k:  # shock
        ratio = p_star / p_k
        speed = u_k - sign * c_k * math.sqrt(0.5 * gp1 / gamma * ratio
                                             + 0.5 * gm1 / gamma)
        if sign * xi <= sign * speed:
            return rho_k, u_k, p_k
        rho_star = rho_k * (ratio + gm1 / gp1) / (gm1 / gp1 * ratio + 1.0)
        return rho_star, u_star, p_star
    # rarefaction
    c_star = c_k * (p_star / p_k) ** (gm1 / (2.0 * gamma))
    head = u_k - sign * c_k
    tail = u_star - sign * c_star
    if sign * xi <= sign * head:
        return rho_k, u_k, p_k
    if sign * xi >= sign * tail:
        rho_star = rho_k * (p_star / p_k) ** (1.0 / gamma)
        return rho_star, u_star, p_star
    # inside the fan
    c = 2.0 / gp1 * (c_k + sign * 0.5 * gm1 * (u_k - xi))
    vel = 2.0 / gp1 * (sign * c_k + 0.5 * gm1 * u_k + xi)
    rho = rho_k * (c / c_k) ** (2.0 / gm1)
    p = p_k * (c / c_k) ** (2.0 * gamma / gm1)
    return rho, vel, p


def sample(states: RiemannState, xi: float, gamma: float = 1.4,
           star: tuple[float, float] | None = None) -> tuple[float, float, float]:
    """Primitive state (rho, u, p) at similarity coordinate xi = x/t."""
    p_star, u_star = star if star is not None else solve_star(states, gamma)
    if xi <= u_star:
        rho_k, u_k, p_k = states.left
        return _sample_side(xi, rho_k, u_k, p_k, p_star, u_star, gamma, True)
    rho_k, u_k, p_k = states.right
    return _sample_side(xi, rho_k, u_k, p_k, p_star, u_star, gamma, False)


def exact_riemann_1d(states: RiemannState, x: np.ndarray, t: float,
                     gamma: float = 1.4) -> np.ndarray:
    """Primitive profiles (3, len(x)) at time t; t=0 returns the initial data."""
    x = np.asarray(x, dtype=float)
    out = np.empty((3, x.size))
    if t <= 0.0:
        left = x <= states.x_split
        for i, v in enumerate(states.left):
            out[i, left] = v
        for i, v in enumerate(states.right):
            out[i, ~left] = v
        return out
    star = solve_star(states, gamma)
    for j, xv in enumerate(x):
        out[:, j] = sample(states, (xv - states.x_split) / t, gamma, star)
    return out
