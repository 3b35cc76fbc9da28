"""Flux functions, wave speeds, and Lax-Friedrichs splitting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import NonPhysicalState


@dataclass(frozen=True)
class LinearAdvection:
    speed: float = 1.0
    n_vars = 1


@dataclass(frozen=True)
class Burgers:
    n_vars = 1


@dataclass(frozen=True)
class Euler1D:
    gamma: float = 1.4
    n_vars = 3

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise ValueError("gamma must exceed 1")


@dataclass(frozen=True)
class Euler2D:
    gamma: float = 1.4
    n_vars = 4

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise ValueError("gamma must exceed 1")


FluxModel = Union[LinearAdvection, Burgers, Euler1D, Euler2D]


def _check_positive(rho: np.ndarray, p: np.ndarray, where: str) -> None:
    if not np.all(np.isfinite(rho)) or not np.all(np.isfinite(p)):
        raise NonPhysicalState(f"non-finite state in {where}")
    if np.any(rho <= 0.0) or np.any(p <= 0.0):
        raise NonPhysicalState(f"rho or p non-positive in {where}")


def euler1d_pressure(model: Euler1D, u: np.ndarray) -> np.ndarray:
    rho, mom, energy = u[0], u[1], u[2]
    return (model.gamma - 1.0) * (energy - 0.5 * mom * mom / rho)


def euler2d_pressure(model: Euler2D, u: np.ndarray) -> np.ndarray:
    rho, mx, my, energy = u
    return (model.gamma - 1.0) * (energy - 0.5 * (mx * mx + my * my) / rho)


def primitive_from_conserved(model: FluxModel, u: np.ndarray) -> np.ndarray:
    """(rho, u, p) from (rho, rho*u, E); 2D adds the v component."""
    u = np.asarray(u, dtype=float)
    if isinstance(model, Euler1D):
        rho = u[0]
        vel = u[1] / rho
        p = euler1d_pressure(model, u)
        return np.stack([rho, vel, p])
    if isinstance(model, Euler2D):
        rho = u[0]
        vx = u[1] / rho
        vy = u[2] / rho
        p = euler2d_pressure(model, u)
        return np.stack([rho, vx, vy, p])
    raise TypeError("primitive conversion is for Euler models")


def conserved_from_primitive(model: FluxModel, prim: np.ndarray) -> np.ndarray:
    prim = np.asarray(prim, dtype=float)
    if isinstance(model, Euler1D):
        rho, vel, p = prim
        energy = p / (model.gamma - 1.0) + 0.5 * rho * vel * vel
        return np.stack([rho, rho * vel, energy])
    if isinstance(model, Euler2D):
        rho, vx, vy, p = prim
        energy = p / (model.gamma - 1.0) + 0.5 * rho * (vx * vx + vy * vy)
        return np.stack([rho, rho * vx, rho * vy, energy])
    raise TypeError("conserved conversion is for Euler models")


def flux(model: FluxModel, u: np.ndarray, axis: int = 0) -> np.ndarray:
    """Physical flux of the conserved state; axis selects F (0) or G (1) in 2D."""
    u = np.asarray(u, dtype=float)
    if isinstance(model, LinearAdvection):
        return model.speed * u
    if isinstance(model, Burgers):
        return 0.5 * u * u
    if isinstance(model, Euler1D):
        rho, mom, energy = u[0], u[1], u[2]
        vel = mom / rho
        p = euler1d_pressure(model, u)
        return np.stack([mom, mom * vel + p, vel * (energy + p)])
    if isinstance(model, Euler2D):
        rho, mx, my, energy = u
        vx = mx / rho
        vy = my / rho
        p = euler2d_pressure(model, u)
        if axis == 0:
            return np.stack([mx, mx * vx + p, my * vx, vx * (energy + p)])
        return np.stack([my, mx * vy, my * vy + p, vy * (energy + p)])
    raise TypeError(f"unknown flux model {model!r}")


def euler_flux(state, model: FluxModel, axis: int = 0) -> np.ndarray:
    """Flux of a single conserved state vector."""
    state = np.asarray(state, dtype=float)
    return flux(model, state.reshape(len(state), 1), axis=axis)[:, 0]


def max_wave_speed(u: np.ndarray, model: FluxModel, axis: int = 0) -> float:
    """Largest |f'(u)| (scalar) or |vel| + c (Euler) over the supplied cells."""
    u = np.asarray(u, dtype=float)
    if isinstance(model, LinearAdvection):
        return abs(model.speed)
    if isinstance(model, Burgers):
        return float(np.max(np.abs(u)))
    if isinstance(model, Euler1D):
        rho = u[0]
        p = euler1d_pressure(model, u)
        _check_positive(rho, p, "max_wave_speed")
        c = np.sqrt(model.gamma * p / rho)
        return float(np.max(np.abs(u[1] / rho) + c))
    if isinstance(model, Euler2D):
        rho = u[0]
        p = euler2d_pressure(model, u)
        _check_positive(rho, p, "max_wave_speed")
        c = np.sqrt(model.gamma * p / rho)
        vel = u[1 + axis] / rho
        return float(np.max(np.abs(vel) + c))
    raise TypeError(f"unknown flux model {model!r}")


def lax_friedrichs_split(f: np.ndarray, u: np.ndarray, alpha: float):
    """f_plus, f_minus = (f +- alpha*u)/2 with a global alpha."""
    au = alpha * np.asarray(u, dtype=float)
    f = np.asarray(f, dtype=float)
    return 0.5 * (f + au), 0.5 * (f - au)
