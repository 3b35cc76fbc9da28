"""Interface-flux reconstruction: candidates, smoothness indicators, weights.

Window-level functions here are the reference implementation and the unit
under test for all kernel mathematics.  The batched sweep used in the hot
path lives in the compiled extension (``weno7._reconstruct``) with a
vectorized numpy fallback (``weno7._kernels_py``); ``interface_fluxes``
dispatches to whichever backend is active.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .coeffs import BS_QUAD, CANDIDATE_COEFFS, IDEAL_WEIGHTS, UNDIV_COEFFS

SCHEMES = ("ns7", "bs7", "z7")
TAU_VARIANTS = ("high_order", "classic")

_SCHEME_CODE = {"ns7": 0, "bs7": 1, "z7": 2}
_TAU_CODE = {"high_order": 0, "classic": 1}

#: scheme -> default epsilon guarding the weight denominators
DEFAULT_EPSILON = {"ns7": 1e-40, "bs7": 1e-6, "z7": 1e-40}


@dataclass(frozen=True)
class SchemeConfig:
    scheme: str = "ns7"
    epsilon: float | None = None  # None -> per-scheme default
    xi1: float = 0.1
    xi2: float = 1.0
    s_exp: int = 2
    p_exp: int = 2
    tau_variant: str = "high_order"

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.epsilon is not None and not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        for name, xi in (("xi1", self.xi1), ("xi2", self.xi2)):
            if not 0.0 < xi <= 1.0:
                raise ValueError(f"{name} must lie in (0, 1]")
        if self.s_exp < 1 or self.p_exp < 1:
            raise ValueError("s_exp and p_exp must be positive integers")
        if self.tau_variant not in TAU_VARIANTS:
            raise ValueError(f"unknown tau variant {self.tau_variant!r}")

    @property
    def eps(self) -> float:
        return DEFAULT_EPSILON[self.scheme] if self.epsilon is None else self.epsilon


@dataclass(frozen=True)
class WeightSet:
    omega: np.ndarray
    beta: np.ndarray
    global_indicator: float | None  # zeta (ns7), tau7 (z7), None for bs7


def candidate_fluxes(window) -> np.ndarray:
    """The four cubic candidate values of the interface flux at x_{j+1/2}."""
    w = np.asarray(window, dtype=float)
    return np.array([CANDIDATE_COEFFS[k] @ w[k:k + 4] for k in range(4)])


def undivided_diffs(window, k: int) -> tuple[float, float, float]:
    """(L1, L2, L3) for sub-stencil k applied to a 7-point window."""
    w = np.asarray(window, dtype=float)[k:k + 4]
    return tuple(float(UNDIV_COEFFS[s][k] @ w) for s in range(3))


def beta_ns7(l_triples, cfg: SchemeConfig) -> np.ndarray:
    """L1-norm smoothness indicators xi1|L1| + xi2|L2| + |L3| per stencil."""
    l_arr = np.asarray(l_triples, dtype=float).reshape(4, 3)
    return (cfg.xi1 * np.abs(l_arr[:, 0])
            + cfg.xi2 * np.abs(l_arr[:, 1])
            + np.abs(l_arr[:, 2]))


def zeta_ns7(beta) -> float:
    """Global smoothness indicator |beta_0 - beta_3|^2."""
    b = np.asarray(beta, dtype=float)
    return float(abs(b[0] - b[3]) ** 2)


def weights_ns7(beta, zeta: float, cfg: SchemeConfig) -> WeightSet:
    b = np.asarray(beta, dtype=float)
    alpha = IDEAL_WEIGHTS * (1.0 + (zeta / (b + cfg.eps) ** 2) ** cfg.s_exp)
    return WeightSet(alpha / alpha.sum(), b, zeta)


def beta_bs7(window) -> np.ndarray:
    """Classical quadratic-form smoothness indicators (integer-scaled).

    The forms are sums of squares, so the float evaluation is clamped at
    zero: cancellation on near-constant data can otherwise round a few
    ulp below it and poison the weight denominators.
    """
    w = np.asarray(window, dtype=float)
    raw = [w[k:k + 4] @ BS_QUAD[k] @ w[k:k + 4] for k in range(4)]
    return np.maximum(raw, 0.0)


def weights_bs7(beta, cfg: SchemeConfig) -> WeightSet:
    b = np.asarray(beta, dtype=float)
    alpha = IDEAL_WEIGHTS / (cfg.eps + b) ** cfg.p_exp
    return WeightSet(alpha / alpha.sum(), b, None)


def tau_z7(beta, variant: str = "high_order") -> float:
    """Global indicator for the Z weights; the high-order form is default."""
    b = np.asarray(beta, dtype=float)
    if variant == "high_order":
        return float(abs(b[0] + 3.0 * b[1] - 3.0 * b[2] - b[3]))
    if variant == "classic":
        return float(abs(b[0] - b[1] - b[2] + b[3]))
    raise ValueError(f"unknown tau variant {variant!r}")


def weights_z7(beta, tau: float, cfg: SchemeConfig) -> WeightSet:
    b = np.asarray(beta, dtype=float)
    alpha = IDEAL_WEIGHTS * (1.0 + (tau / (b + cfg.eps)) ** cfg.p_exp)
    return WeightSet(alpha / alpha.sum(), b, tau)


def interface_weights(window, cfg: SchemeConfig) -> WeightSet:
    """Nonlinear weights of the selected scheme for one 7-point window."""
    if cfg.scheme == "ns7":
        l_triples = [undivided_diffs(window, k) for k in range(4)]
        beta = beta_ns7(l_triples, cfg)
        return weights_ns7(beta, zeta_ns7(beta), cfg)
    beta = beta_bs7(window)
    if cfg.scheme == "bs7":
        return weights_bs7(beta, cfg)
    return weights_z7(beta, tau_z7(beta, cfg.tau_variant), cfg)


def reconstruct_interface(window, cfg: SchemeConfig) -> float:
    """Convex combination of the four candidates at x_{j+1/2}."""
    ws = interface_weights(window, cfg)
    return float(ws.omega @ candidate_fluxes(window))


def reconstruct_negative(window_reflected, cfg: SchemeConfig) -> float:
    """Identical kernel applied to the mirrored window (f_{j+4}, ..., f_{j-2})."""
    return reconstruct_interface(window_reflected, cfg)


# ---------------------------------------------------------------------------
# batched sweep + backend selection
# ---------------------------------------------------------------------------

_FORCED = os.environ.get("WENO7_BACKEND", "auto").lower()
_compiled = None
if _FORCED in ("auto", "compiled"):
    try:
        from . import _reconstruct as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None
        if _FORCED == "compiled":
            raise

from . import _kernels_py as _pyimpl  # noqa: E402


def backend_name() -> str:
    return "compiled" if _compiled is not None else "python"


def interface_fluxes(fp: np.ndarray, fm: np.ndarray, cfg: SchemeConfig,
                     backend: str | None = None) -> np.ndarray:
    """Reconstruct f_hat at all interfaces of one or more padded rows.

    ``fp``/``fm`` are the split fluxes with shape (..., n + 2*NGHOST); the
    result has shape (..., n + 1): entry i is f_hat at the interface between
    cells i-1 and i of the interior.
    """
    fp_arr = np.ascontiguousarray(np.atleast_2d(np.asarray(fp, dtype=float)))
    fm_arr = np.ascontiguousarray(np.atleast_2d(np.asarray(fm, dtype=float)))
    if fp_arr.shape != fm_arr.shape:
        raise ValueError("split flux arrays must share a shape")
    rows, m = fp_arr.shape
    if m < 8:
        raise ValueError("padded rows need at least 8 entries")
    out = np.empty((rows, m - 7))
    use = backend or backend_name()
    if use == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled backend unavailable")
        _compiled.interface_fluxes(fp_arr, fm_arr, out,
                                   _SCHEME_CODE[cfg.scheme], cfg.eps,
                                   cfg.xi1, cfg.xi2, cfg.s_exp, cfg.p_exp,
                                   _TAU_CODE[cfg.tau_variant])
    else:
        _pyimpl.interface_fluxes(fp_arr, fm_arr, out, cfg)
    if np.asarray(fp).ndim == 1:
        return out[0]
    return out
