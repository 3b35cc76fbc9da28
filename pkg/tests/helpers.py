"""Shared test utilities: window builders and slope fits."""

from __future__ import annotations

import numpy as np


def window_at_interface(func, x_interface: float, dx: float) -> np.ndarray:
    """7-point window of func values for the interface at x_interface.

    Entry m holds func at the center of cell j-3+m, where cell j is the one
    just left of the interface.
    """
    offsets = np.arange(7) - 3.5
    return func(x_interface + offsets * dx)


def fitted_slope(hs, errs) -> float:
    """Least-squares slope of log2(err) against log2(h)."""
    hs = np.asarray(hs, dtype=float)
    errs = np.asarray(errs, dtype=float)
    return float(np.polyfit(np.log2(hs), np.log2(errs), 1)[0])


def pairwise_orders(errs) -> list[float]:
    """log2 ratios between successive halvings."""
    errs = list(errs)
    return [float(np.log2(errs[i - 1] / errs[i])) for i in range(1, len(errs))]
