"""Stencil coefficient tables and their exact-arithmetic regeneration.

All coefficients used in the hot path are hard-coded below as rationals
evaluated in double precision.  The ``*_regenerated`` functions re-derive
them from their defining linear systems with ``fractions.Fraction`` and
exist as oracles for the self-check and the test suite; they are never
called while time stepping.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

#: Reconstruction coefficients c[k][q]: candidate k evaluates
#: sum_q c[k][q] * f_{j+k-3+q} to approximate the interface value at
#: x_{j+1/2} treating the nodal values as cell averages of the auxiliary
#: flux function.
CANDIDATE_COEFFS = np.array(
    [
        [-1 / 4, 13 / 12, -23 / 12, 25 / 12],
        [1 / 12, -5 / 12, 13 / 12, 1 / 4],
        [-1 / 12, 7 / 12, 7 / 12, -1 / 12],
        [1 / 4, 13 / 12, -5 / 12, 1 / 12],
    ]
)

#: Linear weights that combine the four candidates into the seventh-order
#: upstream-central interface value.
IDEAL_WEIGHTS = np.array([1 / 35, 12 / 35, 18 / 35, 4 / 35])

#: Generalized undivided-difference rows UNDIV_COEFFS[s-1][k][q], applied to
#: the sub-stencil values (f_{j+k-3}, ..., f_{j+k}).  Row (s, k) approximates
#: dx^s * f^(s) at the interface x_{j+1/2} to fourth order.
UNDIV_COEFFS = np.array(
    [
        [  # s = 1
            [-23 / 24, 93 / 24, -141 / 24, 71 / 24],
            [1 / 24, -3 / 24, -21 / 24, 23 / 24],
            [1 / 24, -27 / 24, 27 / 24, -1 / 24],
            [-23 / 24, 21 / 24, 3 / 24, -1 / 24],
        ],
        [  # s = 2
            [-3 / 2, 11 / 2, -13 / 2, 5 / 2],
            [-1 / 2, 5 / 2, -7 / 2, 3 / 2],
            [1 / 2, -1 / 2, -1 / 2, 1 / 2],
            [3 / 2, -7 / 2, 5 / 2, -1 / 2],
        ],
        [  # s = 3
            [-1.0, 3.0, -3.0, 1.0],
            [-1.0, 3.0, -3.0, 1.0],
            [-1.0, 3.0, -3.0, 1.0],
            [-1.0, 3.0, -3.0, 1.0],
        ],
    ]
)

#: Quadratic-form coefficients of the classical (Jiang-Shu style) smoothness
#: indicators for the four 4-point sub-stencils, in the integer-scaled
#: convention (240x the raw derivative-square quadrature).  BS_QUAD[k][a][b]
#: multiplies f_a * f_b with (f_0, ..., f_3) the sub-stencil values; only the
#: upper triangle is populated.
_BS_ROWS = {
    0: [(0, 0, 547), (0, 1, -3882), (0, 2, 4642), (0, 3, -1854),
        (1, 1, 7043), (1, 2, -17246), (1, 3, 7042),
        (2, 2, 11003), (2, 3, -9402), (3, 3, 2107)],
    1: [(0, 0, 267), (0, 1, -1642), (0, 2, 1602), (0, 3, -494),
        (1, 1, 2843), (1, 2, -5966), (1, 3, 1922),
        (2, 2, 3443), (2, 3, -2522), (3, 3, 547)],
    2: [(0, 0, 547), (0, 1, -2522), (0, 2, 1922), (0, 3, -494),
        (1, 1, 3443), (1, 2, -5966), (1, 3, 1602),
        (2, 2, 2843), (2, 3, -1642), (3, 3, 267)],
    3: [(0, 0, 2107), (0, 1, -9402), (0, 2, 7042), (0, 3, -1854),
        (1, 1, 11003), (1, 2, -17246), (1, 3, 4642),
        (2, 2, 7043), (2, 3, -3882), (3, 3, 547)],
}

BS_QUAD = np.zeros((4, 4, 4))
for _k, _rows in _BS_ROWS.items():
    for _a, _b, _c in _rows:
        BS_QUAD[_k, _a, _b] = float(_c)


def _solve_fraction(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over exact rationals."""
    n = len(rhs)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot_row = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        aug[col] = [v / pivot for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


_FACT = [Fraction(1), Fraction(1), Fraction(2), Fraction(6)]


def undivided_diff_coeffs(k: int, s: int) -> tuple[float, float, float, float]:
    """Solve the 4x4 Vandermonde system for the row (s, k) and return it.

    Nodes are the sub-stencil centers relative to the interface in units of
    dx (half-integers); the right-hand side selects the s-th derivative.
    """
    if not (0 <= k <= 3 and 1 <= s <= 3):
        raise ValueError(f"invalid (k, s) = ({k}, {s})")
    nodes = [Fraction(2 * (q + k - 3) - 1, 2) for q in range(4)]
    matrix = [[nodes[q] ** m / _FACT[m] for q in range(4)] for m in range(4)]
    rhs = [Fraction(1) if m == s else Fraction(0) for m in range(4)]
    return tuple(float(c) for c in _solve_fraction(matrix, rhs))


def _cell_average_moment(node: int, m: int) -> Fraction:
    """Average of x^m over the unit cell centered at an integer node."""
    lo = Fraction(2 * node - 1, 2)
    hi = Fraction(2 * node + 1, 2)
    return (hi ** (m + 1) - lo ** (m + 1)) / (m + 1)


def _candidate_coeffs_exact(k: int) -> list[Fraction]:
    nodes = [k - 3 + q for q in range(4)]
    matrix = [[_cell_average_moment(n, m) for n in nodes] for m in range(4)]
    rhs = [Fraction(1, 2) ** m for m in range(4)]
    return _solve_fraction(matrix, rhs)


def candidate_coeffs_regenerated(k: int) -> tuple[float, ...]:
    """Re-derive candidate row k from cell-average exactness on cubics.

    The coefficients must map the cell averages of any cubic h over the
    sub-stencil cells to h(1/2) exactly (cell j sits at the origin).
    """
    return tuple(float(c) for c in _candidate_coeffs_exact(k))


def seven_point_coeffs_regenerated() -> tuple[float, ...]:
    """Seventh-order upstream-central coefficients on f_{j-3}..f_{j+3}."""
    nodes = list(range(-3, 4))
    matrix = [[_cell_average_moment(n, m) for n in nodes] for m in range(7)]
    rhs = [Fraction(1, 2) ** m for m in range(7)]
    return tuple(float(c) for c in _solve_fraction(matrix, rhs))


def ideal_weights_regenerated() -> tuple[float, ...]:
    """Re-derive the linear weights from the seven-point coefficients.

    Solves the triangular relations that embed the four candidate rows into
    the 7-point row, then verifies the remaining equations exactly.
    """
    nodes = list(range(-3, 4))
    big = [[_cell_average_moment(n, m) for n in nodes] for m in range(7)]
    c7 = _solve_fraction(big, [Fraction(1, 2) ** m for m in range(7)])
    cand = [_candidate_coeffs_exact(k) for k in range(4)]
    d = [Fraction(0)] * 4
    d[0] = c7[0] / cand[0][0]
    d[1] = (c7[1] - d[0] * cand[0][1]) / cand[1][0]
    d[2] = (c7[2] - d[0] * cand[0][2] - d[1] * cand[1][1]) / cand[2][0]
    d[3] = c7[6] / cand[3][3]
    # remaining positions must close exactly
    for pos in range(7):
        acc = Fraction(0)
        for k in range(4):
            q = pos - k
            if 0 <= q <= 3:
                acc += d[k] * cand[k][q]
        if acc != c7[pos]:
            raise ArithmeticError(f"ideal-weight closure failed at position {pos}")
    return tuple(float(v) for v in d)


def bs_quadratic_form(k: int, values) -> float:
    """Evaluate the integer-scaled smoothness quadratic form for stencil k."""
    v = np.asarray(values, dtype=float)
    return float(v @ BS_QUAD[k] @ v)
