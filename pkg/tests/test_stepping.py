import math
from fractions import Fraction

import numpy as np
import pytest
from helpers import pairwise_orders

from weno7.fluxes import LinearAdvection
from weno7.grid import Grid1D, Grid2D
from weno7.stepping import (LSSPRK87_ALPHA_EXACT, SSPRK54_FINAL, SSPRK54_STAGE,
                            DtMode, StepControl, compute_dt, lssprk87_step,
                            ssprk54_step)


def test_lssprk87_tableau_identities():
    assert sum(LSSPRK87_ALPHA_EXACT, Fraction(0)) == 1
    naive = sum(Fraction(k) * a for k, a in enumerate(LSSPRK87_ALPHA_EXACT)) / 2
    assert naive == Fraction(629, 630)
    assert all(a >= 0 for a in LSSPRK87_ALPHA_EXACT)


def test_ssprk54_rows_convex():
    for a, b, _ in SSPRK54_STAGE:
        assert abs(a + b - 1.0) <= 1e-12
        assert a >= 0 and b >= 0
    assert abs(SSPRK54_FINAL[0] + SSPRK54_FINAL[1] + SSPRK54_FINAL[3] - 1.0) <= 1e-12


@pytest.mark.parametrize("step", [lssprk87_step, ssprk54_step])
def test_zero_dt_and_zero_rhs_are_identity(step):
    u = np.array([1.0, -2.0, 0.5])
    np.testing.assert_allclose(step(u, 0.0, lambda v: -3.0 * v), u, rtol=1e-15)
    np.testing.assert_allclose(step(u, 0.37, lambda v: 0.0 * v), u, rtol=1e-15)


def test_lssprk87_matches_amplification_polynomial():
    alpha = [float(a) for a in LSSPRK87_ALPHA_EXACT]
    for z in (-0.5, -0.1, 0.2):
        stepped = float(lssprk87_step(np.array([1.0]), z, lambda u: u)[0])
        closed = sum(alpha[k] * (1 + z / 2) ** k for k in range(7))
        closed += alpha[7] * (1 + z / 2) ** 8
        assert stepped == pytest.approx(closed, abs=1e-14)


def test_lssprk87_is_seventh_order_on_exp():
    # amplification equals sum_{n<=7} z^n/n! + z^8/80640
    for z in (-0.4, 0.25):
        stepped = float(lssprk87_step(np.array([1.0]), z, lambda u: u)[0])
        series = sum(z ** n / math.factorial(n) for n in range(8)) + z ** 8 / 80640.0
        assert stepped == pytest.approx(series, abs=1e-15)


def _ssprk54_poly_exact():
    """Degree-5 amplification coefficients of the float tableau, exactly."""
    def mul_z(p):
        return [Fraction(0)] + p

    def add(p, q):
        n = max(len(p), len(q))
        p = p + [Fraction(0)] * (n - len(p))
        q = q + [Fraction(0)] * (n - len(q))
        return [a + b for a, b in zip(p, q)]

    def scale(c, p):
        f = Fraction(c)
        return [f * a for a in p]

    u0 = [Fraction(1)]
    _, _, c1 = SSPRK54_STAGE[0]
    u1 = add(u0, scale(c1, mul_z(u0)))
    a, b, c = SSPRK54_STAGE[1]
    u2 = add(add(scale(a, u0), scale(b, u1)), scale(c, mul_z(u1)))
    a, b, c = SSPRK54_STAGE[2]
    u3 = add(add(scale(a, u0), scale(b, u2)), scale(c, mul_z(u2)))
    a, b, c = SSPRK54_STAGE[3]
    u4 = add(add(scale(a, u0), scale(b, u3)), scale(c, mul_z(u3)))
    c2, c3, d3, c4, d4 = SSPRK54_FINAL
    out = add(scale(c2, u2), scale(c3, u3))
    out = add(out, scale(d3, mul_z(u3)))
    out = add(out, scale(c4, u4))
    out = add(out, scale(d4, mul_z(u4)))
    return out


def test_ssprk54_matches_expanded_polynomial():
    poly = _ssprk54_poly_exact()
    assert len(poly) == 6
    # fourth-order conditions hold to the tableau's precision
    for n in range(5):
        assert abs(float(poly[n]) - 1.0 / math.factorial(n)) < 5e-15
    for z in (-0.8, -0.3, 0.1, 0.45):
        stepped = float(ssprk54_step(np.array([1.0]), z, lambda u: u)[0])
        exact = float(sum(c * Fraction(z) ** n for n, c in enumerate(poly)))
        assert stepped == pytest.approx(exact, abs=1e-14)


def test_ssprk54_order_four_on_decay():
    errs = []
    for n_steps in (8, 16, 32, 64):
        dt = 1.0 / n_steps
        u = np.array([1.0])
        for _ in range(n_steps):
            u = ssprk54_step(u, dt, lambda v: -v)
        errs.append(abs(u[0] - math.exp(-1.0)))
    orders = pairwise_orders(errs)
    assert orders[-1] == pytest.approx(4.0, abs=0.2)


@pytest.mark.parametrize("step", [lssprk87_step, ssprk54_step])
def test_steppers_commute_with_scaling(step):
    rng = np.random.default_rng(5)
    u = rng.normal(size=6)
    a = rng.normal(size=6)

    def rhs(v):
        return a * v  # linear, diagonal

    lam = 37.5
    np.testing.assert_allclose(step(lam * u, 0.1, rhs), lam * step(u, 0.1, rhs),
                               rtol=1e-13, atol=1e-13)


def test_compute_dt_cfl_and_clipping():
    grid = Grid1D(0, 1, 100)  # dx = 0.01
    ctrl = StepControl(t_final=2.0, cfl=0.5)
    u = np.zeros((1, 100))
    assert compute_dt(u, grid, LinearAdvection(1.0), ctrl) == pytest.approx(0.005)
    assert compute_dt(u, grid, LinearAdvection(1.0),
                      StepControl(t_final=2.0, cfl=0.5), t=1.995) == pytest.approx(0.005)
    assert compute_dt(u, grid, LinearAdvection(1.0),
                      StepControl(t_final=2.0, cfl=0.5), t=1.998) == pytest.approx(0.002)


def test_compute_dt_spatial_order_scaled():
    grid = Grid1D(0, 1, 10)  # dx = 0.1
    ctrl = StepControl(t_final=10.0, cfl=0.5,
                       dt_mode=DtMode.SPATIAL_ORDER_SCALED)
    dt = compute_dt(np.zeros((1, 10)), grid, LinearAdvection(1.0), ctrl)
    assert dt == pytest.approx(0.5 * 0.1 ** 1.75, rel=1e-12)
    assert dt == pytest.approx(8.8914e-3, rel=1e-4)


def test_compute_dt_2d_combines_axes():
    grid = Grid2D.square(0.0, 1.0, 50)
    from weno7.fluxes import Euler2D, conserved_from_primitive
    state = conserved_from_primitive(Euler2D(1.4),
                                     np.array([1.0, 0.5, -0.25, 1.0]))
    u = np.repeat(np.repeat(state[:, None], 50, 1)[:, :, None], 50, 2)
    ctrl = StepControl(t_final=1.0, cfl=0.5)
    c = math.sqrt(1.4)
    sx, sy = 0.5 + c, 0.25 + c
    expect = 0.5 / (sx / grid.x.dx + sy / grid.y.dx)
    assert compute_dt(u, grid, Euler2D(1.4), ctrl) == pytest.approx(expect, rel=1e-13)


def test_step_control_validation():
    with pytest.raises(ValueError):
        StepControl(t_final=1.0, cfl=1.5)
    with pytest.raises(ValueError):
        StepControl(t_final=-1.0)
