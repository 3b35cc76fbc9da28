import math

import numpy as np
import pytest

from weno7.errors import VacuumState
from weno7.riemann import RiemannState, exact_riemann_1d, sample, solve_star

GAMMA = 1.4

# star states frozen from an independent bracketing solve (scipy.brentq on
# the two-sided pressure function) run before this module was written
SOD_MODIFIED = RiemannState((1.0, 0.75, 1.0), (0.125, 0.0, 0.1), 0.5)
SOD_STAR_P = 0.4662935668398557
SOD_STAR_U = 1.3609055190925574
SOD_STAR_RHO_L = 0.5798666874803242
SOD_STAR_RHO_R = 0.3397002349019075

LAX = RiemannState((0.445, 0.698, 3.528), (0.5, 0.0, 0.571), 0.0)
LAX_STAR_P = 2.466097919207357
LAX_STAR_U = 1.528723026632884


def test_equal_states_identity():
    states = RiemannState((1.0, 0.3, 2.0), (1.0, 0.3, 2.0))
    for xi in (-5.0, 0.0, 0.3, 7.0):
        np.testing.assert_allclose(sample(states, xi, GAMMA), (1.0, 0.3, 2.0),
                                   rtol=1e-14)


def test_sod_modified_star_state_frozen():
    p, u = solve_star(SOD_MODIFIED, GAMMA)
    assert p == pytest.approx(SOD_STAR_P, rel=1e-12)
    assert u == pytest.approx(SOD_STAR_U, rel=1e-12)


def test_lax_star_state_frozen():
    p, u = solve_star(LAX, GAMMA)
    assert p == pytest.approx(LAX_STAR_P, rel=1e-12)
    assert u == pytest.approx(LAX_STAR_U, rel=1e-12)


def test_sod_modified_wave_structure():
    """Left sonic rarefaction, right-traveling contact, right shock."""
    p_star, u_star = solve_star(SOD_MODIFIED, GAMMA)
    rho_l, u_l, p_l = SOD_MODIFIED.left
    c_l = math.sqrt(GAMMA * p_l / rho_l)
    assert p_star < p_l  # left wave is a rarefaction
    head = u_l - c_l
    c_star = c_l * (p_star / p_l) ** ((GAMMA - 1) / (2 * GAMMA))
    tail = u_star - c_star
    assert head < 0.0 < tail  # sonic: the fan straddles x/t = 0
    assert u_star > 0.0  # right-traveling contact
    assert p_star > SOD_MODIFIED.right[2]  # right wave is a shock
    # star densities on both sides of the contact
    rho, u, p = sample(SOD_MODIFIED, u_star - 1e-9, GAMMA)
    assert rho == pytest.approx(SOD_STAR_RHO_L, rel=1e-9)
    rho, u, p = sample(SOD_MODIFIED, u_star + 1e-9, GAMMA)
    assert rho == pytest.approx(SOD_STAR_RHO_R, rel=1e-9)


def test_symmetric_double_rarefaction_has_zero_contact_speed():
    states = RiemannState((1.0, -0.1, 1.0), (1.0, 0.1, 1.0))
    _p, u = solve_star(states, GAMMA)
    assert abs(u) <= 1e-14


def test_rankine_hugoniot_across_shock_branches():
    rng = np.random.default_rng(11)
    checked = 0
    for _ in range(40):
        left = (rng.uniform(0.1, 2.0), rng.uniform(-0.5, 0.5), rng.uniform(0.1, 2.0))
        right = (rng.uniform(0.1, 2.0), rng.uniform(-0.5, 0.5), rng.uniform(0.1, 2.0))
        states = RiemannState(left, right)
        p_star, u_star = solve_star(states, GAMMA)
        for side, (rho_k, u_k, p_k) in (("L", left), ("R", right)):
            if p_star <= p_k:
                continue  # rarefaction side
            checked += 1
            sign = 1.0 if side == "L" else -1.0
            c_k = math.sqrt(GAMMA * p_k / rho_k)
            speed = u_k - sign * c_k * math.sqrt(
                (GAMMA + 1) / (2 * GAMMA) * p_star / p_k + (GAMMA - 1) / (2 * GAMMA))
            gm = (GAMMA - 1) / (GAMMA + 1)
            rho_star = rho_k * (p_star / p_k + gm) / (gm * p_star / p_k + 1.0)

            def cons(rho, u, p):
                e = p / (GAMMA - 1) + 0.5 * rho * u * u
                return np.array([rho, rho * u, e])

            def flx(rho, u, p):
                e = p / (GAMMA - 1) + 0.5 * rho * u * u
                return np.array([rho * u, rho * u * u + p, u * (e + p)])

            jump_f = flx(rho_star, u_star, p_star) - flx(rho_k, u_k, p_k)
            jump_u = cons(rho_star, u_star, p_star) - cons(rho_k, u_k, p_k)
            np.testing.assert_allclose(jump_f, speed * jump_u, rtol=1e-10,
                                       atol=1e-10)
    assert checked > 10


def test_vacuum_raises():
    # receding states: du exceeds 2(c_l + c_r)/(gamma - 1) ~= 11.83
    states = RiemannState((1.0, -6.0, 1.0), (1.0, 6.0, 1.0))
    with pytest.raises(VacuumState):
        solve_star(states, GAMMA)


def test_profile_at_t0_is_initial_data():
    x = np.linspace(0, 1, 11)
    out = exact_riemann_1d(SOD_MODIFIED, x, 0.0, GAMMA)
    left = x <= 0.5
    np.testing.assert_allclose(out[0, left], 1.0)
    np.testing.assert_allclose(out[0, ~left], 0.125)


def test_positive_state_validation():
    with pytest.raises(ValueError):
        RiemannState((1.0, 0.0, -1.0), (1.0, 0.0, 1.0))
