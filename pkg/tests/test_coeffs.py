import numpy as np

from weno7.coeffs import (CANDIDATE_COEFFS, IDEAL_WEIGHTS, UNDIV_COEFFS,
                          candidate_coeffs_regenerated,
                          ideal_weights_regenerated,
                          seven_point_coeffs_regenerated,
                          undivided_diff_coeffs)


def test_undivided_coeff_known_rows():
    np.testing.assert_allclose(undivided_diff_coeffs(2, 3), (-1, 3, -3, 1),
                               atol=1e-13)
    np.testing.assert_allclose(undivided_diff_coeffs(2, 1),
                               (1 / 24, -27 / 24, 27 / 24, -1 / 24), atol=1e-13)
    np.testing.assert_allclose(undivided_diff_coeffs(0, 2),
                               (-1.5, 5.5, -6.5, 2.5), atol=1e-13)


def test_undivided_table_regenerates():
    for s in (1, 2, 3):
        for k in range(4):
            np.testing.assert_allclose(
                undivided_diff_coeffs(k, s), UNDIV_COEFFS[s - 1][k], atol=1e-13)


def test_candidate_rows_regenerate_and_sum_to_one():
    for k in range(4):
        np.testing.assert_allclose(candidate_coeffs_regenerated(k),
                                   CANDIDATE_COEFFS[k], atol=1e-15)
    np.testing.assert_allclose(CANDIDATE_COEFFS.sum(axis=1), 1.0, atol=4e-16)


def test_ideal_weights_regenerate():
    np.testing.assert_allclose(ideal_weights_regenerated(), IDEAL_WEIGHTS,
                               atol=1e-16)
    assert abs(IDEAL_WEIGHTS.sum() - 1.0) < 4e-16


def test_ideal_weights_assemble_seven_point_row():
    c7 = np.array(seven_point_coeffs_regenerated())
    assembled = np.zeros(7)
    for k in range(4):
        assembled[k:k + 4] += IDEAL_WEIGHTS[k] * CANDIDATE_COEFFS[k]
    np.testing.assert_allclose(assembled, c7, atol=1e-15)
    # known closed forms of the upstream seventh-order row
    np.testing.assert_allclose(
        c7, [-1 / 140, 5 / 84, -101 / 420, 319 / 420, 107 / 210, -19 / 210, 1 / 105],
        atol=1e-15)
