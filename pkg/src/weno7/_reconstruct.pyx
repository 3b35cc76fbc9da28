# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled batched reconstruction sweep (hot path).

Semantics match weno7._kernels_py expression by expression; scheme codes:
0 = ns7, 1 = bs7, 2 = z7.  tau codes: 0 = high_order, 1 = classic.
"""

from libc.math cimport fabs


cdef double D0 = 1.0 / 35.0
cdef double D1 = 12.0 / 35.0
cdef double D2 = 18.0 / 35.0
cdef double D3 = 4.0 / 35.0

# candidate rows
cdef double C00 = -1.0 / 4.0,  C01 = 13.0 / 12.0, C02 = -23.0 / 12.0, C03 = 25.0 / 12.0
cdef double C10 = 1.0 / 12.0,  C11 = -5.0 / 12.0, C12 = 13.0 / 12.0,  C13 = 1.0 / 4.0
cdef double C20 = -1.0 / 12.0, C21 = 7.0 / 12.0,  C22 = 7.0 / 12.0,   C23 = -1.0 / 12.0
cdef double C30 = 1.0 / 4.0,   C31 = 13.0 / 12.0, C32 = -5.0 / 12.0,  C33 = 1.0 / 12.0

# undivided-difference rows, s = 1
cdef double A10_0 = -23.0 / 24.0, A10_1 = 93.0 / 24.0, A10_2 = -141.0 / 24.0, A10_3 = 71.0 / 24.0
cdef double A11_0 = 1.0 / 24.0,   A11_1 = -3.0 / 24.0, A11_2 = -21.0 / 24.0,  A11_3 = 23.0 / 24.0
cdef double A12_0 = 1.0 / 24.0,   A12_1 = -27.0 / 24.0, A12_2 = 27.0 / 24.0,  A12_3 = -1.0 / 24.0
cdef double A13_0 = -23.0 / 24.0, A13_1 = 21.0 / 24.0, A13_2 = 3.0 / 24.0,    A13_3 = -1.0 / 24.0
# s = 2
cdef double A20_0 = -1.5, A20_1 = 5.5,  A20_2 = -6.5, A20_3 = 2.5
cdef double A21_0 = -0.5, A21_1 = 2.5,  A21_2 = -3.5, A21_3 = 1.5
cdef double A22_0 = 0.5,  A22_1 = -0.5, A22_2 = -0.5, A22_3 = 0.5
cdef double A23_0 = 1.5,  A23_1 = -3.5, A23_2 = 2.5,  A23_3 = -0.5


cdef inline double ipow(double x, int n) noexcept nogil:
    cdef double r = x
    cdef int i
    for i in range(n - 1):
        r = r * x
    return r


cdef inline double bs_beta(double v0, double v1, double v2, double v3, int k) noexcept nogil:
    # sums of squares mathematically; clamp float cancellation at zero
    cdef double b
    if k == 0:
        b = (v0 * (547.0 * v0 - 3882.0 * v1 + 4642.0 * v2 - 1854.0 * v3)
             + v1 * (7043.0 * v1 - 17246.0 * v2 + 7042.0 * v3)
             + v2 * (11003.0 * v2 - 9402.0 * v3)
             + v3 * (2107.0 * v3))
    elif k == 1:
        b = (v0 * (267.0 * v0 - 1642.0 * v1 + 1602.0 * v2 - 494.0 * v3)
             + v1 * (2843.0 * v1 - 5966.0 * v2 + 1922.0 * v3)
             + v2 * (3443.0 * v2 - 2522.0 * v3)
             + v3 * (547.0 * v3))
    elif k == 2:
        b = (v0 * (547.0 * v0 - 2522.0 * v1 + 1922.0 * v2 - 494.0 * v3)
             + v1 * (3443.0 * v1 - 5966.0 * v2 + 1602.0 * v3)
             + v2 * (2843.0 * v2 - 1642.0 * v3)
             + v3 * (267.0 * v3))
    else:
        b = (v0 * (2107.0 * v0 - 9402.0 * v1 + 7042.0 * v2 - 1854.0 * v3)
             + v1 * (11003.0 * v1 - 17246.0 * v2 + 4642.0 * v3)
             + v2 * (7043.0 * v2 - 3882.0 * v3)
             + v3 * (547.0 * v3))
    return b if b > 0.0 else 0.0


cdef double recon(const double* w, int step, int scheme, double eps,
                  double xi1, double xi2, int s_exp, int p_exp,
                  int tau_variant) noexcept nogil:
    cdef double w0 = w[0], w1 = w[step], w2 = w[2 * step], w3 = w[3 * step]
    cdef double w4 = w[4 * step], w5 = w[5 * step], w6 = w[6 * step]
    cdef double c0, c1, c2, c3
    cdef double b0, b1, b2, b3
    cdef double l1, l2, l3, diff, zeta, tau
    cdef double a0, a1, a2, a3, inv

    c0 = C00 * w0 + C01 * w1 + C02 * w2 + C03 * w3
    c1 = C10 * w1 + C11 * w2 + C12 * w3 + C13 * w4
    c2 = C20 * w2 + C21 * w3 + C22 * w4 + C23 * w5
    c3 = C30 * w3 + C31 * w4 + C32 * w5 + C33 * w6

    if scheme == 0:
        l1 = A10_0 * w0 + A10_1 * w1 + A10_2 * w2 + A10_3 * w3
        l2 = A20_0 * w0 + A20_1 * w1 + A20_2 * w2 + A20_3 * w3
        l3 = -w0 + 3.0 * w1 - 3.0 * w2 + w3
        b0 = xi1 * fabs(l1) + xi2 * fabs(l2) + fabs(l3)
        l1 = A11_0 * w1 + A11_1 * w2 + A11_2 * w3 + A11_3 * w4
        l2 = A21_0 * w1 + A21_1 * w2 + A21_2 * w3 + A21_3 * w4
        l3 = -w1 + 3.0 * w2 - 3.0 * w3 + w4
        b1 = xi1 * fabs(l1) + xi2 * fabs(l2) + fabs(l3)
        l1 = A12_0 * w2 + A12_1 * w3 + A12_2 * w4 + A12_3 * w5
        l2 = A22_0 * w2 + A22_1 * w3 + A22_2 * w4 + A22_3 * w5
        l3 = -w2 + 3.0 * w3 - 3.0 * w4 + w5
        b2 = xi1 * fabs(l1) + xi2 * fabs(l2) + fabs(l3)
        l1 = A13_0 * w3 + A13_1 * w4 + A13_2 * w5 + A13_3 * w6
        l2 = A23_0 * w3 + A23_1 * w4 + A23_2 * w5 + A23_3 * w6
        l3 = -w3 + 3.0 * w4 - 3.0 * w5 + w6
        b3 = xi1 * fabs(l1) + xi2 * fabs(l2) + fabs(l3)

        diff = b0 - b3
        zeta = diff * diff
        a0 = D0 * (1.0 + ipow(zeta / ((b0 + eps) * (b0 + eps)), s_exp))
        a1 = D1 * (1.0 + ipow(zeta / ((b1 + eps) * (b1 + eps)), s_exp))
        a2 = D2 * (1.0 + ipow(zeta / ((b2 + eps) * (b2 + eps)), s_exp))
        a3 = D3 * (1.0 + ipow(zeta / ((b3 + eps) * (b3 + eps)), s_exp))
    else:
        b0 = bs_beta(w0, w1, w2, w3, 0)
        b1 = bs_beta(w1, w2, w3, w4, 1)
        b2 = bs_beta(w2, w3, w4, w5, 2)
        b3 = bs_beta(w3, w4, w5, w6, 3)
        if scheme == 1:
            a0 = D0 / ipow(eps + b0, p_exp)
            a1 = D1 / ipow(eps + b1, p_exp)
            a2 = D2 / ipow(eps + b2, p_exp)
            a3 = D3 / ipow(eps + b3, p_exp)
        else:
            if tau_variant == 0:
                tau = fabs(b0 + 3.0 * b1 - 3.0 * b2 - b3)
            else:
                tau = fabs(b0 - b1 - b2 + b3)
            a0 = D0 * (1.0 + ipow(tau / (b0 + eps), p_exp))
            a1 = D1 * (1.0 + ipow(tau / (b1 + eps), p_exp))
            a2 = D2 * (1.0 + ipow(tau / (b2 + eps), p_exp))
            a3 = D3 * (1.0 + ipow(tau / (b3 + eps), p_exp))

    inv = 1.0 / (a0 + a1 + a2 + a3)
    return (a0 * c0 + a1 * c1 + a2 * c2 + a3 * c3) * inv


def interface_fluxes(const double[:, ::1] fp, const double[:, ::1] fm,
                     double[:, ::1] out, int scheme, double eps,
                     double xi1, double xi2, int s_exp, int p_exp,
                     int tau_variant):
    """out[r, i] = recon+(fp row windows) + recon-(mirrored fm windows)."""
    cdef Py_ssize_t rows = fp.shape[0]
    cdef Py_ssize_t m = fp.shape[1]
    cdef Py_ssize_t n_if = m - 7
    cdef Py_ssize_t r, i
    with nogil:
        for r in range(rows):
            for i in range(n_if):
                out[r, i] = (recon(&fp[r, i], 1, scheme, eps, xi1, xi2,
                                   s_exp, p_exp, tau_variant)
                             + recon(&fm[r, i + 7], -1, scheme, eps, xi1, xi2,
                                     s_exp, p_exp, tau_variant))
