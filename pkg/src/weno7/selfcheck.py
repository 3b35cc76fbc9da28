"""Runtime self-checks: coefficient regeneration and tableau identities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .coeffs import (CANDIDATE_COEFFS, IDEAL_WEIGHTS, UNDIV_COEFFS,
                     candidate_coeffs_regenerated, ideal_weights_regenerated,
                     seven_point_coeffs_regenerated, undivided_diff_coeffs)
from .kernels import SchemeConfig, backend_name, interface_fluxes, reconstruct_interface
from .stepping import (LSSPRK87_ALPHA_EXACT, SSPRK54_FINAL, SSPRK54_STAGE,
                       lssprk87_step)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _check(name: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(name, bool(ok), detail)


def run_selfcheck() -> list[CheckResult]:
    results: list[CheckResult] = []

    # candidate rows: regeneration and consistency (each row sums to one)
    worst = 0.0
    for k in range(4):
        regen = np.array(candidate_coeffs_regenerated(k))
        worst = max(worst, float(np.max(np.abs(regen - CANDIDATE_COEFFS[k]))))
    results.append(_check("candidate rows regenerate", worst <= 1e-15,
                          f"max deviation {worst:.2e}"))
    sums = CANDIDATE_COEFFS.sum(axis=1)
    results.append(_check("candidate rows sum to 1",
                          np.allclose(sums, 1.0, rtol=0, atol=4e-16),
                          f"sums {sums}"))

    # undivided-difference rows against the Vandermonde solve
    worst = 0.0
    for s in (1, 2, 3):
        for k in range(4):
            regen = np.array(undivided_diff_coeffs(k, s))
            worst = max(worst, float(np.max(np.abs(regen - UNDIV_COEFFS[s - 1][k]))))
    results.append(_check("undivided-difference rows regenerate", worst <= 1e-13,
                          f"max deviation {worst:.2e}"))

    # ideal weights from the seven-point upstream row
    regen = np.array(ideal_weights_regenerated())
    dev = float(np.max(np.abs(regen - IDEAL_WEIGHTS)))
    results.append(_check("ideal weights regenerate", dev <= 1e-16,
                          f"max deviation {dev:.2e}"))
    c7 = np.array(seven_point_coeffs_regenerated())
    assembled = np.zeros(7)
    for k in range(4):
        assembled[k:k + 4] += IDEAL_WEIGHTS[k] * CANDIDATE_COEFFS[k]
    dev = float(np.max(np.abs(assembled - c7)))
    results.append(_check("ideal weights reproduce the 7-point row", dev <= 1e-15,
                          f"max deviation {dev:.2e}"))

    # lSSPRK(8,7) tableau identities
    total = sum(LSSPRK87_ALPHA_EXACT, Fraction(0))
    results.append(_check("lSSPRK(8,7) sum(alpha) == 1", total == 1, f"sum {total}"))
    naive = sum(Fraction(k) * a for k, a in enumerate(LSSPRK87_ALPHA_EXACT)) / 2
    results.append(_check(
        "lSSPRK(8,7) naive first-order sum == 629/630",
        naive == Fraction(629, 630),
        f"sum(k*alpha)/2 = {naive} (the final extra half-stage restores "
        "exact first order; full amplification matches exp(z) through z^7)"))

    # amplification vs closed form at sample z values
    worst = 0.0
    for z in (-0.5, -0.1, 0.2):
        stepped = float(lssprk87_step(np.array([1.0]), z, lambda u: u)[0])
        alpha = [float(a) for a in LSSPRK87_ALPHA_EXACT]
        closed = sum(alpha[k] * (1.0 + z / 2.0) ** k for k in range(7))
        closed += alpha[7] * (1.0 + z / 2.0) ** 8
        worst = max(worst, abs(stepped - closed))
    results.append(_check("lSSPRK(8,7) matches closed-form amplification",
                          worst <= 1e-14, f"max deviation {worst:.2e}"))

    # SSPRK(5,4) convex rows
    worst = 0.0
    for a, b, _c in SSPRK54_STAGE:
        worst = max(worst, abs(a + b - 1.0))
    worst = max(worst, abs(SSPRK54_FINAL[0] + SSPRK54_FINAL[1]
                           + SSPRK54_FINAL[3] - 1.0))
    results.append(_check("SSPRK(5,4) convex rows sum to 1", worst <= 1e-12,
                          f"max deviation {worst:.2e}"))

    # backend sanity: constant window reconstructs the constant
    cfg = SchemeConfig()
    const = np.full(16, 0.7)
    fhat = interface_fluxes(const, np.zeros(16), cfg)
    dev = float(np.max(np.abs(fhat - reconstruct_interface(np.full(7, 0.7), cfg))))
    results.append(_check(f"active backend ({backend_name()}) constant-exact",
                          dev <= 1e-15, f"max deviation {dev:.2e}"))
    return results


def format_results(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"[{status}] {r.name}: {r.detail}")
    return "\n".join(lines)
