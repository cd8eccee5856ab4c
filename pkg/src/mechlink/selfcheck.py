"""Built-in verification suite behind the ``validate`` CLI command.

Each check integrates a scenario with a known closed form and compares
against it; the predictions are computed inline so a defect anywhere in the
pulse/dynamics/integration chain cannot silently cancel.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .analysis import norm_decay_residual, occupations, pulse_area_deviation, sweep_1d
from .dynamics import RhsKind
from .integrator import convergence_check, integrate
from .params import SystemParams, initial_state


@dataclasses.dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def _rabi_params() -> SystemParams:
    # Constant unit coupling on pair 1 (huge width flattens the pulse to
    # G0 over the run), fiber off: a clean two-mode Rabi oscillation.
    return SystemParams(
        G0=1.0,
        g_fiber=0.0,
        t1=0.0,
        t2=math.pi,
        s=1e6,
        t_off=math.pi,
        t_final=math.pi,
    )


def check_two_mode_rabi(tol: float = 1e-6) -> CheckResult:
    """Occupations of the driven pair must follow cos^2(t) / sin^2(t)."""
    traj = integrate(RhsKind.EFFECTIVE_LOSSLESS, _rabi_params(), [0, 0, 1, 0])
    occ = occupations(traj.states)
    err = max(
        np.abs(occ[:, 2] - np.cos(traj.times) ** 2).max(),
        np.abs(occ[:, 0] - np.sin(traj.times) ** 2).max(),
    )
    return CheckResult(
        "two_mode_rabi", err < tol, f"max occupation error {err:.3e} (tol {tol:g})"
    )


def check_norm_conservation(tol: float = 1e-8) -> CheckResult:
    """The lossless default scenario must conserve total occupation."""
    traj = integrate(RhsKind.EFFECTIVE_LOSSLESS, SystemParams(), [0, 0, 1, 0])
    norms = (np.abs(traj.states) ** 2).sum(axis=1)
    drift = float(np.abs(norms - norms[0]).max())
    return CheckResult(
        "norm_conservation", drift < tol, f"max norm drift {drift:.3e} (tol {tol:g})"
    )


def check_equal_rate_decay(tol: float = 1e-6) -> CheckResult:
    """With equal rates r the norm must follow exp(-r t) exactly."""
    params = SystemParams(kappa1=0.01, kappa2=0.01, gamma1=0.01, gamma2=0.01)
    traj = integrate(RhsKind.EFFECTIVE_DISSIPATIVE, params, [0, 0, 1, 0])
    residual = norm_decay_residual(traj, params)
    return CheckResult(
        "equal_rate_decay", residual < tol, f"max residual {residual:.3e} (tol {tol:g})"
    )


def check_convergence_order(
    factor_range: tuple[float, float] = (12.0, 20.0), fine_tol: float = 1e-8
) -> CheckResult:
    """Halving dt must shrink the step-halving estimate ~16x (order 4)."""
    params = _rabi_params()
    seed = initial_state(params.model_kind)
    kind = RhsKind.EFFECTIVE_LOSSLESS
    coarse = convergence_check(kind, params, seed, 8e-3)
    finer = convergence_check(kind, params, seed, 4e-3)
    factor = coarse / finer
    at_default = convergence_check(kind, params, seed, 1e-3)
    ok = factor_range[0] <= factor <= factor_range[1] and at_default < fine_tol
    return CheckResult(
        "convergence_order",
        ok,
        f"halving factor {factor:.2f} (expect {factor_range[0]:g}-{factor_range[1]:g}), "
        f"estimate at dt=1e-3 {at_default:.3e} (tol {fine_tol:g})",
    )


def check_cavity_hop_rate(tol: float = 1e-6) -> CheckResult:
    """Constant-fiber cavity exchange must run at 2 g^2 / delta.

    With the pulses off and the fiber held on, a seed in cavity 1 oscillates
    as |a2(t)|^2 = sin^2(2 g^2 t / delta); the prediction is computed inline
    with the literal factor 2 so a corrupted hop coefficient fails here.
    """
    g, delta = 1.0, 10.5
    params = SystemParams(
        G0=0.0, delta=delta, g_fiber=g, t1=1.0, t2=2.0, s=0.25, t_off=1e6, t_final=5.0
    )
    traj = integrate(RhsKind.EFFECTIVE_LOSSLESS, params, [1, 0, 0, 0])
    predicted = np.sin((2.0 * g * g / delta) * traj.times) ** 2
    err = float(np.abs(occupations(traj.states)[:, 1] - predicted).max())
    return CheckResult(
        "cavity_hop_rate", err < tol, f"max exchange error {err:.3e} (tol {tol:g})"
    )


def check_pulse_area_optimum(tol: float = 0.05) -> CheckResult:
    """The lossless optimum over G0 must sit at pulse area ~pi/2."""
    result = sweep_1d("G0", 2.0, 3.0, 21, SystemParams())
    dev = pulse_area_deviation(result.best_value, SystemParams().s)
    return CheckResult(
        "pulse_area_optimum",
        dev < tol,
        f"best G0 {result.best_value:g}, area deviation from pi/2 {dev:.4f} (tol {tol:g})",
    )


def run_all_checks() -> list[CheckResult]:
    """Run the whole suite; norm checks first, the slow sweep last."""
    return [
        check_two_mode_rabi(),
        check_norm_conservation(),
        check_equal_rate_decay(),
        check_convergence_order(),
        check_cavity_hop_rate(),
        check_pulse_area_optimum(),
    ]
