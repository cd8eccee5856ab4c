"""Acceptance suite: every criterion at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion with measured values.
"""

import math
import time

import numpy as np
import pytest

from mechlink import (
    ModelKind,
    RhsKind,
    SystemParams,
    convergence_check,
    initial_state,
    integrate,
    resonant_fiber_frequency,
    sweep_1d,
    transfer_efficiency,
)
from mechlink.analysis import pulse_area_deviation
from mechlink.cli import main


@pytest.fixture(scope="module")
def default_lossless():
    return integrate(
        RhsKind.EFFECTIVE_LOSSLESS, SystemParams(), initial_state(ModelKind.EFFECTIVE)
    )


def full_params(delta):
    omega_m = 1.0
    return SystemParams(
        delta=delta,
        omega_m=omega_m,
        omega_c=resonant_fiber_frequency(delta, omega_m=omega_m, g=1.0),
        model_kind=ModelKind.FULL,
    )


def full_run(delta):
    return integrate(
        RhsKind.FULL_LOSSLESS, full_params(delta), initial_state(ModelKind.FULL)
    )


def test_criterion_1_reference_transfer(tmp_path, capsys):
    out = tmp_path / "trajectory.csv"
    start = time.perf_counter()
    assert main(["simulate", "--out", str(out)]) == 0
    elapsed = time.perf_counter() - start
    eta = float(capsys.readouterr().out.split("=")[1])

    data = np.genfromtxt(out, delimiter=",", names=True)
    assert len(data) == 2001
    assert eta >= 0.9

    n_b1_at_2 = float(data["n_b1"][np.isclose(data["t"], 2.0)][0])
    assert n_b1_at_2 < 0.1

    t_peak_a2 = float(data["t"][data["n_a2"].argmax()])
    assert 8.0 <= t_peak_a2 <= 10.0

    n_b2_final = float(data["n_b2"][-1])
    assert n_b2_final >= 0.9

    assert elapsed < 1.0
    print(
        f"\n[PASS] criterion 1: eta = {eta:.6f} >= 0.9, n_b1(2) = {n_b1_at_2:.2e} < 0.1, "
        f"n_a2 peak at t = {t_peak_a2:.2f} in [8, 10], n_b2(20) = {n_b2_final:.4f} >= 0.9, "
        f"runtime {elapsed:.2f} s < 1 s"
    )


def test_criterion_2_coupling_sweep():
    start = time.perf_counter()
    result = sweep_1d("G0", 0.5, 5.0, 46, SystemParams())
    elapsed = time.perf_counter() - start

    assert abs(result.best_value - 2.5) <= 0.25
    deviation = pulse_area_deviation(result.best_value, SystemParams().s)
    assert deviation < 0.05
    assert elapsed < 30.0
    print(
        f"\n[PASS] criterion 2: best G0 = {result.best_value:g} within 0.25 of 2.5, "
        f"pulse-area deviation {deviation:.4f} < 0.05, runtime {elapsed:.1f} s < 30 s"
    )


def test_criterion_3_detuning_sweep():
    start = time.perf_counter()
    result = sweep_1d("delta", 5.0, 20.0, 61, SystemParams())
    elapsed = time.perf_counter() - start

    assert abs(result.best_value - 10.5) <= 1.0
    assert elapsed < 40.0
    print(
        f"\n[PASS] criterion 3: best delta = {result.best_value:g} within 1.0 of 10.5, "
        f"runtime {elapsed:.1f} s < 40 s"
    )


def test_criterion_4_dissipation_consistency(default_lossless):
    r = 0.01
    params = SystemParams(kappa1=r, kappa2=r, gamma1=r, gamma2=r)
    damped = integrate(
        RhsKind.EFFECTIVE_DISSIPATIVE, params, initial_state(ModelKind.EFFECTIVE)
    )
    norms = (np.abs(damped.states) ** 2).sum(axis=1)
    residual = float(np.abs(norms - np.exp(-r * damped.times)).max())
    assert residual < 1e-6

    ratio = transfer_efficiency(damped) / transfer_efficiency(default_lossless)
    assert 0.80 <= ratio <= 0.84
    print(
        f"\n[PASS] criterion 4: norm residual {residual:.2e} < 1e-6, "
        f"eta ratio {ratio:.5f} in [0.80, 0.84] (exp(-0.2) = {math.exp(-0.2):.5f})"
    )


def test_criterion_5_oracle_equivalence():
    rabi = SystemParams(
        G0=1.0, g_fiber=0.0, t1=0.0, t2=math.pi, s=1e6, t_off=math.pi, t_final=math.pi
    )
    traj = integrate(RhsKind.EFFECTIVE_LOSSLESS, rabi, [0, 0, 1, 0])
    occ = np.abs(traj.states) ** 2
    err = max(
        float(np.abs(occ[:, 2] - np.cos(traj.times) ** 2).max()),
        float(np.abs(occ[:, 0] - np.sin(traj.times) ** 2).max()),
    )
    assert err < 1e-6

    coarse = convergence_check(RhsKind.EFFECTIVE_LOSSLESS, rabi, [0, 0, 1, 0], 8e-3)
    finer = convergence_check(RhsKind.EFFECTIVE_LOSSLESS, rabi, [0, 0, 1, 0], 4e-3)
    factor = coarse / finer
    assert 12.0 <= factor <= 20.0
    print(
        f"\n[PASS] criterion 5: Rabi occupation error {err:.2e} < 1e-6, "
        f"Richardson halving factor {factor:.2f} in [12, 20]"
    )


def test_criterion_6_lossless_conservation(default_lossless):
    drifts = {}
    norms = (np.abs(default_lossless.states) ** 2).sum(axis=1)
    drifts["effective"] = float(np.abs(norms - norms[0]).max())

    full = integrate(
        RhsKind.FULL_LOSSLESS,
        SystemParams(model_kind=ModelKind.FULL),
        initial_state(ModelKind.FULL),
    )
    norms = (np.abs(full.states) ** 2).sum(axis=1)
    drifts["full"] = float(np.abs(norms - norms[0]).max())

    assert all(d < 1e-8 for d in drifts.values())
    print(
        f"\n[PASS] criterion 6: norm drift effective {drifts['effective']:.2e}, "
        f"full {drifts['full']:.2e}, both < 1e-8"
    )


def test_criterion_7_full_model_fiber_stays_dark():
    peaks = {}
    for delta in (10.5, 20.0):
        traj = full_run(delta)
        peaks[delta] = float((np.abs(traj.states[:, 4]) ** 2).max())

    assert peaks[10.5] < 0.05
    assert peaks[20.0] < peaks[10.5]
    print(
        f"\n[PASS] criterion 7: peak fiber occupation {peaks[10.5]:.4f} < 0.05 at "
        f"delta = 10.5, falling to {peaks[20.0]:.4f} at delta = 20"
    )


def test_criterion_8_bitwise_determinism(tmp_path, capsys):
    commands = {
        "simulate": ["simulate"],
        "pulses": ["pulses"],
        "sweep": ["sweep", "--param", "G0", "--min", "2.4", "--max", "2.6", "--steps", "3"],
    }
    for name, argv in commands.items():
        outputs = []
        for run in ("a", "b"):
            path = tmp_path / f"{name}_{run}.csv"
            assert main(argv + ["--out", str(path)]) == 0
            outputs.append(path.read_bytes())
        assert outputs[0] == outputs[1], f"{name} runs differ"
    capsys.readouterr()
    print("\n[PASS] criterion 8: repeated simulate/pulses/sweep runs are byte-identical")
