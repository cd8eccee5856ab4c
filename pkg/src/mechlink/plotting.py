"""Render simulation results to figure files alongside the CSV output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .analysis import SweepResult
from .params import Trajectory

_OCC_LABELS = ("cavity 1", "cavity 2", "mechanical 1", "mechanical 2", "fiber")
_OCC_STYLES = ("k-", "b--", "r-", "m-", "g:")


def plot_occupations(traj: Trajectory, path: str) -> None:
    """Occupation of every mode versus time."""
    occ = np.abs(traj.states) ** 2
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for k in range(occ.shape[1]):
        ax.plot(traj.times, occ[:, k], _OCC_STYLES[k], label=_OCC_LABELS[k])
    ax.set_xlabel("time ($1/g_0$)")
    ax.set_ylabel("occupation number")
    ax.legend(loc="center right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_pulse_profiles(times, G1, G2, g, J, path: str) -> None:
    """Time profiles of the drive pulses, the fiber switch, and the hop."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.plot(times, G1, "r--", label="$G_1$")
    ax.plot(times, G2, "b--", label="$G_2$")
    ax.plot(times, g, "k-", label="$g$")
    ax.plot(times, J, "g:", label="$J = 2g^2/\\Delta$")
    ax.set_xlabel("time ($1/g_0$)")
    ax.set_ylabel("coupling rate ($g_0$)")
    ax.legend(loc="center right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_sweep(result: SweepResult, path: str) -> None:
    """Transfer efficiency against the swept parameter, optimum marked."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.plot(result.grid, result.eta, "b-")
    ax.plot(result.best_value, result.best_eta, "ro", label=f"best {result.param_name} = {result.best_value:g}")
    ax.set_xlabel(f"{result.param_name} ($g_0$ units)")
    ax.set_ylabel("transfer efficiency $\\eta$")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
