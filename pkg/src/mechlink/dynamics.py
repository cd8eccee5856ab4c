"""Right-hand sides of the coupled-mode equations.

All model variants are linear maps on the state vector with time-dependent
coefficients.  Mode order is (a1, a2, b1, b2) for the effective four-mode
model and (a1, a2, b1, b2, c) for the full five-mode model, a = cavity,
b = mechanical, c = fiber.
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import InvalidParam
from .params import ModelKind, SystemParams
from .pulses import CouplingSnapshot, coupling_snapshot, effective_hop


class RhsKind(enum.Enum):
    """Model variant selecting dimension and presence of damping."""

    EFFECTIVE_LOSSLESS = "effective-lossless"
    EFFECTIVE_DISSIPATIVE = "effective-dissipative"
    FULL_LOSSLESS = "full-lossless"
    FULL_DISSIPATIVE = "full-dissipative"

    @property
    def model_kind(self) -> ModelKind:
        if self in (RhsKind.EFFECTIVE_LOSSLESS, RhsKind.EFFECTIVE_DISSIPATIVE):
            return ModelKind.EFFECTIVE
        return ModelKind.FULL

    @property
    def n_modes(self) -> int:
        return self.model_kind.n_modes

    @property
    def dissipative(self) -> bool:
        return self in (RhsKind.EFFECTIVE_DISSIPATIVE, RhsKind.FULL_DISSIPATIVE)

    @classmethod
    def from_flags(cls, model_kind: ModelKind, dissipative: bool) -> "RhsKind":
        if model_kind is ModelKind.EFFECTIVE:
            return cls.EFFECTIVE_DISSIPATIVE if dissipative else cls.EFFECTIVE_LOSSLESS
        return cls.FULL_DISSIPATIVE if dissipative else cls.FULL_LOSSLESS


def effective_rhs(state: np.ndarray, snap: CouplingSnapshot) -> np.ndarray:
    """Lossless four-mode derivative, interaction terms only.

        da1 = -i G1 b1 - i J a2
        da2 = -i G2 b2 - i J a1
        db1 = -i G1 a1
        db2 = -i G2 a2
    """
    a1, a2, b1, b2 = state
    return np.array(
        [
            -1j * (snap.G1 * b1 + snap.J * a2),
            -1j * (snap.G2 * b2 + snap.J * a1),
            -1j * snap.G1 * a1,
            -1j * snap.G2 * a2,
        ]
    )


def dissipative_rhs(
    state: np.ndarray, snap: CouplingSnapshot, params: SystemParams
) -> np.ndarray:
    """Four-mode derivative with amplitude damping -rate/2 on each mode.

    Input-noise terms are replaced by their vacuum mean (zero), so damping is
    the only open-system effect on the mean amplitudes.
    """
    d = effective_rhs(state, snap)
    d -= 0.5 * np.array(params.rates) * state
    return d


def _full_deriv(state, snap, params, rates):
    """Five-mode derivative for explicit damping rates (fiber is undamped)."""
    a1, a2, b1, b2, c = state
    # both cavities are driven at the same detuning: delta_1 = delta_2 = -delta - omega_c
    d1 = -params.delta - params.omega_c
    k1, k2, g1, g2 = rates
    wm = params.omega_m
    return np.array(
        [
            (1j * d1 - 0.5 * k1) * a1 - 1j * (snap.g * c + snap.G1 * b1),
            (1j * d1 - 0.5 * k2) * a2 - 1j * (snap.g * c + snap.G2 * b2),
            -(1j * wm + 0.5 * g1) * b1 - 1j * snap.G1 * a1,
            -(1j * wm + 0.5 * g2) * b2 - 1j * snap.G2 * a2,
            -1j * (params.omega_c * c + snap.g * (a1 + a2)),
        ]
    )


def full_rhs(state: np.ndarray, t: float, params: SystemParams) -> np.ndarray:
    """Five-mode derivative of the undiagonalized model at time ``t``.

        da1 = i d1 a1 - i g c - i G1 b1 - kappa1/2 a1      (a2 symmetric)
        db1 = -i omega_m b1 - i G1 a1 - gamma1/2 b1        (b2 symmetric)
        dc  = -i omega_c c - i g (a1 + a2)

    with d1 = -delta - omega_c the common drive detuning of both cavities.
    Couplings are taken from :func:`coupling_snapshot` at ``t``.
    """
    if params.model_kind is not ModelKind.FULL:
        raise InvalidParam("model_kind", "full_rhs requires model_kind = FULL")
    return _full_deriv(state, coupling_snapshot(t, params), params, params.rates)


_ZERO_RATES = (0.0, 0.0, 0.0, 0.0)


def stage_rhs(kind: RhsKind, params: SystemParams):
    """Bind a model variant and parameters into a stage function f(state, snap).

    Lossless kinds drop the damping terms regardless of the rates carried by
    ``params``.
    """
    if kind is RhsKind.EFFECTIVE_LOSSLESS:
        return effective_rhs
    if kind is RhsKind.EFFECTIVE_DISSIPATIVE:
        return lambda state, snap: dissipative_rhs(state, snap, params)
    if kind is RhsKind.FULL_LOSSLESS:
        return lambda state, snap: _full_deriv(state, snap, params, _ZERO_RATES)
    rates = params.rates
    return lambda state, snap: _full_deriv(state, snap, params, rates)


def resonant_fiber_frequency(delta: float, omega_m: float = 1.0, g: float = 1.0) -> float:
    """Fiber frequency that makes the drive pulses resonant in the full model.

    In the frame where the cavities sit at -(d1 - 2 g^2/delta) with
    d1 = -delta - omega_c, the pulse exchange a <-> b conserves energy when
    omega_c = omega_m - delta - 2 g^2 / delta.
    """
    return omega_m - delta - effective_hop(g, delta)
