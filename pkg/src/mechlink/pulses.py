"""Time-dependent coupling schedule.

Three ingredients drive the transfer: Gaussian optomechanical pulses on each
cavity, a fiber coupling that is switched off abruptly at ``t_off``, and the
effective cavity-cavity hop 2 g^2 / delta left behind once the far-detuned
fiber mode is eliminated.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import NonPositiveDelta
from .params import SystemParams


class CouplingSnapshot(NamedTuple):
    """Instantaneous coupling rates, all in units of g0."""

    G1: float  # drive pulse on cavity 1 / mechanical 1
    G2: float  # drive pulse on cavity 2 / mechanical 2
    g: float   # cavity-fiber coupling
    J: float   # effective cavity-cavity hop, 2 g^2 / delta


def gaussian_coupling(t: float, G0: float, tc: float, s: float) -> float:
    """Gaussian drive envelope G0 * exp(-(t - tc)^2 / (2 s^2))."""
    x = (t - tc) / s
    return G0 * math.exp(-0.5 * x * x)


def fiber_coupling(t: float, g0: float, t_off: float) -> float:
    """Switched fiber coupling: g0 on [0, t_off), 0 from t_off on.

    The step is hard and right-continuous; no smoothing is applied.
    """
    return g0 if t < t_off else 0.0


def effective_hop(g: float, delta: float) -> float:
    """Cavity-cavity exchange rate 2 g^2 / delta.

    This is the rate mediated by the eliminated fiber mode.  It lives in one
    place so the alternative single-factor convention would be a one-line
    change.
    """
    if delta <= 0:
        raise NonPositiveDelta(f"delta must be > 0, got {delta}")
    return 2.0 * g * g / delta


def coupling_snapshot(
    t: float, params: SystemParams, fiber: float | None = None
) -> CouplingSnapshot:
    """Evaluate all couplings at time ``t``.

    ``fiber`` pins the switched fiber value instead of evaluating the step at
    ``t``; the integrator uses this to keep every Runge-Kutta stage of one
    step on the same side of the discontinuity.  The hop J is always
    recomputed from the instantaneous g, so it drops to zero with the switch.
    """
    g = fiber_coupling(t, params.g_fiber, params.t_off) if fiber is None else fiber
    return CouplingSnapshot(
        G1=gaussian_coupling(t, params.G0, params.t1, params.s),
        G2=gaussian_coupling(t, params.G0, params.t2, params.s),
        g=g,
        J=effective_hop(g, params.delta),
    )


def gaussian_pulse_area(G0: float, s: float) -> float:
    """Total area of one Gaussian pulse, G0 * s * sqrt(2 pi).

    Area pi/2 swaps a two-mode pair completely, which is what pins the
    optimal G0 for a given width.
    """
    return G0 * s * math.sqrt(2.0 * math.pi)
