"""Model parameters, mode-amplitude states, and trajectory containers.

Everything is expressed in natural units: the base cavity-fiber coupling g0
sets the rate unit, times are in 1/g0, and all amplitudes are dimensionless
classical (mean-field) complex numbers.
"""

from __future__ import annotations

import dataclasses
import enum
import warnings

import numpy as np

from .errors import InvalidParam, NumericError, RegimeWarning


class ModelKind(enum.Enum):
    """Which coupled-mode model a parameter set describes."""

    EFFECTIVE = "effective"  # four modes, fiber adiabatically eliminated
    FULL = "full"            # five modes, fiber retained

    @property
    def n_modes(self) -> int:
        return 4 if self is ModelKind.EFFECTIVE else 5


#: Mode ordering used by every state vector in the package.
MODE_LABELS = ("a1", "a2", "b1", "b2", "c")


@dataclasses.dataclass(frozen=True)
class SystemParams:
    """All model constants, in units of g0.

    Defaults reproduce the optimal-transfer scenario: a pair of Gaussian
    drive pulses swaps the excitation mechanical 1 -> cavity 1 and
    cavity 2 -> mechanical 2, while the fiber link carries it between the
    cavities until it is switched off at ``t_off``.
    """

    G0: float = 2.5          # peak optomechanical coupling of both pulses
    delta: float = 10.5      # cavity-fiber detuning; sets the hop 2 g^2 / delta
    g_fiber: float = 1.0     # cavity-fiber coupling while the link is on
    t1: float = 1.0          # center of the first drive pulse
    t2: float = 10.0         # center of the second drive pulse
    s: float = 0.25          # Gaussian width of both pulses
    t_off: float = 9.0       # fiber switch-off time
    t_final: float = 20.0    # simulation end time
    kappa1: float = 0.0      # cavity 1 amplitude damping
    kappa2: float = 0.0      # cavity 2 amplitude damping
    gamma1: float = 0.0      # mechanical 1 amplitude damping
    gamma2: float = 0.0      # mechanical 2 amplitude damping
    omega_m: float = 1.0     # mechanical frequency (full model only)
    omega_c: float = 15.0    # fiber-mode frequency (full model only)
    model_kind: ModelKind = ModelKind.EFFECTIVE
    regime_warning: bool = False  # set by validate() when delta < 5 g_fiber

    @property
    def rates(self) -> tuple[float, float, float, float]:
        """Damping rates in mode order (kappa1, kappa2, gamma1, gamma2)."""
        return (self.kappa1, self.kappa2, self.gamma1, self.gamma2)

    @property
    def n_modes(self) -> int:
        return self.model_kind.n_modes


def validate(params: SystemParams) -> SystemParams:
    """Check every parameter invariant, returning the validated set.

    Raises :class:`InvalidParam` naming the first violated invariant.  A
    detuning below 5 g_fiber is legal (sweeps probe it) but emits a
    :class:`RegimeWarning` and sets the ``regime_warning`` flag, since the
    eliminated-fiber model assumes delta >> g_fiber.

    ``t_final == 0`` is accepted as a degenerate no-evolution run; the pulse
    ordering check ``t1 < t2 <= t_final`` then reduces to ``t1 < t2``.
    """
    if not params.s > 0:
        raise InvalidParam("s", "pulse width s must be > 0")
    if params.t_final < 0:
        raise InvalidParam("t_final", "t_final must be >= 0")
    if params.g_fiber < 0:
        raise InvalidParam("g_fiber", "g_fiber must be >= 0")
    if params.G0 < 0:
        raise InvalidParam("G0", "G0 must be >= 0")
    if not params.delta > 0:
        raise InvalidParam("delta", "detuning delta must be > 0")
    for name in ("kappa1", "kappa2", "gamma1", "gamma2"):
        if getattr(params, name) < 0:
            raise InvalidParam(name, f"damping rate {name} must be >= 0")
    if not params.t1 < params.t2:
        raise InvalidParam("t2", "pulse centers must satisfy t1 < t2")
    if params.t_final > 0 and params.t2 > params.t_final:
        raise InvalidParam("t2", "pulse centers must satisfy t1 < t2 <= t_final")

    in_regime = params.delta >= 5.0 * params.g_fiber
    if not in_regime:
        warnings.warn(
            RegimeWarning(
                f"delta = {params.delta} is below 5 * g_fiber = "
                f"{5.0 * params.g_fiber}; the effective cavity-cavity hop "
                "assumes delta >> g_fiber"
            ),
            stacklevel=2,
        )
    flag = not in_regime
    if flag != params.regime_warning:
        return dataclasses.replace(params, regime_warning=flag)
    return params


def mode_state(amplitudes, model_kind: ModelKind) -> np.ndarray:
    """Build a complex state vector, enforcing length and finiteness."""
    state = np.asarray(amplitudes, dtype=complex)
    if state.shape != (model_kind.n_modes,):
        raise InvalidParam(
            "amplitudes",
            f"{model_kind.value} model needs {model_kind.n_modes} amplitudes, "
            f"got shape {state.shape}",
        )
    if not np.isfinite(state).all():
        raise NumericError(0.0, "state amplitudes must be finite")
    return state


def initial_state(model_kind: ModelKind) -> np.ndarray:
    """Unit excitation in mechanical mode 1, the transfer protocol's seed."""
    state = np.zeros(model_kind.n_modes, dtype=complex)
    state[2] = 1.0
    return state


@dataclasses.dataclass(eq=False)
class Trajectory:
    """Sampled solution of one integration run.

    ``times`` is strictly increasing starting at 0; ``states`` holds the full
    complex amplitudes (one row per sample, mode order a1, a2, b1, b2[, c])
    so any observable can be recomputed without re-integrating.
    """

    times: np.ndarray
    states: np.ndarray
    params: SystemParams

    def __post_init__(self):
        if len(self.times) != len(self.states):
            raise InvalidParam("states", "times and states must align")

    @property
    def initial(self) -> np.ndarray:
        return self.states[0]

    @property
    def final(self) -> np.ndarray:
        return self.states[-1]
