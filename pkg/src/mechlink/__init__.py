"""Coupled-mode simulator for quantum state transfer between two mechanical
oscillators connected through fiber-linked optical cavities.

Mean-field amplitudes are propagated with fixed-step RK4 under a schedule of
two Gaussian drive pulses and a switched fiber coupling; the package
reproduces the transfer-efficiency optima, pulse profiles, and dissipation
behaviour of the reference scenario (all rates in units of g0).
"""

from .analysis import (
    SweepResult,
    norm_decay_residual,
    occupations,
    sweep_1d,
    transfer_efficiency,
)
from .dynamics import (
    RhsKind,
    dissipative_rhs,
    effective_rhs,
    full_rhs,
    resonant_fiber_frequency,
)
from .errors import (
    InvalidParam,
    NonPositiveDelta,
    NumericError,
    ParseError,
    RegimeWarning,
    SimulationError,
    UnequalRates,
    UnknownKey,
    ZeroInitialExcitation,
)
from .integrator import IntegratorConfig, convergence_check, integrate, norm, rk4_step
from .params import (
    ModelKind,
    SystemParams,
    Trajectory,
    initial_state,
    mode_state,
    validate,
)
from .pulses import (
    CouplingSnapshot,
    coupling_snapshot,
    effective_hop,
    fiber_coupling,
    gaussian_coupling,
    gaussian_pulse_area,
)

__version__ = "0.1.0"

__all__ = [
    "CouplingSnapshot",
    "IntegratorConfig",
    "InvalidParam",
    "ModelKind",
    "NonPositiveDelta",
    "NumericError",
    "ParseError",
    "RegimeWarning",
    "RhsKind",
    "SimulationError",
    "SweepResult",
    "SystemParams",
    "Trajectory",
    "UnequalRates",
    "UnknownKey",
    "ZeroInitialExcitation",
    "convergence_check",
    "coupling_snapshot",
    "dissipative_rhs",
    "effective_hop",
    "effective_rhs",
    "fiber_coupling",
    "full_rhs",
    "gaussian_coupling",
    "gaussian_pulse_area",
    "initial_state",
    "integrate",
    "mode_state",
    "norm",
    "norm_decay_residual",
    "occupations",
    "resonant_fiber_frequency",
    "rk4_step",
    "sweep_1d",
    "transfer_efficiency",
    "validate",
]
