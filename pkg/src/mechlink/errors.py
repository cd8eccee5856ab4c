"""Exception and warning types shared across the package."""


class SimulationError(Exception):
    """Base class for every error raised by this package."""


class InvalidParam(SimulationError, ValueError):
    """A parameter violates its invariant; ``name`` is the offending field."""

    def __init__(self, name: str, message: str | None = None):
        self.name = name
        super().__init__(message or f"invalid parameter: {name}")


class NonPositiveDelta(SimulationError, ValueError):
    """The cavity-fiber detuning must be positive to eliminate the fiber mode."""


class NumericError(SimulationError, ArithmeticError):
    """Integration produced non-finite amplitudes; ``time`` locates the failure."""

    def __init__(self, time: float, message: str | None = None):
        self.time = time
        super().__init__(message or f"non-finite state at t = {time}")


class ZeroInitialExcitation(SimulationError, ValueError):
    """Transfer efficiency is undefined when the source oscillator starts empty."""


class UnequalRates(SimulationError, ValueError):
    """The analytic norm-decay law only holds when all four damping rates match."""


class ParseError(SimulationError, ValueError):
    """A run configuration could not be parsed."""


class UnknownKey(ParseError):
    """A configuration object contains a key the schema does not define."""

    def __init__(self, key: str):
        self.key = key
        super().__init__(f"unknown configuration key: {key!r}")


class RegimeWarning(UserWarning):
    """The detuning is not large compared to the fiber coupling, so the
    eliminated-fiber model is outside its regime of validity."""
