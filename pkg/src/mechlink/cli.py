"""Command-line front end: simulate, sweep, pulses, validate.

Configs are JSON objects whose defaults reproduce the optimal-transfer
scenario, so a bare ``mechlink simulate`` regenerates the reference run.
Results are written as CSV (locale-independent, '.' decimal separator, full
double precision) and optionally rendered to a figure with ``--plot``.

Exit codes: 0 success, 1 config/usage error, 2 numeric error,
3 self-check failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

import numpy as np

from . import plotting, selfcheck
from .analysis import sweep_1d, transfer_efficiency
from .dynamics import RhsKind
from .errors import InvalidParam, NumericError, ParseError, SimulationError, UnknownKey
from .integrator import IntegratorConfig, integrate, sample_indices
from .params import MODE_LABELS, ModelKind, SystemParams, initial_state, validate
from .pulses import coupling_snapshot

_PARAM_KEYS = (
    "G0", "delta", "g_fiber", "t1", "t2", "s", "t_off", "t_final",
    "kappa1", "kappa2", "gamma1", "gamma2", "omega_m", "omega_c",
)
_CONFIG_KEYS = _PARAM_KEYS + ("model", "dissipative", "dt", "sample_stride")

_DEFAULT_OUT = {"simulate": "trajectory.csv", "sweep": "sweep.csv", "pulses": "pulses.csv"}


@dataclasses.dataclass
class RunConfig:
    """Validated parameters, integrator settings, model variant, output path."""

    params: SystemParams
    integrator: IntegratorConfig
    kind: RhsKind
    output_path: str = "out.csv"


class _UsageError(Exception):
    """Command line could not be parsed; maps to exit code 1."""


def _number(raw: dict, key: str, default: float) -> float:
    value = raw.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidParam(key, f"{key} must be a number, got {value!r}")
    return float(value)


def parse_config(text: str) -> RunConfig:
    """Parse a JSON config into a validated :class:`RunConfig`.

    Unspecified keys take the reference-scenario defaults; unknown keys are an
    error rather than being ignored.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"malformed JSON config: {err}") from err
    if not isinstance(raw, dict):
        raise ParseError("config must be a JSON object")
    for key in raw:
        if key not in _CONFIG_KEYS:
            raise UnknownKey(key)

    model = raw.get("model", "effective")
    try:
        model_kind = ModelKind(model)
    except ValueError:
        raise InvalidParam("model", f"model must be 'effective' or 'full', got {model!r}")
    dissipative = raw.get("dissipative", False)
    if not isinstance(dissipative, bool):
        raise InvalidParam("dissipative", "dissipative must be a JSON boolean")

    defaults = SystemParams()
    fields = {key: _number(raw, key, getattr(defaults, key)) for key in _PARAM_KEYS}
    params = validate(SystemParams(**fields, model_kind=model_kind))

    stride = raw.get("sample_stride", 10)
    if isinstance(stride, bool) or not isinstance(stride, int):
        raise InvalidParam("sample_stride", "sample_stride must be an integer")
    cfg = IntegratorConfig(dt=_number(raw, "dt", 1e-3), sample_stride=stride)

    return RunConfig(
        params=params,
        integrator=cfg,
        kind=RhsKind.from_flags(model_kind, dissipative),
    )


def serialize_config(cfg: RunConfig) -> str:
    """JSON text that :func:`parse_config` maps back to the same run."""
    payload = {key: getattr(cfg.params, key) for key in _PARAM_KEYS}
    payload["model"] = cfg.params.model_kind.value
    payload["dissipative"] = cfg.kind.dissipative
    payload["dt"] = cfg.integrator.dt
    payload["sample_stride"] = cfg.integrator.sample_stride
    return json.dumps(payload, indent=2)


def _fmt(x: float) -> str:
    # full double precision so CSV consumers recompute observables exactly
    return format(x, ".16e")


def _write_csv(path: str, header: str, rows) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(_fmt(x) for x in row) + "\n")


def _trajectory_header(n_modes: int) -> str:
    labels = MODE_LABELS[:n_modes]
    parts = ["t"]
    parts += [f"{part}_{m}" for m in labels for part in ("re", "im")]
    parts += [f"n_{m}" for m in labels]
    return ",".join(parts)


def _trajectory_rows(traj):
    for t, state in zip(traj.times, traj.states):
        row = [t]
        for z in state:
            row += [z.real, z.imag]
        row += [abs(z) ** 2 for z in state]
        yield row


def run_simulate(cfg: RunConfig, plot_path: str | None = None) -> int:
    """Integrate the unit mechanical-1 seed, write the trajectory CSV, print eta."""
    traj = integrate(cfg.kind, cfg.params, initial_state(cfg.params.model_kind), cfg.integrator)
    _write_csv(cfg.output_path, _trajectory_header(cfg.params.n_modes), _trajectory_rows(traj))
    eta = transfer_efficiency(traj)
    print(f"eta = {eta:.12g}")
    if plot_path:
        plotting.plot_occupations(traj, plot_path)
    return 0


def run_sweep(
    cfg: RunConfig,
    param_name: str,
    lo: float,
    hi: float,
    steps: int,
    plot_path: str | None = None,
) -> int:
    """Sweep one parameter, write the (value, eta) CSV, report the optimum."""
    result = sweep_1d(param_name, lo, hi, steps, cfg.params, cfg.kind, cfg.integrator)
    _write_csv(cfg.output_path, f"{param_name},eta", zip(result.grid, result.eta))
    print(f"best {param_name} = {result.best_value:.12g}, eta = {result.best_eta:.12g}")
    if plot_path:
        plotting.plot_sweep(result, plot_path)
    return 0


def run_pulses(cfg: RunConfig, plot_path: str | None = None) -> int:
    """Write the coupling schedule (t, G1, G2, g, J) on the sampling grid."""
    dt = cfg.integrator.dt
    t_end = cfg.params.t_final if cfg.integrator.t_final is None else cfg.integrator.t_final
    times = sample_indices(round(t_end / dt), cfg.integrator.sample_stride) * dt
    snaps = [coupling_snapshot(float(t), cfg.params) for t in times]
    rows = ([t, s.G1, s.G2, s.g, s.J] for t, s in zip(times, snaps))
    _write_csv(cfg.output_path, "t,G1,G2,g,J", rows)
    if plot_path:
        columns = np.array(snaps).T
        plotting.plot_pulse_profiles(times, *columns, path=plot_path)
    return 0


def run_validate() -> int:
    """Run the built-in oracle suite, one pass/fail line per check."""
    results = selfcheck.run_all_checks()
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"[{status}] {res.name}: {res.detail}")
    return 0 if all(res.passed for res in results) else 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract reserves 2 for
    # numeric errors, so route usage problems through _UsageError instead
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="mechlink",
        description="Coupled-mode simulator for mechanical state transfer over a fiber link.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="JSON config file (defaults reproduce the reference scenario)")
        p.add_argument("--out", help="output CSV path")
        p.add_argument("--plot", help="also render a figure to this path (PNG/PDF)")
        p.add_argument("--model", choices=["effective", "full"], help="override the config's model")
        p.add_argument(
            "--dissipative",
            action="store_true",
            help="integrate with the damping terms even if the config left them off",
        )

    add_common(sub.add_parser("simulate", help="integrate one trajectory and report eta"))

    sweep = sub.add_parser("sweep", help="scan one parameter and report the optimum")
    add_common(sweep)
    sweep.add_argument("--param", required=True, choices=["G0", "delta", "s", "t_off"])
    sweep.add_argument("--min", required=True, type=float, dest="lo")
    sweep.add_argument("--max", required=True, type=float, dest="hi")
    sweep.add_argument("--steps", required=True, type=int)

    add_common(sub.add_parser("pulses", help="tabulate the coupling schedule"))
    sub.add_parser("validate", help="run the built-in oracle checks")
    return parser


def _load_run_config(args) -> RunConfig:
    if args.config is not None:
        with open(args.config, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = "{}"
    cfg = parse_config(text)

    if args.model is not None or args.dissipative:
        model_kind = ModelKind(args.model) if args.model else cfg.params.model_kind
        dissipative = cfg.kind.dissipative or args.dissipative
        cfg.params = validate(dataclasses.replace(cfg.params, model_kind=model_kind))
        cfg.kind = RhsKind.from_flags(model_kind, dissipative)
    cfg.output_path = args.out or _DEFAULT_OUT[args.command]
    return cfg


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "validate":
            return run_validate()
        cfg = _load_run_config(args)
        if args.command == "simulate":
            return run_simulate(cfg, args.plot)
        if args.command == "sweep":
            return run_sweep(cfg, args.param, args.lo, args.hi, args.steps, args.plot)
        return run_pulses(cfg, args.plot)
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 1
    except NumericError as err:
        print(f"numeric error: {err}", file=sys.stderr)
        return 2
    except (SimulationError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
