"""Command-line front end: one subcommand per reproducible artifact."""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

import numpy as np

from . import chaos as chaos_mod
from . import control as control_mod
from . import scenario_io
from .analysis import controlled_equilibrium, equilibrium_report
from .errors import (
    CapEduError,
    DomainError,
    EmptySeries,
    InvalidTarget,
    NonFiniteState,
    NoSignChange,
    ParseError,
    StepLimitExceeded,
    StructurallyUnstable,
    ValidationError,
)
from .integrator import IntegratorSettings

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_NUMERIC = 3

_VALIDATION_ERRORS = (ParseError, ValidationError, InvalidTarget)
_NUMERIC_ERRORS = (DomainError, StepLimitExceeded, NonFiniteState,
                   StructurallyUnstable, NoSignChange, EmptySeries)


def _write_output(text: str, out: str | None):
    """Atomic write: temp file in the target directory, then rename."""
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".capedu-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load(path: str) -> scenario_io.Scenario:
    with open(path) as fh:
        text = fh.read()
    scenario = scenario_io.load_scenario(text)
    for warning in scenario.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return scenario


def _parse_range(text: str) -> tuple[float, float]:
    lo, _, hi = text.partition(":")
    return float(lo), float(hi)


def _parse_grid(text: str) -> tuple[int, int]:
    a, _, b = text.partition("x")
    return int(a), int(b)


def _default_jobs() -> int:
    env = os.environ.get("CAPEDU_JOBS")
    if env is not None:
        return int(env)
    return os.cpu_count() or 1


def _fmt_eig(e: complex) -> str:
    if abs(e.imag) < 1e-12:
        return f"{e.real:.7g}"
    return f"{e.real:.7g}{e.imag:+.7g}i"


def _cmd_simulate(args) -> int:
    traj = scenario_io.run_scenario(_load(args.scenario))
    if traj.constraint_violation:
        print("warning: s_r left its admissible interval during the run",
              file=sys.stderr)
    _write_output(scenario_io.write_trajectory_csv(traj), args.out)
    return EXIT_OK


def _cmd_equilibrium(args) -> int:
    scenario = _load(args.scenario)
    if scenario.kind == "controlled":
        report = controlled_equilibrium(scenario.params, scenario.control.p)
    else:
        report = equilibrium_report(scenario.params)
    lines = [
        f"K0={report.K0:.7g}",
        f"E0={report.E0:.7g}",
        f"Y0={report.Y0:.7g}",
        "eigenvalues=" + ",".join(_fmt_eig(e) for e in report.eigenvalues),
        f"class={report.classification.value}",
    ]
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    scenario = _load(args.scenario)
    values = tuple(float(v) for v in args.values.split(","))
    spec = scenario_io.SweepSpec(base=scenario, parameter=args.param,
                                 values=values, report_time=args.at)
    rows = scenario_io.run_sweep(spec, jobs=args.jobs)
    _write_output(scenario_io.write_sweep_csv(rows), args.out)
    return EXIT_OK


def _cmd_tipping(args) -> int:
    scenario = _load(args.scenario)
    s_r0 = args.s_r0
    if s_r0 is None:
        s_r0 = scenario.control.s_r0 if scenario.control is not None else 0.1
    result = control_mod.find_tipping(
        scenario.params, scenario.initial, s_r0,
        args.horizon if args.horizon is not None else scenario.horizon,
        args.p_min, args.p_max, args.tol, scenario.integrator)
    lines = [
        f"p_star={result.p_star:.6g}",
        f"bracket={result.bracket[0]:.6g},{result.bracket[1]:.6g}",
        f"growth_at_bracket={result.growth_at_bracket[0]:.6g},"
        f"{result.growth_at_bracket[1]:.6g}",
        f"horizon={result.horizon_used:.6g}",
    ]
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_chaos(args) -> int:
    settings = IntegratorSettings(rel_tol=args.rel_tol, abs_tol=args.abs_tol)
    raw = chaos_mod.simulate_ne9(b=args.b, x0=args.x0, y0=args.y0, z0=args.z0,
                                 horizon=args.horizon, settings=settings,
                                 sample_step=args.sample_step)
    series = chaos_mod.running_average(raw.times, raw.states[:, 0])
    _write_output(f"A({args.horizon:g})={series.values[-1]:.6g}\n", args.out)
    return EXIT_OK


def _cmd_phase(args) -> int:
    scenario = _load(args.scenario)
    portrait = scenario_io.phase_portrait(
        scenario.params, _parse_range(args.k_range),
        _parse_range(args.e_range), _parse_grid(args.grid),
        args.horizon, scenario.integrator)
    _write_output(scenario_io.write_phase_csv(portrait), args.out)
    return EXIT_OK


def _cmd_plot(args) -> int:
    with open(args.csv) as fh:
        lines = [ln for ln in fh.read().splitlines() if ln]
    if not lines:
        raise EmptySeries("empty CSV")
    header = lines[0].split(",")
    table = np.array([[float(v) if v else np.nan for v in ln.split(",")]
                      for ln in lines[1:]])
    x = table[:, 0]
    wanted = args.columns.split(",") if args.columns else header[1:]
    series = []
    for name in wanted:
        if name not in header:
            raise ValidationError("columns", f"no column {name!r} in CSV")
        series.append((name, x, table[:, header.index(name)]))
    svg = scenario_io.render_svg(series, title=args.title)
    _write_output(svg, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="capedu",
        description="Simulate and analyse the capital-education growth model.")
    sub = parser.add_subparsers(dest="command", required=True)

    def scenario_flag(p):
        p.add_argument("--scenario", required=True,
                       help="path to a scenario JSON document")

    def out_flag(p):
        p.add_argument("--out", default=None,
                       help="output file (default: stdout); written atomically")

    p = sub.add_parser("simulate", help="run one scenario, emit trajectory CSV")
    scenario_flag(p)
    out_flag(p)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("equilibrium",
                       help="closed-form equilibrium, eigenvalues, stability")
    scenario_flag(p)
    out_flag(p)
    p.set_defaults(func=_cmd_equilibrium)

    p = sub.add_parser("sweep", help="rerun a scenario over parameter values")
    scenario_flag(p)
    p.add_argument("--param", required=True,
                   help="parameter to vary (s_k, s_r, delta_k, delta_r, "
                        "alpha, beta, p, c)")
    p.add_argument("--values", required=True,
                   help="comma-separated parameter values")
    p.add_argument("--at", type=float, required=True,
                   help="report time for Y and C")
    p.add_argument("--jobs", type=int, default=_default_jobs(),
                   help="worker threads (default: CAPEDU_JOBS or CPU count)")
    out_flag(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("tipping",
                       help="bisect for the consumption target where "
                            "horizon output returns to its initial value")
    scenario_flag(p)
    p.add_argument("--p-min", type=float, required=True)
    p.add_argument("--p-max", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-3,
                   help="bracket width tolerance in p (default 1e-3)")
    p.add_argument("--horizon", type=float, default=None,
                   help="override the scenario horizon")
    p.add_argument("--s-r0", dest="s_r0", type=float, default=None,
                   help="initial education investment fraction "
                        "(default: scenario control block, else 0.1)")
    out_flag(p)
    p.set_defaults(func=_cmd_tipping)

    p = sub.add_parser("chaos",
                       help="run the chaotic driver, print its running average")
    p.add_argument("--horizon", type=float, default=100.0)
    p.add_argument("--b", type=float, default=0.55,
                   help="dissipation constant of the driver")
    p.add_argument("--x0", type=float, default=0.5)
    p.add_argument("--y0", type=float, default=0.0)
    p.add_argument("--z0", type=float, default=0.0)
    p.add_argument("--sample-step", type=float, default=0.01)
    p.add_argument("--rel-tol", type=float, default=1e-10)
    p.add_argument("--abs-tol", type=float, default=1e-12)
    out_flag(p)
    p.set_defaults(func=_cmd_chaos)

    p = sub.add_parser("phase",
                       help="vector-field samples plus orbits on a grid")
    scenario_flag(p)
    p.add_argument("--k-range", required=True, help="LO:HI for capital")
    p.add_argument("--e-range", required=True, help="LO:HI for education")
    p.add_argument("--grid", default="8x8", help="NKxNE node counts")
    p.add_argument("--horizon", type=float, default=300.0)
    out_flag(p)
    p.set_defaults(func=_cmd_phase)

    p = sub.add_parser("plot", help="render a trajectory CSV as an SVG chart")
    p.add_argument("--csv", required=True, help="trajectory CSV file")
    p.add_argument("--columns", default="Y",
                   help="comma-separated columns to plot (default Y)")
    p.add_argument("--title", default="")
    out_flag(p)
    p.set_defaults(func=_cmd_plot)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors; map the latter to 1
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except _VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except _NUMERIC_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except CapEduError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
