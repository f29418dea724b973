"""Scenario documents, sweeps, CSV serialization, and minimal SVG plots.

A scenario is a single JSON object describing one simulation run; every
figure-style experiment ships as a checked-in scenario file so results are
reproducible byte for byte.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from . import chaos as chaos_mod
from . import control as control_mod
from . import model
from .analysis import equilibrium
from .errors import CapEduError, DomainError, EmptySeries, ParseError, ValidationError
from .integrator import IntegratorSettings, RawTrajectory, integrate
from .model import EconState, ModelParams
from .trajectory import Trajectory, build_trajectory

__all__ = [
    "Scenario", "ControlSpec", "ChaosSpec", "SweepSpec", "SweepRow",
    "load_scenario", "dump_scenario", "run_scenario", "run_sweep",
    "write_trajectory_csv", "write_sweep_csv", "render_svg",
    "PhasePortrait", "phase_portrait", "write_phase_csv",
]

KINDS = ("basic", "controlled", "chaotic")
SWEEPABLE = ("s_k", "s_r", "delta_k", "delta_r", "alpha", "beta", "p", "c")


@dataclass(frozen=True)
class ControlSpec:
    p: float
    s_r0: float


@dataclass(frozen=True)
class ChaosSpec:
    c: float
    x0: float = 0.5
    y0: float = 0.0
    z0: float = 0.0
    b: float = model.NE9_B_DEFAULT


@dataclass(frozen=True)
class Scenario:
    kind: str
    params: ModelParams
    initial: EconState
    horizon: float
    sample_step: float
    control: ControlSpec | None = None
    chaos: ChaosSpec | None = None
    integrator: IntegratorSettings = IntegratorSettings()
    warnings: tuple[str, ...] = ()


def _number(obj, where: str) -> float:
    if isinstance(obj, bool) or not isinstance(obj, (int, float)):
        raise ParseError(f"{where} must be a number, got {obj!r}")
    return float(obj)


def _block(doc: dict, name: str, required: tuple[str, ...],
           optional: dict[str, float]) -> dict[str, float]:
    raw = doc[name]
    if not isinstance(raw, dict):
        raise ParseError(f"{name} must be an object")
    unknown = set(raw) - set(required) - set(optional)
    if unknown:
        raise ParseError(f"unknown key(s) in {name}: {sorted(unknown)}")
    out = {}
    for key in required:
        if key not in raw:
            raise ParseError(f"missing required field {name}.{key}")
        out[key] = _number(raw[key], f"{name}.{key}")
    for key, default in optional.items():
        out[key] = _number(raw[key], f"{name}.{key}") if key in raw else default
    return out


def load_scenario(text: str) -> Scenario:
    """Parse and validate a scenario document (JSON)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("scenario document must be a JSON object")

    known = {"kind", "params", "initial", "control", "chaos",
             "horizon", "sample_step", "integrator"}
    unknown = set(doc) - known
    if unknown:
        raise ParseError(f"unknown top-level key(s): {sorted(unknown)}")
    for key in ("kind", "params", "initial", "horizon", "sample_step"):
        if key not in doc:
            raise ParseError(f"missing required field {key}")

    kind = doc["kind"]
    if kind not in KINDS:
        raise ValidationError("kind", f"must be one of {KINDS}, got {kind!r}")
    if kind == "controlled" and "control" not in doc:
        raise ParseError("controlled scenario requires a control block")
    if kind == "chaotic" and "chaos" not in doc:
        raise ParseError("chaotic scenario requires a chaos block")
    if kind != "controlled" and "control" in doc:
        raise ParseError(f"control block not allowed for kind={kind}")
    if kind != "chaotic" and "chaos" in doc:
        raise ParseError(f"chaos block not allowed for kind={kind}")

    p_raw = _block(doc, "params",
                   ("s_k", "s_r", "delta_k", "delta_r", "alpha", "beta"),
                   {"s_r_floor": 0.0})
    params = ModelParams(**p_raw)  # raises ValidationError on bad ranges

    init = _block(doc, "initial", ("K", "E"), {})
    if not init["K"] > 0:
        raise ValidationError("initial.K", "must be positive")
    if not init["E"] > 0:
        raise ValidationError("initial.E", "must be positive")
    initial = EconState(K=init["K"], E=init["E"])

    horizon = _number(doc["horizon"], "horizon")
    if not horizon > 0:
        raise ValidationError("horizon", "must be positive")
    sample_step = _number(doc["sample_step"], "sample_step")
    if not sample_step > 0:
        raise ValidationError("sample_step", "must be positive")

    control = None
    if kind == "controlled":
        blk = _block(doc, "control", ("p", "s_r0"), {})
        if not 0 < blk["p"] < 1:
            raise ValidationError("control.p", "must lie in (0, 1)")
        if not blk["p"] < 1 - params.s_k:
            raise ValidationError("control.p", "must be below 1 - s_k")
        if not blk["s_r0"] > 0:
            raise ValidationError("control.s_r0", "must be positive")
        control = ControlSpec(**blk)

    chaos = None
    if kind == "chaotic":
        blk = _block(doc, "chaos", ("c",),
                     {"x0": 0.5, "y0": 0.0, "z0": 0.0,
                      "b": model.NE9_B_DEFAULT})
        chaos = ChaosSpec(**blk)

    integ = IntegratorSettings()
    if "integrator" in doc:
        blk = _block(doc, "integrator", (),
                     {"rel_tol": integ.rel_tol, "abs_tol": integ.abs_tol})
        try:
            integ = IntegratorSettings(rel_tol=blk["rel_tol"],
                                       abs_tol=blk["abs_tol"])
        except ValueError as exc:
            raise ValidationError("integrator", str(exc)) from exc

    warnings = ()
    if params.alpha + params.beta >= 1:
        # simulation is legal; only equilibrium analysis will refuse
        warnings = ("alpha + beta >= 1: no stable positive equilibrium",)

    return Scenario(kind=kind, params=params, initial=initial,
                    horizon=horizon, sample_step=sample_step,
                    control=control, chaos=chaos, integrator=integ,
                    warnings=warnings)


def dump_scenario(scenario: Scenario) -> str:
    """Serialize a Scenario so that load_scenario returns an identical value."""
    p = scenario.params
    doc: dict = {
        "kind": scenario.kind,
        "params": {
            "s_k": p.s_k, "s_r": p.s_r,
            "delta_k": p.delta_k, "delta_r": p.delta_r,
            "alpha": p.alpha, "beta": p.beta,
            "s_r_floor": p.s_r_floor,
        },
        "initial": {"K": scenario.initial.K, "E": scenario.initial.E},
        "horizon": scenario.horizon,
        "sample_step": scenario.sample_step,
        "integrator": {
            "rel_tol": scenario.integrator.rel_tol,
            "abs_tol": scenario.integrator.abs_tol,
        },
    }
    if scenario.control is not None:
        doc["control"] = {"p": scenario.control.p, "s_r0": scenario.control.s_r0}
    if scenario.chaos is not None:
        ch = scenario.chaos
        doc["chaos"] = {"c": ch.c, "x0": ch.x0, "y0": ch.y0, "z0": ch.z0,
                        "b": ch.b}
    return json.dumps(doc, indent=2) + "\n"


def run_scenario(scenario: Scenario) -> Trajectory:
    """Integrate the scenario's system and attach the derived series."""
    s = scenario
    if s.kind == "basic":
        y0 = np.array([s.initial.K, s.initial.E])
        raw = integrate(model.basic_rhs(s.params), y0, 0.0, s.horizon,
                        s.integrator, s.sample_step)
        return build_trajectory("basic", s.params, raw)
    if s.kind == "controlled":
        return control_mod.simulate_controlled(
            s.params, s.control.p, s.initial, s.control.s_r0,
            s.horizon, s.integrator, s.sample_step)
    ch = s.chaos
    return chaos_mod.simulate_modulated(
        s.params, ch.c, s.initial, (ch.x0, ch.y0, ch.z0), ch.b,
        s.horizon, s.integrator, s.sample_step)


@dataclass(frozen=True)
class SweepSpec:
    base: Scenario
    parameter: str              # one of SWEEPABLE
    values: tuple[float, ...]
    report_time: float

    def __post_init__(self):
        if self.parameter not in SWEEPABLE:
            raise ValidationError("parameter",
                                  f"must be one of {SWEEPABLE}")
        if self.parameter == "p" and self.base.kind != "controlled":
            raise ValidationError("parameter",
                                  "p only applies to controlled scenarios")
        if self.parameter == "c" and self.base.kind != "chaotic":
            raise ValidationError("parameter",
                                  "c only applies to chaotic scenarios")
        if not self.values:
            raise ValidationError("values", "must be non-empty")
        if not 0 <= self.report_time <= self.base.horizon:
            raise ValidationError("report_time",
                                  "must lie within [0, horizon]")


@dataclass(frozen=True)
class SweepRow:
    value: float
    Y: float | None
    C: float | None
    error: str | None = None


def _apply_parameter(base: Scenario, name: str, value: float) -> Scenario:
    if name == "p":
        return replace(base, control=replace(base.control, p=value))
    if name == "c":
        return replace(base, chaos=replace(base.chaos, c=value))
    return replace(base, params=replace(base.params, **{name: value}))


def _sweep_row(base: Scenario, name: str, value: float,
               report_time: float) -> SweepRow:
    try:
        scenario = _apply_parameter(base, name, value)
        traj = run_scenario(scenario)
        row = traj.at(report_time)
        return SweepRow(value=value, Y=row["Y"], C=row["C"])
    except CapEduError as exc:
        return SweepRow(value=value, Y=None, C=None, error=str(exc))


def run_sweep(spec: SweepSpec, jobs: int = 1) -> list[SweepRow]:
    """One independent run per value; per-row failures do not stop the sweep."""
    args = [(spec.base, spec.parameter, v, spec.report_time)
            for v in spec.values]
    if jobs <= 1 or len(args) <= 1:
        return [_sweep_row(*a) for a in args]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda a: _sweep_row(*a), args))


def _fmt(value: float) -> str:
    # shortest decimal that round-trips to the same double
    return repr(float(value))


def write_trajectory_csv(traj: Trajectory) -> str:
    """Fixed column order per kind; full double precision; '\\n' separators."""
    cols = traj.columns
    lines = ["t," + ",".join(cols)]
    for i, t in enumerate(traj.times):
        lines.append(",".join([_fmt(t)] + [_fmt(traj.data[c][i]) for c in cols]))
    return "\n".join(lines) + "\n"


def write_sweep_csv(rows: list[SweepRow]) -> str:
    lines = ["value,Y,C,error"]
    for r in rows:
        if r.error is None:
            lines.append(f"{_fmt(r.value)},{_fmt(r.Y)},{_fmt(r.C)},")
        else:
            msg = r.error.replace("\n", " ").replace(",", ";")
            lines.append(f"{_fmt(r.value)},,,{msg}")
    return "\n".join(lines) + "\n"


# --- minimal SVG line charts -------------------------------------------------

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
_W, _H = 800, 500
_ML, _MR, _MT, _MB = 70, 20, 40, 50


def _ticks(lo: float, hi: float, n: int = 5) -> np.ndarray:
    if hi == lo:
        lo, hi = lo - 0.5, hi + 0.5
    return np.linspace(lo, hi, n)


def render_svg(series, title: str = "") -> str:
    """Standalone SVG with axes, polylines and a legend; deterministic text."""
    if not series:
        raise EmptySeries("no series to plot")
    cleaned = []
    for label, times, values in series:
        t = np.asarray(times, dtype=float)
        v = np.asarray(values, dtype=float)
        if t.size == 0 or t.size != v.size:
            raise EmptySeries(f"series {label!r} is empty or ragged")
        cleaned.append((str(label), t, v))

    x_lo = min(float(t.min()) for _, t, _ in cleaned)
    x_hi = max(float(t.max()) for _, t, _ in cleaned)
    y_lo = min(float(v.min()) for _, _, v in cleaned)
    y_hi = max(float(v.max()) for _, _, v in cleaned)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 0.5, x_hi + 0.5
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5

    def sx(x):
        return _ML + (x - x_lo) / (x_hi - x_lo) * (_W - _ML - _MR)

    def sy(y):
        return _H - _MB - (y - y_lo) / (y_hi - y_lo) * (_H - _MT - _MB)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
    ]
    if title:
        out.append(
            f'<text x="{_W / 2:.2f}" y="24" text-anchor="middle" '
            f'font-family="sans-serif" font-size="16">{title}</text>')
    # axes
    out.append(
        f'<line x1="{_ML}" y1="{_H - _MB}" x2="{_W - _MR}" y2="{_H - _MB}" '
        'stroke="black"/>')
    out.append(
        f'<line x1="{_ML}" y1="{_MT}" x2="{_ML}" y2="{_H - _MB}" '
        'stroke="black"/>')
    for x in _ticks(x_lo, x_hi):
        px = sx(x)
        out.append(f'<line x1="{px:.2f}" y1="{_H - _MB}" x2="{px:.2f}" '
                   f'y2="{_H - _MB + 5}" stroke="black"/>')
        out.append(f'<text x="{px:.2f}" y="{_H - _MB + 20}" '
                   'text-anchor="middle" font-family="sans-serif" '
                   f'font-size="12">{x:.4g}</text>')
    for y in _ticks(y_lo, y_hi):
        py = sy(y)
        out.append(f'<line x1="{_ML - 5}" y1="{py:.2f}" x2="{_ML}" '
                   f'y2="{py:.2f}" stroke="black"/>')
        out.append(f'<text x="{_ML - 8}" y="{py + 4:.2f}" text-anchor="end" '
                   f'font-family="sans-serif" font-size="12">{y:.4g}</text>')
    # polylines
    for i, (label, t, v) in enumerate(cleaned):
        color = _PALETTE[i % len(_PALETTE)]
        pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(t, v))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
                   f'points="{pts}"/>')
    # legend
    for i, (label, _, _) in enumerate(cleaned):
        color = _PALETTE[i % len(_PALETTE)]
        ly = _MT + 8 + 18 * i
        out.append(f'<line x1="{_W - _MR - 150}" y1="{ly}" '
                   f'x2="{_W - _MR - 120}" y2="{ly}" stroke="{color}" '
                   'stroke-width="2"/>')
        out.append(f'<text x="{_W - _MR - 112}" y="{ly + 4}" '
                   f'font-family="sans-serif" font-size="12">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# --- phase portraits ---------------------------------------------------------

@dataclass(frozen=True)
class PhasePortrait:
    field_samples: np.ndarray            # rows (K, E, dK, dE)
    trajectories: tuple[RawTrajectory, ...]
    equilibrium: tuple[float, float] | None


def phase_portrait(params: ModelParams, k_range, e_range, grid=(8, 8),
                   horizon: float = 300.0,
                   settings: IntegratorSettings | None = None,
                   sample_step: float = 1.0) -> PhasePortrait:
    """Vector-field samples on a grid plus one trajectory seeded per node."""
    k_lo, k_hi = map(float, k_range)
    e_lo, e_hi = map(float, e_range)
    if not (0 < k_lo < k_hi and 0 < e_lo < e_hi):
        raise DomainError("ranges must be positive and increasing")
    nk, ne = grid
    if nk < 2 or ne < 2:
        raise ValueError("grid must be at least 2x2")

    rhs = model.basic_rhs(params)
    ks = np.linspace(k_lo, k_hi, nk)
    es = np.linspace(e_lo, e_hi, ne)
    samples = []
    trajectories = []
    for K in ks:
        for E in es:
            dK, dE = rhs(np.array([K, E]))
            samples.append((K, E, dK, dE))
            trajectories.append(
                integrate(rhs, np.array([K, E]), 0.0, horizon,
                          settings, sample_step))
    eq = None
    if params.alpha + params.beta < 1:
        eq = equilibrium(params)
    return PhasePortrait(field_samples=np.array(samples),
                         trajectories=tuple(trajectories),
                         equilibrium=eq)


def write_phase_csv(portrait: PhasePortrait) -> str:
    """Field samples and orbit polylines in one flat table."""
    lines = ["record,index,t,K,E,dK,dE"]
    for i, (K, E, dK, dE) in enumerate(portrait.field_samples):
        lines.append(f"field,{i},,{_fmt(K)},{_fmt(E)},{_fmt(dK)},{_fmt(dE)}")
    for j, traj in enumerate(portrait.trajectories):
        for t, (K, E) in zip(traj.times, traj.states):
            lines.append(f"orbit,{j},{_fmt(t)},{_fmt(K)},{_fmt(E)},,")
    return "\n".join(lines) + "\n"
