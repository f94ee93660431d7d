"""Command-line front end.

Examples::

    conformal-casimir rindler-force --a 1 --A 1 --B 2 --method both
    conformal-casimir desitter-force --H 1 --eta 1 --z1 0 --z2 1 --species maxwell --json
    conformal-casimir sweep --param A --start 10 --stop 1e4 --count 4 --scale log \\
        rindler-force --L 1 --method pressure --csv
    conformal-casimir verify --tol 1e-15

Exit status: 0 success, 1 invalid input, 2 a verification check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__, anomaly, cosmo, verify
from . import rindler_cavity as rc
from .coords import CavityConfig
from .errors import BoundaryConditionError, DomainError

CONVENTIONS = (
    "natural units hbar = c = 1; signature (+,-) and (+,-,-,-); curvature packs use "
    "R^a_bcd = d_c Gamma^a_bd - ... (de Sitter R = -12 H^2); anomaly formulas use the "
    "opposite Riemann sign"
)
BANNER = f"# conformal-casimir {__version__}: natural units (hbar = c = 1); see --help for conventions"

EXIT_OK, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2


class ValidationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(f"{self.prog}: {message}")


# -- records -----------------------------------------------------------------


@dataclass
class Output:
    name: str
    value: float
    method: str


@dataclass
class RunRecord:
    command: str
    inputs: dict
    outputs: list[Output] = field(default_factory=list)
    checks: list | None = None
    version: str = __version__
    conventions: str = CONVENTIONS

    def add(self, name: str, value: float, method: str) -> None:
        self.outputs.append(Output(name, float(value), method))

    def columns(self) -> dict:
        return {f"{o.name}[{o.method}]": o.value for o in self.outputs}

    def to_dict(self) -> dict:
        d = {
            "command": self.command,
            "tool_version": self.version,
            "conventions": self.conventions,
            "inputs": self.inputs,
            "outputs": [{"name": o.name, "method": o.method, "value": o.value} for o in self.outputs],
        }
        if self.checks is not None:
            d["checks"] = [c.as_dict() for c in self.checks]
            d["passed"] = all(c.passed for c in self.checks)
        return d


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.15g}"
    return str(v)


# -- commands ----------------------------------------------------------------


def _cavity(ns) -> CavityConfig:
    if ns.B is not None and ns.L is not None:
        raise ValidationError("give either --B or --L, not both")
    if ns.L is not None:
        if not ns.L > 0:
            raise DomainError(f"cavity length must be positive, got L={ns.L}")
        return CavityConfig.from_length(ns.a, ns.A, ns.L)
    return CavityConfig(ns.a, ns.A, 2.0 if ns.B is None else ns.B)


def cmd_rindler_force(ns) -> RunRecord:
    cfg = _cavity(ns)
    plate = ns.plate
    rec = RunRecord(
        "rindler-force",
        {"a": cfg.a, "A": cfg.A, "B": cfg.B, "tau": ns.tau, "method": ns.method,
         "outside": ns.outside, "plate": plate, "pressure_path": ns.pressure_path},
    )
    if ns.method in ("energy", "both"):
        f1 = rc.force_energy_method(cfg, plate)
        rec.add("force_energy", f1, "energy_derivative")
    if ns.method in ("pressure", "both"):
        pf = rc.pressure_force(cfg, ns.tau, ns.outside, plate, ns.pressure_path)
        rec.add("force_pressure", pf.total, ns.pressure_path)
        rec.add("pressure_cavity", pf.cavity, ns.pressure_path)
        rec.add("pressure_outside_correction", pf.outside_correction, f"outside_{pf.outside.value}")
    if ns.method == "both":
        f2_rest = rc.force_pressure_method(cfg, 0.0, plate=plate)
        rec.add("ratio_pressure_over_energy", f2_rest / f1, "tau0_closed_form")
        rec.add("expected_ratio", 1.0 / (cfg.a * cfg.position(plate)), "inverse_lapse")
        fixed = rc.local_time_fix(f1, cfg, plate)
        rec.add("local_time_fix", fixed, "energy_over_lapse")
        rec.add("local_time_fix_residual", abs(fixed - f2_rest) / abs(f2_rest), "relative")
    return rec


def cmd_rindler_energy(ns) -> RunRecord:
    cfg = _cavity(ns)
    rec = RunRecord("rindler-energy", {"a": cfg.a, "A": cfg.A, "B": cfg.B, "method": ns.method})
    rec.add("omega_1", rc.mode_frequency(cfg, 1), "mode_phase")
    methods = ("zeta", "damped", "euler_maclaurin") if ns.method == "all" else (ns.method,)
    for m in methods:
        rec.add("casimir_energy", rc.casimir_energy(cfg, m), m)
    return rec


def cmd_desitter_force(ns) -> RunRecord:
    cfg = cosmo.PlatePairConfig(ns.z1, ns.z2, ns.species, ns.H)
    if cfg.H == 0 and not ns.flat_limit:
        raise ValidationError("H = 0 has no de Sitter patch; pass --flat-limit for the flat limit")
    res = cosmo.desitter_force(cfg, ns.eta, flat_limit=ns.flat_limit)
    rec = RunRecord(
        "desitter-force",
        {"H": cfg.H, "eta": None if ns.flat_limit else ns.eta, "z1": cfg.z1, "z2": cfg.z2,
         "species": cfg.species.name, "flat_limit": ns.flat_limit},
    )
    rec.add("minkowski_pressure", res.minkowski_pressure, "flat_casimir")
    rec.add("conformal_factor", res.conformal_factor, "flat_limit" if ns.flat_limit else "H2_eta2")
    rec.add("flat_term", res.flat_term, "conformal_scaling")
    rec.add("anomaly_term", res.anomaly_term, "trace_anomaly")
    rec.add("total", res.total, "sum")
    return rec


def _scale_factor_jet(ns) -> cosmo.ScaleFactorJet:
    if ns.family == "jet":
        if ns.jet is None:
            raise ValidationError("--family jet needs --jet a0,a1,a2,a3,a4")
        try:
            vals = [float(v) for v in ns.jet.split(",")]
        except ValueError:
            raise ValidationError(f"cannot parse --jet {ns.jet!r}") from None
        if len(vals) != 5:
            raise ValidationError("--jet needs exactly five comma-separated numbers")
        return cosmo.ScaleFactorJet(ns.eta, *vals)
    if ns.family == "de_sitter":
        if ns.eta == 0:
            raise DomainError("eta = 0 is conformal infinity of the de Sitter patch")
        family = cosmo.de_sitter(ns.H)
    elif ns.family == "power_law":
        family = cosmo.power_law(ns.C, ns.p)
    else:
        family = cosmo.tanh_transition(ns.a_late, ns.width, ns.center)
    return cosmo.jet_from_family(family, ns.eta)


def _family_inputs(ns) -> dict:
    keys = {
        "de_sitter": ("H",),
        "power_law": ("C", "p"),
        "tanh": ("a_late", "width", "center"),
        "jet": ("jet",),
    }[ns.family]
    return {"family": ns.family, "eta": ns.eta, **{k: getattr(ns, k) for k in keys}}


def _pack_values(pack) -> dict:
    return {
        "R": pack.R,
        "R_etaeta": pack.R_diag[0],
        "R_ii": pack.R_diag[1],
        "H1_etaeta": pack.H1_diag[0],
        "H1_ii": pack.H1_diag[1],
        "H3_etaeta": pack.H3_diag[0],
        "H3_ii": pack.H3_diag[1],
        "boxR": pack.boxR,
        "weyl_sq": pack.weyl_sq,
    }


def cmd_flrw_curvature(ns) -> RunRecord:
    jet = _scale_factor_jet(ns)
    rec = RunRecord("flrw-curvature", {**_family_inputs(ns), "path": ns.path})
    packs = {}
    if ns.path in ("closed_form", "both"):
        packs["closed_form"] = cosmo.flrw_curvature(jet)
    if ns.path in ("generic", "both"):
        packs["generic"] = cosmo.flrw_curvature_generic(jet)
    for tag, pack in packs.items():
        for name, v in _pack_values(pack).items():
            rec.add(name, v, tag)
    if ns.path == "both":
        rec.add("two_path_discrepancy", cosmo.pack_discrepancy(packs["closed_form"], packs["generic"]), "relative")
    if ns.printed_h1:
        h_eta, h_ii = cosmo.printed_h1(jet)
        rec.add("H1_etaeta", h_eta, "printed_display")
        rec.add("H1_ii", h_ii, "printed_display")
    return rec


def cmd_anomaly_trace(ns) -> RunRecord:
    if ns.dim == 2:
        if ns.R is None:
            raise ValidationError("--dim 2 needs --R")
        rec = RunRecord("anomaly-trace", {"dim": 2, "R": ns.R})
        rec.add("trace", anomaly.anomaly_trace_2d(ns.R), "anomaly_2d")
        return rec
    jet = _scale_factor_jet(ns)
    species = anomaly.get_species(ns.species)
    pack = cosmo.flrw_curvature_generic(jet)
    rec = RunRecord("anomaly-trace", {"dim": 4, "species": species.name, **_family_inputs(ns)})
    rec.add("trace", anomaly.anomaly_trace_4d(species, pack), "anomaly_4d")
    geo = anomaly.inhomogeneous_term_4d(pack, species)
    rec.add("trace", geo.trace(pack.g_diag), "transformation_law")
    return rec


def cmd_verify(ns) -> RunRecord:
    checks = verify.run_checks(ns.tol)
    rec = RunRecord("verify", {"tol": ns.tol})
    rec.checks = checks
    for c in checks:
        rec.add(c.name, c.error, "check_error")
    return rec


COMMANDS = {
    "rindler-force": cmd_rindler_force,
    "rindler-energy": cmd_rindler_energy,
    "desitter-force": cmd_desitter_force,
    "flrw-curvature": cmd_flrw_curvature,
    "anomaly-trace": cmd_anomaly_trace,
    "verify": cmd_verify,
}

_FAMILY_REALS = ("eta", "H", "C", "p", "a_late", "width", "center")
SWEEPABLE = {
    "rindler-force": ("a", "A", "B", "L", "tau"),
    "rindler-energy": ("a", "A", "B", "L"),
    "desitter-force": ("H", "eta", "z1", "z2"),
    "flrw-curvature": _FAMILY_REALS,
    "anomaly-trace": ("R",) + _FAMILY_REALS,
}


# -- sweep -------------------------------------------------------------------


@dataclass(frozen=True)
class SweepSpec:
    param: str
    start: float
    stop: float
    count: int
    scale: str = "linear"

    def __post_init__(self):
        if self.count < 2:
            raise ValidationError(f"sweep needs count >= 2, got {self.count}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)) or not self.start < self.stop:
            raise ValidationError(f"sweep needs start < stop, got {self.start} and {self.stop}")
        if self.scale not in ("linear", "log"):
            raise ValidationError(f"unknown scale {self.scale!r}")
        if self.scale == "log" and not self.start > 0:
            raise ValidationError("log-scale sweeps need start > 0")

    def grid(self) -> list[float]:
        if self.scale == "log":
            pts = np.geomspace(self.start, self.stop, self.count)
        else:
            pts = np.linspace(self.start, self.stop, self.count)
        pts[0], pts[-1] = self.start, self.stop
        return [float(v) for v in pts]


def _run_point(command: str, ns) -> RunRecord:
    return COMMANDS[command](ns)


def run_sweep(spec: SweepSpec, command: str, namespaces: list, jobs: int = 1) -> list[RunRecord]:
    """Evaluate one record per grid point; the result order is the grid order."""
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_point, [command] * len(namespaces), namespaces))
    return [_run_point(command, ns) for ns in namespaces]


# -- parser ------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("output")
    fmt = g.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit JSON")
    fmt.add_argument("--csv", action="store_true", help="emit CSV")
    g.add_argument("--quiet", action="store_true", help="suppress the units banner on stderr")
    g.add_argument("--config", metavar="PATH", help="key = value file mirroring the flags; flags win")
    g.add_argument("-o", "--output", metavar="PATH", help="write to a file instead of stdout")


def _add_cavity(p) -> None:
    p.add_argument("--a", type=float, default=1.0, help="Rindler chart parameter (default 1)")
    p.add_argument("--A", type=float, default=1.0, help="left mirror position chi_A (default 1)")
    p.add_argument("--B", type=float, default=None, help="right mirror position chi_B (default 2)")
    p.add_argument("--L", type=float, default=None, help="cavity length B - A, alternative to --B")


def _add_family(p, default_family="de_sitter") -> None:
    p.add_argument("--family", choices=("de_sitter", "power_law", "tanh", "jet"), default=default_family)
    p.add_argument("--eta", type=float, default=-1.0, help="conformal time (default -1)")
    p.add_argument("--H", type=float, default=1.0, help="de Sitter Hubble rate, a = 1/(H|eta|)")
    p.add_argument("--C", type=float, default=1.0, help="power law a = C eta^p")
    p.add_argument("--p", type=float, default=2.0, help="power-law exponent")
    p.add_argument("--a-late", dest="a_late", type=float, default=2.0, help="tanh family late-time a")
    p.add_argument("--width", type=float, default=1.0, help="tanh family width")
    p.add_argument("--center", type=float, default=0.0, help="tanh family center")
    p.add_argument("--jet", default=None, help="raw jet a0,a1,a2,a3,a4 for --family jet")


def build_parser() -> tuple[argparse.ArgumentParser, dict]:
    parser = _Parser(
        prog="conformal-casimir",
        description="Casimir forces and vacuum stress tensors in Rindler and conformally flat spacetimes.",
        epilog=f"Conventions: {CONVENTIONS}. De Sitter flat limits renormalize the "
        "conformal factor to 1 at the evaluation time.",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    subs = {}

    def add(name, help_):
        p = sub.add_parser(name, help=help_, description=help_, allow_abbrev=False)
        _add_common(p)
        subs[name] = p
        return p

    p = add("rindler-force", "Casimir force on a mirror of the accelerated cavity")
    _add_cavity(p)
    p.add_argument("--tau", type=float, default=0.0, help="Rindler time of the pressure evaluation")
    p.add_argument("--method", choices=("energy", "pressure", "both"), default="both")
    p.add_argument("--outside", choices=("rindler", "minkowski"), default="rindler",
                   help="vacuum state outside the cavity")
    p.add_argument("--plate", choices=("A", "B"), default="B")
    p.add_argument("--pressure-path", dest="pressure_path",
                   choices=("closed_form", "damped", "conformal"), default="closed_form")

    p = add("rindler-energy", "regularized Casimir energy of the accelerated cavity")
    _add_cavity(p)
    p.add_argument("--method", choices=("zeta", "damped", "euler_maclaurin", "all"), default="all")

    p = add("desitter-force", "Casimir pressure between comoving plates in de Sitter")
    p.add_argument("--H", type=float, default=1.0, help="Hubble rate (H = 0 needs --flat-limit)")
    p.add_argument("--eta", type=float, default=1.0, help="conformal time; a = 1/(H|eta|)")
    p.add_argument("--z1", type=float, default=0.0)
    p.add_argument("--z2", type=float, default=1.0)
    p.add_argument("--species", choices=("scalar", "maxwell"), default="maxwell")
    p.add_argument("--flat-limit", dest="flat_limit", action="store_true",
                   help="take H -> 0 with the conformal factor held at 1")

    p = add("flrw-curvature", "curvature of a spatially flat FLRW metric at one conformal time")
    _add_family(p)
    p.add_argument("--path", choices=("closed_form", "generic", "both"), default="both")
    p.add_argument("--printed-h1", dest="printed_h1", action="store_true",
                   help="also report the commonly quoted (non-conserved) (1)H closed form")

    p = add("anomaly-trace", "trace anomaly in 2D (from R) or 4D (from a scale-factor family)")
    p.add_argument("--dim", type=int, choices=(2, 4), default=4)
    p.add_argument("--R", type=float, default=None, help="2D Ricci scalar, anomaly sign convention")
    p.add_argument("--species", choices=("scalar", "maxwell"), default="maxwell")
    _add_family(p)

    p = add("verify", "run the cross-method and oracle checks")
    p.add_argument("--tol", type=float, default=None, help="override every check tolerance")

    p = add("sweep", "evaluate a command over a grid of one real input")
    p.add_argument("--param", required=True, help="real input of the base command to vary")
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--scale", choices=("linear", "log"), default="linear")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output order is fixed)")
    p.add_argument("base", choices=sorted(SWEEPABLE), help="command to sweep")
    p.add_argument("base_args", nargs=argparse.REMAINDER, help="arguments of the base command")
    return parser, subs


# -- config files ----------------------------------------------------------------

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def read_config(path: str) -> dict[str, str]:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ValidationError(f"cannot read config {path!r}: {exc.strerror}") from None
    out = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.lstrip("-")] = value
    return out


def _option_actions(p: argparse.ArgumentParser) -> dict:
    return {s.lstrip("-"): act for act in p._actions for s in act.option_strings}


def _convert(act, key, raw):
    if isinstance(act, argparse._StoreTrueAction):
        low = raw.lower()
        if low not in _TRUE | _FALSE:
            raise ValidationError(f"config key {key!r} expects true/false, got {raw!r}")
        return low in _TRUE
    try:
        value = act.type(raw) if act.type else raw
    except (TypeError, ValueError):
        raise ValidationError(f"config key {key!r}: cannot parse {raw!r}") from None
    if act.choices is not None and value not in act.choices:
        raise ValidationError(f"config key {key!r}: {raw!r} is not one of {list(act.choices)}")
    return value


def apply_config(cfg: dict[str, str], *parsers) -> None:
    """Install config values as defaults on the first parser that knows each key."""
    skip = {"config", "output", "help"}
    for key, raw in cfg.items():
        for p in parsers:
            acts = _option_actions(p)
            name = key if key in acts else key.replace("_", "-")
            if name in acts and name not in skip:
                act = acts[name]
                p.set_defaults(**{act.dest: _convert(act, key, raw)})
                break
        else:
            raise ValidationError(f"unknown config key {key!r}")


# -- rendering -----------------------------------------------------------------


def render_record(rec: RunRecord, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rec.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if rec.checks is not None:
            w.writerow(["check", "error", "tol", "passed", "detail", "tool_version"])
            for c in rec.checks:
                w.writerow([c.name, repr(c.error), repr(c.tol), c.passed, c.detail, rec.version])
            return buf.getvalue()
        cols = rec.columns()
        w.writerow([*rec.inputs, *cols, "tool_version"])
        w.writerow([*(_cell(v) for v in rec.inputs.values()), *(repr(v) for v in cols.values()), rec.version])
        return buf.getvalue()
    lines = [rec.command, "  " + " ".join(f"{k}={_fmt(v)}" for k, v in rec.inputs.items())]
    if rec.checks is not None:
        width = max(len(c.name) for c in rec.checks)
        for c in rec.checks:
            flag = "PASS" if c.passed else "FAIL"
            lines.append(f"  {flag}  {c.name:<{width}}  error={c.error:.3e}  tol={c.tol:.1e}  {c.detail}".rstrip())
        n_fail = sum(not c.passed for c in rec.checks)
        lines.append(f"  {len(rec.checks) - n_fail}/{len(rec.checks)} checks passed")
    else:
        width = max(len(f"{o.name} [{o.method}]") for o in rec.outputs)
        for o in rec.outputs:
            lines.append(f"  {o.name + ' [' + o.method + ']':<{width}}  {o.value:.15g}")
    return "\n".join(lines) + "\n"


def _cell(v):
    return repr(v) if isinstance(v, float) else ("" if v is None else v)


def render_sweep(spec: SweepSpec, base: str, base_args: list, values, records, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "tool_version": __version__,
            "conventions": CONVENTIONS,
            "sweep": {"param": spec.param, "start": spec.start, "stop": spec.stop, "count": spec.count,
                      "scale": spec.scale, "base_command": base, "base_args": base_args},
            "rows": [
                {"index": i, "value": v, "inputs": r.inputs,
                 "outputs": [{"name": o.name, "method": o.method, "value": o.value} for o in r.outputs]}
                for i, (v, r) in enumerate(zip(values, records))
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    inputs = [k for k in records[0].inputs if k != spec.param]
    cols = list(records[0].columns())
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", spec.param, *inputs, *cols, "tool_version"])
        for i, (v, r) in enumerate(zip(values, records)):
            c = r.columns()
            w.writerow([i, repr(v), *(_cell(r.inputs[k]) for k in inputs), *(repr(c[k]) for k in cols), __version__])
        return buf.getvalue()
    header = ["index", spec.param, *cols]
    rows = [[str(i), _fmt(v), *(_fmt(r.columns()[k]) for k in cols)] for i, (v, r) in enumerate(zip(values, records))]
    widths = [max(len(h), *(len(row[j]) for row in rows)) for j, h in enumerate(header)]
    out = ["  ".join(h.rjust(wd) for h, wd in zip(header, widths))]
    out += ["  ".join(c.rjust(wd) for c, wd in zip(row, widths)) for row in rows]
    return "\n".join(out) + "\n"


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_name(ns) -> str:
    return "json" if ns.json else "csv" if ns.csv else "text"


# -- entry point ------------------------------------------------------------------


def _parse(argv):
    parser, subs = build_parser()
    ns = parser.parse_args(argv)
    if ns.config:
        targets = [subs[ns.command]]
        if ns.command == "sweep":
            targets.append(subs[ns.base])
        apply_config(read_config(ns.config), *targets)
        ns = parser.parse_args(argv)
    return ns, subs


_OUTPUT_FLAGS = {"--json": 0, "--csv": 0, "--quiet": 0, "-o": 1, "--output": 1, "--config": 1}


def _physics_args(args: list) -> list:
    """Base-command arguments without output-only flags, as echoed in sweep output."""
    out, skip = [], 0
    for tok in args:
        if skip:
            skip -= 1
            continue
        name = tok.split("=", 1)[0]
        if name in _OUTPUT_FLAGS:
            skip = 0 if "=" in tok else _OUTPUT_FLAGS[name]
            continue
        out.append(tok)
    return out


def _sweep(ns, subs) -> str:
    if ns.param not in SWEEPABLE[ns.base]:
        raise ValidationError(
            f"{ns.param!r} is not a real input of {ns.base}; choose from {', '.join(SWEEPABLE[ns.base])}"
        )
    spec = SweepSpec(ns.param, ns.start, ns.stop, ns.count, ns.scale)
    if ns.jobs < 1:
        raise ValidationError("--jobs must be at least 1")
    base_parser = subs[ns.base]
    base_ns = base_parser.parse_args(ns.base_args)
    if base_ns.config:
        apply_config(read_config(base_ns.config), base_parser)
    # output flags written after the base command apply to the whole sweep
    for flag in ("json", "csv", "quiet"):
        setattr(ns, flag, getattr(ns, flag) or getattr(base_ns, flag))
    ns.output = ns.output or base_ns.output
    if ns.json and ns.csv:
        raise ValidationError("--json and --csv are mutually exclusive")
    opt = "--" + ns.param.replace("_", "-")
    values = spec.grid()
    namespaces = [base_parser.parse_args([*ns.base_args, f"{opt}={v!r}"]) for v in values]
    records = run_sweep(spec, ns.base, namespaces, ns.jobs)
    return render_sweep(spec, ns.base, _physics_args(ns.base_args), values, records, _fmt_name(ns))


def _banner(ns) -> None:
    if not ns.quiet:
        print(BANNER, file=sys.stderr)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    try:
        ns, subs = _parse(argv)
        if ns.command == "sweep":
            text = _sweep(ns, subs)
            _banner(ns)
            _emit(text, ns.output)
            return EXIT_OK
        _banner(ns)
        rec = COMMANDS[ns.command](ns)
        _emit(render_record(rec, _fmt_name(ns)), ns.output)
        if rec.checks is not None and not all(c.passed for c in rec.checks):
            return EXIT_VERIFY
        return EXIT_OK
    except (ValidationError, DomainError, BoundaryConditionError) as exc:
        kind = "domain" if isinstance(exc, (DomainError, BoundaryConditionError)) else "usage"
        if want_json:
            print(json.dumps({"error": kind, "message": str(exc)}), file=sys.stderr)
        else:
            print(f"error ({kind}): {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
