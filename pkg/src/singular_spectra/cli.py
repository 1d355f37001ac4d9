"""Command-line front end.

Subcommands ``spectrum``, ``heat``, ``zeta``, ``detreg`` and ``validate``
write a JSON report ``{config, results, errors, version}`` or a CSV table.
Exit status is 0 on success, 1 when a computation or validation check
fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from .errors import SingularSpectraError
from .sae import BoundaryCondition, SpectralProblem

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    R: float
    theta1: str
    theta2: str = "dirichlet"
    count: int = 10
    t_min: float = 1e-4
    t_max: float = 1e-1
    t_points: int = 7
    s_grid: tuple = (0.8, 1.0, 1.5, 2.0)
    suite: str = "all"
    output: str | None = None
    format: str = "json"
    jobs: int = 1
    extra: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# parsing


def parse_theta1(text: str) -> BoundaryCondition:
    """Radians, ``tan=<value>`` or ``friedrichs``."""
    t = text.strip().lower()
    if t == "friedrichs":
        return BoundaryCondition.friedrichs()
    if t.startswith("tan="):
        return BoundaryCondition.from_tan(float(t[4:]))
    return BoundaryCondition.from_angle(float(t))


def parse_theta2(text: str) -> BoundaryCondition:
    """Radians, ``tan=<value>``, ``dirichlet`` or ``neumann``."""
    t = text.strip().lower()
    if t == "dirichlet":
        return BoundaryCondition.dirichlet()
    if t == "neumann":
        return BoundaryCondition.neumann()
    if t.startswith("tan="):
        return BoundaryCondition.from_tan(float(t[4:]))
    return BoundaryCondition.from_angle(float(t))


def _s_grid(text: str) -> tuple:
    vals = []
    for item in text.split(","):
        item = item.strip()
        if item:
            vals.append(complex(item.replace("i", "j")) if ("j" in item or "i" in item) else float(item))
    if not vals:
        raise ValueError("empty s grid")
    return tuple(vals)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singular-spectra",
        description="Spectra, heat traces, zeta functions and determinants for -d^2/dr^2 - 1/(4 r^2) on [0, R].",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--R", type=float, default=1.0, help="interval length (default 1)")
    common.add_argument("--theta1", default="0", help="angle at r = 0: radians, tan=<v> or friedrichs")
    common.add_argument("--theta2", default="dirichlet", help="angle at r = R: radians, tan=<v>, dirichlet or neumann")
    common.add_argument("--output", default=None, help="report path (default stdout)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", parents=[common], help="eigenvalues")
    sp.add_argument("--count", type=int, default=10)

    hp = sub.add_parser("heat", parents=[common], help="heat trace on a log-spaced t grid")
    hp.add_argument("--t-min", type=float, default=1e-4)
    hp.add_argument("--t-max", type=float, default=1e-1)
    hp.add_argument("--t-points", type=int, default=7)

    zp = sub.add_parser("zeta", parents=[common], help="zeta function on an s grid")
    zp.add_argument("--s-grid", default="0.8,1.0,1.5,2.0", help="comma-separated, complex as 0.1+0.2j")
    zp.add_argument("--count", type=int, default=2000, help="eigenvalues for the direct sum")

    sub.add_parser("detreg", parents=[common], help="regularized determinant against the closed form")

    vp = sub.add_parser("validate", parents=[common], help="run invariant checks")
    vp.add_argument("--suite", default="all", help="all or one of: " + ", ".join(SUITES))
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command, R=ns.R, theta1=ns.theta1, theta2=ns.theta2)
    cfg.output, cfg.format, cfg.jobs = ns.output, ns.format, ns.jobs
    if ns.command in ("spectrum", "zeta"):
        cfg.count = ns.count
    if ns.command == "heat":
        cfg.t_min, cfg.t_max, cfg.t_points = ns.t_min, ns.t_max, ns.t_points
    if ns.command == "zeta":
        cfg.s_grid = _s_grid(ns.s_grid)
    if ns.command == "validate":
        cfg.suite = ns.suite
    return cfg


def validate_config(cfg: RunConfig) -> SpectralProblem:
    """Check preconditions; raises ValueError with an actionable message."""
    if not (cfg.R > 0.0 and math.isfinite(cfg.R)):
        raise ValueError(f"--R must be positive and finite, got {cfg.R}")
    try:
        bc0 = parse_theta1(cfg.theta1)
    except ValueError as exc:
        raise ValueError(f"--theta1 {cfg.theta1!r}: expected radians, tan=<value> or friedrichs") from exc
    try:
        bcR = parse_theta2(cfg.theta2)
    except ValueError as exc:
        raise ValueError(f"--theta2 {cfg.theta2!r}: expected radians, tan=<value>, dirichlet or neumann") from exc
    if cfg.count < 1:
        raise ValueError("--count must be >= 1")
    if cfg.jobs < 1:
        raise ValueError("--jobs must be >= 1")
    if cfg.command == "heat":
        if not (0.0 < cfg.t_min <= cfg.t_max):
            raise ValueError("need 0 < --t-min <= --t-max")
        if cfg.t_min < 1e-6:
            raise ValueError("--t-min below 1e-6 needs too many eigenvalues")
        if cfg.t_points < 1:
            raise ValueError("--t-points must be >= 1")
    if cfg.command == "validate" and cfg.suite not in SUITES and cfg.suite != "all":
        raise ValueError(f"--suite must be all or one of {', '.join(SUITES)}")
    p = SpectralProblem(cfg.R, bc0, bcR)
    if cfg.command in ("zeta", "detreg") and not p.is_dirichlet:
        raise ValueError(f"{cfg.command} needs --theta2 dirichlet")
    return p


# ---------------------------------------------------------------------------
# commands


def cmd_spectrum(cfg: RunConfig, p: SpectralProblem):
    from .spectrum import spectrum

    sp = spectrum(p, cfg.count, cfg.jobs)
    rows = []
    for lam in sorted(sp.extra_negative) + ([sp.negative] if sp.negative is not None else []):
        rows.append({"kind": "negative", "index": 0, "value": lam, "error_estimate": 1e-10 * abs(lam)})
    rows.append({"kind": "zero_mode", "index": 0, "value": 1.0 if sp.zero_mode else 0.0, "error_estimate": 0.0})
    for j, lam in enumerate(sp.positive, start=1):
        rows.append({"kind": "positive", "index": j, "value": lam, "error_estimate": 2e-14 * lam})
    return rows, []


def _heat_row(t, p):
    from .heat import heat_asymptotic, heat_trace

    h = heat_trace(t, p)
    row = {"t": t, "value": h.value, "error_estimate": h.tail_bound}
    if not p.is_friedrichs and t < 0.5:
        row["asymptotic_N3"] = heat_asymptotic(t, 3, p)
    return row


def cmd_heat(cfg: RunConfig, p: SpectralProblem):
    ts = [float(t) for t in np.geomspace(cfg.t_min, cfg.t_max, cfg.t_points)]
    from .heat import _count_needed
    from .spectrum import cached_spectrum

    # one spectrum, split over --jobs workers, serves every t
    cached_spectrum(p, _count_needed(min(ts), p.R, 0.0) + 64, cfg.jobs)
    return [_heat_row(t, p) for t in ts], []


def _zeta_row(s, p, count):
    from .spectrum import negative_eigenvalue
    from .zeta import zeta_contour, zeta_spectral

    z = zeta_contour(s, p)
    if complex(s).imag == 0.0:
        z = complex(z).real  # real spectrum, real s: the imaginary part is roundoff
    row = {"s": _num(s), "contour": _num(z)}
    if complex(s).real > 0.6 and negative_eigenvalue(p) is None:
        d = zeta_spectral(s, p, count)
        row["spectral"] = _num(d)
        row["error_estimate"] = abs(z - d)
    else:
        row["error_estimate"] = None
    return row


def cmd_zeta(cfg: RunConfig, p: SpectralProblem):
    rows, errors = [], []
    for s in cfg.s_grid:
        try:
            rows.append(_zeta_row(s, p, cfg.count))
        except SingularSpectraError as exc:
            errors.append({"s": _num(s), "error": type(exc).__name__, "message": str(exc)})
    return rows, errors


def cmd_detreg(cfg: RunConfig, p: SpectralProblem):
    from .zeta import det_closed_form, det_friedrichs, det_friedrichs_contour, det_reg

    if p.is_friedrichs:
        computed = det_friedrichs_contour(p.R)
        closed = det_friedrichs(p.R)
    else:
        computed = det_reg(p)
        closed = det_closed_form(p)
    rel = abs(computed - closed) / abs(closed)
    return [{"computed": computed, "closed_form": closed, "relative_difference": rel, "error_estimate": rel}], []


def _num(z):
    z = complex(z)
    return z.real if z.imag == 0.0 else {"re": z.real, "im": z.imag}


# ---------------------------------------------------------------------------
# validation suite


def _check(name, value, tol, ok=None):
    passed = bool(value <= tol) if ok is None else bool(ok)
    return {"invariant": name, "value": float(value), "tolerance": float(tol), "passed": passed}


def _suite_specfun():
    from .specfun import j1_y1, j0, y0

    out = []
    worst = 0.0
    for z in (0.3, 1.7 + 0.4j, 5.0, 12.0 + 3.0j, 25.0):
        J1, Y1 = j1_y1(z)
        w = J1 * y0(z) - j0(z) * Y1
        worst = max(worst, abs(w - 2.0 / (math.pi * z)) * abs(z))
    out.append(_check("bessel_wronskian", worst, 1e-10))
    z = 1e-6
    out.append(_check("z_y1_limit", abs((z * j1_y1(z)[1]).real + 2.0 / math.pi), 1e-4))
    return out


def _suite_sae():
    from .sae import is_lagrangian, lagrangian_from_angles

    ok = all(
        is_lagrangian(lagrangian_from_angles(BoundaryCondition.from_angle(a), BoundaryCondition.from_angle(b)))
        for a in np.linspace(0.0, 3.0, 5)
        for b in np.linspace(0.0, 3.0, 5)
    )
    return [_check("lagrangian_planes", 0.0 if ok else 1.0, 0.0, ok)]


def _suite_spectrum():
    from .spectrum import has_zero_mode, negative_eigenvalue, negative_eigenvalue_secular

    bad, worst = 0, 0.0
    for R in (0.3, 1.0, 2.7):
        for tv in (-3.0, -0.5, 0.0, 0.9, math.log(R), 3.0):
            p = SpectralProblem.from_tan(R, tv)
            lam = negative_eigenvalue(p)
            bad += (lam is not None) != (tv < math.log(R))
            bad += has_zero_mode(p) != (tv == math.log(R))
            if lam is not None:
                worst = max(worst, abs(lam / negative_eigenvalue_secular(p) - 1.0))
    return [_check("negative_and_zero_mode_criteria", bad, 0), _check("negative_two_routes", worst, 1e-9)]


def _suite_resolvent():
    from .resolvent import trace_resolvent, trace_spectral_sum

    p = SpectralProblem.from_tan(1.0, 0.0)
    d = abs(trace_resolvent(1.5j, p) - trace_spectral_sum(1.5j, p, 2000))
    return [_check("trace_identity", d, 1e-6)]


def _suite_heat():
    from .heat import alpha_k, heat_trace
    from .specfun import EULER_GAMMA

    k = 0.37
    d2 = abs(alpha_k(2, k) - alpha_k(2, k, "quadrature")) + abs(alpha_k(2, k) - (EULER_GAMMA + 2 * k))
    p = SpectralProblem.from_tan(1.0, 0.0)
    f = SpectralProblem(1.0, BoundaryCondition.friedrichs())
    t = 1e-6
    est = (heat_trace(t, p).value - heat_trace(t, f).value) * math.log(1.0 / t)
    return [_check("alpha2_dual_method", d2, 1e-10), _check("inverse_log_alpha1", abs(est - 1.0), 0.15)]


def _suite_zeta():
    from .zeta import det_closed_form, det_reg, zeta_contour, zeta_spectral

    p = SpectralProblem.from_tan(1.0, 1.0)
    d = abs(zeta_contour(1.0, p) - zeta_spectral(1.0, p))
    worst = 0.0
    for R, tv in ((1.0, 1.0), (1.0, 0.0), (1.0, -2.0), (2.0, 0.3)):
        q = SpectralProblem.from_tan(R, tv)
        worst = max(worst, abs(det_reg(q) / det_closed_form(q) - 1.0))
    return [_check("zeta_representations", d, 1e-6), _check("det_closed_form", worst, 1e-6)]


def _suite_oracle():
    from .oracle import oracle_eigenvalues
    from .spectrum import positive_eigenvalues

    p = SpectralProblem(1.0, BoundaryCondition.from_tan(0.5), BoundaryCondition.neumann())
    q = SpectralProblem.from_tan(1.0, 0.0)
    worst = 0.0
    for prob in (p, q):
        a = np.array(positive_eigenvalues(prob, 4))
        b = np.array([v for v in oracle_eigenvalues(prob, 6) if v > 0][:4])
        worst = max(worst, float(np.max(np.abs(a / b - 1.0))))
    return [_check("oracle_equivalence", worst, 1e-7)]


SUITES = {
    "specfun": _suite_specfun,
    "sae": _suite_sae,
    "spectrum": _suite_spectrum,
    "resolvent": _suite_resolvent,
    "heat": _suite_heat,
    "zeta": _suite_zeta,
    "oracle": _suite_oracle,
}


def cmd_validate(cfg: RunConfig, p: SpectralProblem):
    names = list(SUITES) if cfg.suite == "all" else [cfg.suite]
    rows, errors = [], []
    for name in names:
        try:
            for row in SUITES[name]():
                rows.append({"suite": name, **row})
        except SingularSpectraError as exc:
            errors.append({"suite": name, "error": type(exc).__name__, "message": str(exc)})
    return rows, errors


COMMANDS = {
    "spectrum": cmd_spectrum,
    "heat": cmd_heat,
    "zeta": cmd_zeta,
    "detreg": cmd_detreg,
    "validate": cmd_validate,
}


# ---------------------------------------------------------------------------
# output


def _config_dict(cfg: RunConfig) -> dict:
    d = asdict(cfg)
    d.pop("extra")
    d["s_grid"] = [_num(s) for s in cfg.s_grid]
    return d


def render(cfg: RunConfig, rows, errors) -> str:
    if cfg.format == "json":
        report = {"config": _config_dict(cfg), "results": rows, "errors": errors, "version": __version__}
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    keys: list[str] = []
    for row in rows:
        for k in row:
            if k not in keys:
                keys.append(k)
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(keys)
    for row in rows:
        w.writerow([_csv_cell(row.get(k)) for k in keys])
    return buf.getvalue()


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, dict):
        return f"{format(v['re'], '.17g')}{format(v['im'], '+.17g')}j"
    return str(v)


def run(cfg: RunConfig) -> int:
    """Dispatch ``cfg`` and write the report; returns the exit status."""
    try:
        p = validate_config(cfg)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    errors: list = []
    try:
        rows, errors = COMMANDS[cfg.command](cfg, p)
    except SingularSpectraError as exc:
        rows = []
        errors = [{"error": type(exc).__name__, "message": str(exc)}]
    text = render(cfg, rows, errors)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failed = bool(errors) or any(r.get("passed") is False for r in rows)
    for r in rows:
        if r.get("passed") is False:
            print(f"validation failed: {r['invariant']} = {r['value']:.3g} > {r['tolerance']:.3g}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except ValueError as exc:
        print(f"usage error: --s-grid: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
