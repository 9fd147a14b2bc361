"""Command-line front end.

Subcommands:
  exact     exact rank/crank/p(n) tables as CSV
  verify    identity-verification suites as a JSON report
  asym      R_m evaluations on the contour as CSV
  circle    one circle-method reconstruction of N(m,n) as JSON (or CSV)
  converge  exact-vs-main-term convergence study as CSV

Exit codes: 0 success; 1 a verification suite had failures; 2 invalid flags;
3 a cap or the floating-point precision budget was exceeded; 4 adaptive
quadrature failed to converge.  All diagnostics go to stderr as a single
"error: ..." line.  Identical flags produce byte-identical output: floats
are formatted to 17 significant digits in JSON and 12 in CSV, orderings are
fixed, and sampled grids are drawn from a seeded generator (default seed 0).
"""

from __future__ import annotations

import argparse
import math
import random
import sys

from . import asym, circle, exact, specfun
from .errors import (CapExceededError, DomainError, PrecisionError,
                     QuadratureError, SingularArgumentError)
from .quadrature import QuadratureConfig

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_FLAGS = 2
EXIT_CAP_EXCEEDED = 3
EXIT_QUADRATURE = 4

JSON_DIGITS = 17
CSV_DIGITS = 12


# --------------------------------------------------------------------------
# Deterministic serialization
# --------------------------------------------------------------------------

def _fmt_float(x: float, digits: int) -> str:
    if x != x:
        return '"nan"'
    if x in (float("inf"), float("-inf")):
        return f'"{x}"'
    return format(x, f".{digits}g")


def _json_dump(obj, digits: int = JSON_DIGITS) -> str:
    """Minimal deterministic JSON writer with fixed float formatting."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj, digits)
    if isinstance(obj, str):
        escaped = (obj.replace("\\", "\\\\").replace('"', '\\"')
                   .replace("\n", "\\n"))
        return f'"{escaped}"'
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json_dump(v, digits) for v in obj) + "]"
    if isinstance(obj, dict):
        return ("{" + ", ".join(
            f'{_json_dump(str(k), digits)}: {_json_dump(v, digits)}'
            for k, v in obj.items()) + "}")
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _csv_cell(value, digits: int = CSV_DIGITS) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, f".{digits}g")
    return str(value)


def _write_out(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def _point_repr(*coords) -> str:
    """Deterministic short repr of a sample point for reports."""
    parts = []
    for c in coords:
        if isinstance(c, complex):
            parts.append(f"{c.real:.6g}{c.imag:+.6g}j")
        elif isinstance(c, float):
            parts.append(f"{c:.6g}")
        else:
            parts.append(str(c))
    return "(" + ", ".join(parts) + ")"


# --------------------------------------------------------------------------
# Seeded sample grids
# --------------------------------------------------------------------------

def _sample_tau(rng: random.Random) -> complex:
    return complex(rng.uniform(-0.45, 0.45), rng.uniform(0.2, 1.5))


def _sample_z(rng: random.Random) -> complex:
    return complex(rng.uniform(-0.45, 0.45), rng.uniform(0.02, 0.25))


def _sample_uv(rng: random.Random) -> tuple[complex, complex]:
    u = complex(rng.uniform(0.1, 0.4), rng.uniform(0.05, 0.3))
    v = complex(rng.uniform(-0.4, -0.1), rng.uniform(0.05, 0.3))
    return u, v


# --------------------------------------------------------------------------
# Subcommand implementations
# --------------------------------------------------------------------------

def _cmd_exact(args) -> int:
    n_max = args.n_max
    lines = []
    if args.stat == "p":
        counts = exact.partition_counts_up_to(n_max)
        lines.append("n,count")
        for n, c in enumerate(counts):
            lines.append(f"{n},{c}")
    else:
        if args.stat == "rank":
            method = "series" if n_max > exact.ENUMERATION_CAP else "enumeration"
            table = exact.rank_table(n_max, method=method)
            # consistency check executed on write: each row sums to p(n)
            for n in range(n_max + 1):
                if table.row_sum(n) != exact.partition_count(n):
                    raise RuntimeError(
                        f"internal consistency failure: rank row {n} does not "
                        f"sum to p({n})")
        else:
            table = exact.crank_table(n_max)
        lines.append("n,m,count")
        for n in range(n_max + 1):
            row = table.row(n)
            for m in sorted(row):
                lines.append(f"{n},{m},{row[m]}")
    _write_out("\n".join(lines), args.out)
    return EXIT_OK


def _verify_transforms(rng: random.Random, points: int, cfg: QuadratureConfig):
    records = []

    def add(name, point, residual):
        records.append((name, point, residual))

    for _ in range(points):
        tau = _sample_tau(rng)
        z = _sample_z(rng)
        u, v = _sample_uv(rng)
        add("eta_inversion", _point_repr(tau),
            specfun.eta_inversion_residual(tau))
        add("theta_inversion", _point_repr(z, tau),
            specfun.theta_inversion_residual(z, tau))
        add("theta_quasiperiodicity", _point_repr(z, tau),
            specfun.theta_quasiperiod_residual(z, tau))
        add("appell_quasiperiodicity_plus", _point_repr(z, tau),
            specfun.appell_quasiperiod_residual(z, tau, 1))
        add("appell_quasiperiodicity_minus", _point_repr(z, tau),
            specfun.appell_quasiperiod_residual(z, tau, -1))
        add("theta_eta_special_value", _point_repr(tau),
            specfun.theta_eta_special_value_residual(tau))
        add("mordell_evenness", _point_repr(z, tau),
            specfun.mordell_evenness_residual(z, tau, cfg))
        add("mordell_shift", _point_repr(z, tau),
            specfun.mordell_shift_residual(z, tau, cfg))
        add("mordell_inversion", _point_repr(z, tau),
            specfun.mordell_inversion_residual(z, tau, cfg))
        add("mu_symmetry", _point_repr(u, v, tau),
            specfun.mu_symmetry_residual(u, v, tau))
        add("mu_inversion", _point_repr(u, v, tau),
            specfun.mu_inversion_residual(u, v, tau, cfg))
    return records


def _verify_decomposition(rng: random.Random, points: int, _cfg):
    records = []
    for _ in range(points):
        tau = _sample_tau(rng)
        z = _sample_z(rng)
        records.append(("rank_three_term_decomposition", _point_repr(z, tau),
                        asym.rank_decomposition_residual(z, tau)))
    return records


def _verify_euler(_rng, _points, cfg: QuadratureConfig):
    records = []
    for j in range(11):
        value, closed = specfun.euler_integral(j, cfg)
        residual = abs(value - closed) / abs(closed)
        records.append((f"euler_moment_integral_j{j}", _point_repr(j), residual))
    for t, terms in ((0.5, 20), (1.0, 20)):
        records.append((f"sech_squared_expansion_t{t:g}",
                        _point_repr(t, terms),
                        specfun.sech_expansion_residual(t, terms)))
    return records


def _verify_gm(rng: random.Random, points: int, cfg: QuadratureConfig):
    records = []
    for i in range(points):
        m = rng.choice([0, 1, 2, 3, 4, 5])
        n = rng.choice([40, 60, 80, 100])
        x = rng.uniform(-1.0, 1.0)
        sp = asym.SParam(n, m, x)
        direct = asym.R_m_eval(sp, "direct", cfg).value
        folded = asym.R_m_eval(sp, "folded", cfg).value
        rel = abs(direct - folded) / abs(direct)
        records.append(("rank_moment_folded_equivalence",
                        _point_repr(m, n, x), rel))
        if i < 3:
            # exactly one of the three period-integral pieces vanishes,
            # selected by m mod 3
            pieces = asym.I_split(m, sp.tau, cfg)
            vanishing = pieces[(0, 2, 1)[m % 3]]
            records.append(("period_integral_vanishing_piece",
                            _point_repr(m, n, x), abs(vanishing)))
    return records


_SUITES = {
    "transforms": _verify_transforms,
    "decomposition": _verify_decomposition,
    "euler": _verify_euler,
    "gm": _verify_gm,
}


def _cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    cfg = QuadratureConfig(abs_tol=1e-12, rel_tol=1e-12)
    records = _SUITES[args.suite](rng, args.points, cfg)
    report = [
        {"identity_name": name, "sample_point": point,
         "residual": float(residual), "tolerance": args.tol,
         "pass": bool(residual < args.tol)}
        for name, point, residual in records
    ]
    text = "[\n" + ",\n".join("  " + _json_dump(r) for r in report) + "\n]"
    _write_out(text, args.out)
    return EXIT_OK if all(r["pass"] for r in report) else EXIT_VERIFY_FAILED


def _cmd_asym(args) -> int:
    cfg = QuadratureConfig(abs_tol=args.tol, rel_tol=args.tol)
    lines = ["m,n,x,method,re,im,err_est"]
    for x in args.x:
        sp = asym.SParam(args.n, args.m, x)
        est = asym.R_m_eval(sp, args.method, cfg)
        lines.append(",".join([
            str(args.m), str(args.n), _csv_cell(float(x)), est.method,
            _csv_cell(est.value.real), _csv_cell(est.value.imag),
            _csv_cell(est.error_estimate)]))
    _write_out("\n".join(lines), args.out)
    return EXIT_OK


def _cmd_circle(args) -> int:
    result = circle.contour_rank_count(args.m, args.n, boundary=args.boundary)
    if args.format == "json":
        doc = {
            "m": result.m, "n": result.n,
            "major": {"re": result.major.real, "im": result.major.imag},
            "minor": {"re": result.minor.real, "im": result.minor.imag},
            "total": result.total, "rounded": result.rounded,
            "exact": result.exact, "rel_err": result.rel_err,
            "flags": result.flags,
        }
        _write_out(_json_dump(doc), args.out)
    else:
        header = ("m,n,major_re,major_im,minor_re,minor_im,total,rounded,"
                  "exact,rel_err,flags")
        row = ",".join([
            str(result.m), str(result.n),
            _csv_cell(result.major.real), _csv_cell(result.major.imag),
            _csv_cell(result.minor.real), _csv_cell(result.minor.imag),
            _csv_cell(result.total), str(result.rounded),
            str(result.exact), _csv_cell(result.rel_err),
            ";".join(result.flags)])
        _write_out(header + "\n" + row, args.out)
    return EXIT_OK


def _cmd_converge(args) -> int:
    rows = circle.convergence_study(args.ms, args.ns)
    lines = ["m,n,exact,main_term,ratio,error_scale"]
    for r in rows:
        lines.append(",".join([
            str(r.m), str(r.n), str(r.exact), _csv_cell(r.main_term),
            _csv_cell(r.ratio), _csv_cell(r.error_scale)]))
    _write_out("\n".join(lines), args.out)
    return EXIT_OK


# --------------------------------------------------------------------------
# Argument parsing
# --------------------------------------------------------------------------

def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonneg_float(text: str) -> float:
    value = float(text)
    if value < 0 or value != value:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text}")


def _float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankasym",
        description="Partition rank statistics, exactly and asymptotically.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_exact = sub.add_parser("exact", help="exact rank/crank/p tables (CSV)")
    p_exact.add_argument("--stat", choices=["rank", "crank", "p"],
                         required=True)
    p_exact.add_argument("--n-max", type=_nonneg_int, required=True)
    p_exact.add_argument("--out", default=None)
    p_exact.set_defaults(func=_cmd_exact)

    p_verify = sub.add_parser("verify", help="identity suites (JSON report)")
    p_verify.add_argument("--suite", choices=sorted(_SUITES), required=True)
    p_verify.add_argument("--tol", type=_nonneg_float, default=1e-8)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--points", type=_positive_int, default=5,
                          help="sample points per identity")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_asym = sub.add_parser("asym", help="R_m contour evaluations (CSV)")
    p_asym.add_argument("--m", type=_nonneg_int, required=True)
    p_asym.add_argument("--n", type=_positive_int, required=True)
    p_asym.add_argument("--x", type=_float_list, default=[0.0],
                        help="comma-separated contour coordinates")
    p_asym.add_argument("--method",
                        choices=["direct", "folded", "near_pole_formula"],
                        default="direct")
    p_asym.add_argument("--tol", type=_nonneg_float, default=1e-9)
    p_asym.add_argument("--out", default=None)
    p_asym.set_defaults(func=_cmd_asym)

    p_circle = sub.add_parser("circle", help="one contour reconstruction")
    p_circle.add_argument("--m", type=_nonneg_int, required=True)
    p_circle.add_argument("--n", type=_positive_int, required=True)
    p_circle.add_argument("--boundary", type=float, default=1.0)
    p_circle.add_argument("--format", choices=["json", "csv"], default="json")
    p_circle.add_argument("--out", default=None)
    p_circle.set_defaults(func=_cmd_circle)

    p_conv = sub.add_parser("converge", help="convergence study (CSV)")
    p_conv.add_argument("--ms", type=_int_list, required=True)
    p_conv.add_argument("--ns", type=_int_list, required=True)
    p_conv.add_argument("--out", default=None)
    p_conv.set_defaults(func=_cmd_converge)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CapExceededError, PrecisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except QuadratureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_QUADRATURE
    except (DomainError, SingularArgumentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_FLAGS


if __name__ == "__main__":
    sys.exit(main())
