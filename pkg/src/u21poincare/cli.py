"""Command line front end.

Exit codes: 0 success, 1 a verify check failed, 2 usage or validation
error, 3 internal consistency failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .errors import InternalError, ValidationError
from .moduli import ComponentReport, ModuliParams, component_poincare, enumerate_components, euler_fixed_closed_form, validate
from .verify import SweepResult, SweepSpec, run_sweep

FORMATS = ("text", "json", "latex", "csv")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"2..4"`` -> ``(2, 4)``; a single integer is a one-element range."""
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return int(lo), int(lo)
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer range: {text!r}") from None


def _space_name(p: ModuliParams, latex: bool = False) -> str:
    if latex:
        base = r"\widetilde{\mathcal{M}}" if p.fixed_det else r"\mathcal{M}"
        return f"{base}_{{{p.d1},{p.d2}}}"
    return f"{'SU' if p.fixed_det else 'U'}(2,1) component M_{{{p.d1},{p.d2}}}"


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


# -- renderers --------------------------------------------------------------

def render_report(report: ComponentReport, fmt: str) -> str:
    p, n = report.params, report.normalized
    if fmt == "json":
        return _dumps(report.to_json_obj())
    if fmt == "latex":
        return f"P_{{t}}({_space_name(p, latex=True)}) = {report.poincare.render('latex')}\n"
    if fmt == "csv":
        rows = [["part", "m1", "m2", "morse_index", "exponent", "coefficient"]]
        for c in report.criticals:
            for e, coef in c.poincare.terms():
                rows.append([c.kind, c.m1, c.m2, c.morse_index, e, coef])
        for e, coef in report.poincare.terms():
            rows.append(["total", "", "", "", e, coef])
        return _csv(rows)
    lines = [
        f"{_space_name(p)}, genus {p.g}",
        f"normalized: d={n.d} d2={n.d2} dualized={'yes' if n.dualized else 'no'} tensor_shift={n.tensor_shift}",
        "critical submanifolds:",
    ]
    for c in report.criticals:
        label = "N2" if c.kind == "N2" else f"N3 m1={c.m1} m2={c.m2}"
        lines.append(
            f"  {label:<14} index={c.morse_index:<3} dim={c.dim_critical:<3} "
            f"downflow={c.dim_downflow:<3} P = {c.poincare}"
        )
    lines.append(f"P_t = {report.poincare}")
    lines.append(f"euler = {report.euler}")
    failed = report.failed_checks()
    if failed:
        lines.append(f"checks: FAILED {', '.join(failed)}")
    else:
        lines.append(f"checks: all {len(report.checks)} passed")
    return "\n".join(lines) + "\n"


def render_components(g: int, d: int, fixed: bool, reports: list[ComponentReport], fmt: str) -> str:
    if fmt == "json":
        return _dumps({
            "g": g,
            "d": d,
            "fixed_det": fixed,
            "components": [r.to_json_obj() for r in reports],
        })
    if fmt == "csv":
        rows = [["g", "d", "d1", "d2", "fixed_det", "n_criticals", "euler", "poincare"]]
        for r in reports:
            rows.append([g, d, r.params.d1, r.params.d2, int(fixed), len(r.criticals), r.euler, str(r.poincare)])
        return _csv(rows)
    if fmt == "latex":
        return "".join(
            f"P_{{t}}({_space_name(r.params, latex=True)}) = {r.poincare.render('latex')}\n" for r in reports
        )
    lines = [f"genus {g}, degree {d}: {len(reports)} components"]
    for r in reports:
        lines.append(
            f"  d1={r.params.d1} d2={r.params.d2}: {len(r.criticals)} critical submanifolds, "
            f"euler={r.euler}, P_t = {r.poincare}"
        )
    return "\n".join(lines) + "\n"


def render_euler(p: ModuliParams, euler: int, closed: int | None, fmt: str) -> str:
    if fmt == "json":
        return _dumps({
            "params": p.to_json_obj(),
            "euler": str(euler),
            "closed_form": None if closed is None else str(closed),
        })
    if fmt == "csv":
        return _csv([["g", "d1", "d2", "fixed_det", "euler"], [p.g, p.d1, p.d2, int(p.fixed_det), euler]])
    if fmt == "latex":
        return f"\\chi({_space_name(p, latex=True)}) = {euler}\n"
    return f"{euler}\n"


def render_sweep(result: SweepResult, fmt: str) -> str:
    spec = result.spec
    names = sorted(result.counts)
    if fmt == "json":
        return _dumps({
            "sweep": {
                "g_range": list(spec.g_range),
                "d_range": list(spec.d_range),
                "fixed_det": spec.fixed_det,
            },
            "ok": result.ok,
            "components": len(result.components),
            "skipped": [list(s) for s in result.skipped],
            "checks": {k: {"pass": result.counts[k]["pass"], "fail": result.counts[k]["fail"]} for k in names},
            "failures": [list(f) for f in result.failures],
            "euler": [
                {"g": r.params.g, "d1": r.params.d1, "d2": r.params.d2, "euler": str(r.euler)}
                for r in result.components
            ],
        })
    if fmt == "csv":
        rows = [["check", "pass", "fail"]]
        rows += [[k, result.counts[k]["pass"], result.counts[k]["fail"]] for k in names]
        return _csv(rows)
    det = "SU(2,1)" if spec.fixed_det else "U(2,1)"
    lines = [
        f"{det} sweep: genus {spec.g_range[0]}..{spec.g_range[1]}, degree {spec.d_range[0]}..{spec.d_range[1]}",
        f"components: {len(result.components)}, skipped (d divisible by 3): {len(result.skipped)}",
    ]
    width = max((len(k) for k in names), default=0)
    for k in names:
        c = result.counts[k]
        lines.append(f"  {k:<{width}}  pass={c['pass']} fail={c['fail']}")
    if spec.fixed_det:
        for r in result.components:
            lines.append(f"  euler g={r.params.g} d1={r.params.d1} d2={r.params.d2}: {r.euler}")
    if result.failures:
        lines.append("FAILED:")
        lines += [f"  g={g} d={d} d2={d2} {name}" for g, d, d2, name in result.failures]
    else:
        lines.append("all checks passed")
    if fmt == "latex":
        return "\n".join("% " + line for line in lines) + "\n"
    return "\n".join(lines) + "\n"


def export_polynomials(result: SweepResult, path: str) -> None:
    rows = [["g", "d1", "d2", "fixed_det", "part", "m2", "morse_index", "min_exp", "coeffs"]]
    for r in result.components:
        base = [r.params.g, r.params.d1, r.params.d2, int(r.params.fixed_det)]
        for c in r.criticals:
            rows.append(base + [c.kind, c.m2, c.morse_index, c.poincare.min_exp, " ".join(map(str, c.poincare.coeffs))])
        rows.append(base + ["total", "", "", r.poincare.min_exp, " ".join(map(str, r.poincare.coeffs))])
    with open(path, "w", newline="") as fh:
        fh.write(_csv(rows))


# -- commands ---------------------------------------------------------------

def cmd_poincare(args) -> tuple[str, int]:
    report = component_poincare(ModuliParams(args.genus, args.d1, args.d2, args.fixed_det))
    return render_report(report, args.format), EXIT_OK if report.ok else EXIT_INTERNAL


def cmd_components(args) -> tuple[str, int]:
    reports = []
    for d2 in enumerate_components(args.genus, args.degree):
        reports.append(component_poincare(ModuliParams(args.genus, args.degree - d2, d2, args.fixed_det)))
    code = EXIT_OK if all(r.ok for r in reports) else EXIT_INTERNAL
    return render_components(args.genus, args.degree, args.fixed_det, reports, args.format), code


def cmd_euler(args) -> tuple[str, int]:
    p = ModuliParams(args.genus, args.d1, args.d2, args.fixed_det)
    report = component_poincare(p)
    closed = euler_fixed_closed_form(validate(p)) if p.fixed_det else None
    return render_euler(p, report.euler, closed, args.format), EXIT_OK if report.ok else EXIT_INTERNAL


def cmd_verify(args) -> tuple[str, int]:
    try:
        spec = SweepSpec(args.genus, args.degree, args.fixed_det)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = run_sweep(spec, args.threads)
    if args.export_csv:
        export_polynomials(result, args.export_csv)
    return render_sweep(result, args.format), EXIT_OK if result.ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="u21poincare",
        description="Poincaré polynomials of U(2,1) and SU(2,1) representation spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, labels: bool):
        if labels:
            p.add_argument("--genus", "-g", type=int, required=True)
            p.add_argument("--d1", type=int, required=True, help="degree of the rank 2 part")
            p.add_argument("--d2", type=int, required=True, help="degree of the line part")
        p.add_argument("--fixed-det", action="store_true", help="SU(2,1): fixed determinant components")
        p.add_argument("--format", "-f", choices=FORMATS, default="text")

    p = sub.add_parser("poincare", help="Poincaré polynomial of one component")
    common(p, labels=True)
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("components", help="all components of a given total degree")
    p.add_argument("--genus", "-g", type=int, required=True)
    p.add_argument("--degree", "-d", type=int, required=True)
    common(p, labels=False)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("euler", help="Euler characteristic of one component")
    common(p, labels=True)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("verify", help="run every consistency check over a sweep")
    p.add_argument("--genus", "-g", type=parse_range, required=True, metavar="LO..HI")
    p.add_argument("--degree", "-d", type=parse_range, required=True, metavar="LO..HI")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: $U21_THREADS or all cores)")
    p.add_argument("--export-csv", metavar="PATH", help="write every computed polynomial to PATH")
    common(p, labels=False)
    p.set_defaults(func=cmd_verify)
    return parser


def _error(name: str, message: str, fmt: str, out, err) -> None:
    if fmt == "json":
        out.write(_dumps({"error": name, "message": message}))
    err.write(f"error: {name}: {message}\n")


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = args.func(args)
    except (ValidationError, UsageError) as exc:
        _error(type(exc).__name__, str(exc), args.format, out, err)
        return EXIT_USAGE
    except InternalError as exc:
        _error(type(exc).__name__, str(exc), args.format, out, err)
        return EXIT_INTERNAL
    out.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
