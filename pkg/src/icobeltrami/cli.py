"""Command-line front end.

Every command is deterministic given its flags.  Exit status: 0 on success,
1 when a verification predicate fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .catalog import CatalogError, catalog
from .trigexpr import TAYLOR_CAP, taylor_component

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _float(text: str, what: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"{what} must be a number, got {text!r}") from None


def _point(text: str) -> list[float]:
    parts = [p for p in text.replace("(", "").replace(")", "").split(",") if p.strip()]
    if not parts:
        raise UsageError("--x0 needs comma-separated coordinates")
    return [_float(p, "--x0") for p in parts]


def _pick(positional, flag, name: str, default=None):
    if positional is not None and flag is not None and str(positional) != str(flag):
        raise UsageError(f"{name} given twice with different values")
    value = positional if positional is not None else flag
    return default if value is None else value


def _field_entry(name: str, allow_rational: bool = False):
    cat = catalog()
    try:
        entry = cat.entry(name)
    except CatalogError as err:
        raise UsageError(err.args[0]) from None
    if entry.kind == "rational" and not allow_rational:
        raise UsageError(f"field {name!r} is rational; this command needs a trigonometric or polynomial field")
    return entry


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# -- commands -------------------------------------------------------------------------


def cmd_verify(args) -> int:
    from .verification import run_criteria

    scope = _pick(args.scope, args.field, "scope", "all")
    cat = catalog()
    if scope == "all":
        results = run_criteria()
        ok = all(r.passed for r in results)
        report = {"scope": "all", "passed": ok, "criteria": [r.to_json() for r in results]}
        lines = [line for r in results for line in r.lines()]
    else:
        if scope not in cat:
            raise UsageError(f"unknown field {scope!r}; known fields: all, {', '.join(cat.names())}")
        results = cat.verify(scope)
        ok = all(r.passed for r in results)
        report = {"scope": scope, "passed": ok, "checks": [r.to_json() for r in results]}
        lines = [r.line() for r in results]
    if args.format == "json":
        _emit(_dumps(report), None)
    else:
        sys.stdout.write("\n".join(lines) + "\n")
        sys.stdout.write(f"{'all checks passed' if ok else 'VERIFICATION FAILED'}\n")
    if args.out:
        _emit(_dumps(report), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_taylor(args) -> int:
    name = _pick(args.name, args.field, "field")
    if name is None:
        raise UsageError("taylor needs a field name")
    degree = _pick(args.deg, args.degree, "degree")
    if degree is None:
        raise UsageError("taylor needs a degree")
    try:
        degree = int(degree)
    except ValueError:
        raise UsageError(f"degree must be an integer, got {degree!r}") from None
    if degree < 0:
        raise UsageError("degree must be non-negative")
    if degree > TAYLOR_CAP:
        raise UsageError(f"degree {degree} exceeds the Taylor cap {TAYLOR_CAP} (ICOBELTRAMI_TAYLOR_CAP)")
    entry = _field_entry(name)
    comps = [taylor_component(c, degree) for c in entry.field]
    report = {
        "field": name,
        "degree": degree,
        "homogeneous": True,
        "zero": all(p.is_zero() for p in comps),
        "components": [p.to_json() for p in comps],
    }
    _emit(_dumps(report), args.out)
    return EXIT_OK


def cmd_orbit(args) -> int:
    from .dynamics import DEFAULT_STEP, rk4_orbit

    name = _pick(args.name, args.field, "field", "I")
    entry = _field_entry(name)
    x0 = _point(args.x0) if args.x0 else [5.0, 6.0, 7.0]
    if len(x0) != entry.field.n:
        raise UsageError(f"--x0 needs {entry.field.n} coordinates for field {name!r}")
    t_end = _float(args.t_end, "--t-end") if args.t_end is not None else 1.0
    h = _float(args.step, "--step") if args.step is not None else DEFAULT_STEP
    if not h > 0:
        raise UsageError("--step must be positive")
    if not t_end > 0:
        raise UsageError("--t-end must be positive")
    rec = rk4_orbit(entry.field, x0, t_end, h)
    if args.format == "json":
        text = _dumps(
            {
                "field": name,
                "integrator": rec.integrator,
                "h": rec.h,
                "overflow": rec.overflow,
                "t": rec.times.tolist(),
                "points": rec.points.tolist(),
            }
        )
    else:
        text = rec.to_csv()
    _emit(text, args.out)
    if rec.overflow:
        sys.stderr.write("orbit left the finite range; record truncated\n")
    return EXIT_OK


def cmd_zeros(args) -> int:
    from .dynamics import DEFAULT_SCAN_STEP, LINE_CLASSES, line_roots, line_zero_map

    cls = _pick(args.line_class, None, "line class", "F")
    s_max = _pick(args.smax, args.s_max, "s_max", 20.0)
    s_max = _float(str(s_max), "s_max")
    scan = _float(args.scan_step, "--scan-step") if args.scan_step is not None else DEFAULT_SCAN_STEP
    if not s_max > 0 or not scan > 0:
        raise UsageError("s_max and --scan-step must be positive")
    name = args.field or "I"
    entry = _field_entry(name)
    if entry.field.n != 3:
        raise UsageError("zeros on symmetry lines need a 3-dimensional field")
    try:
        if cls == "all":
            reports = line_zero_map(entry.field, s_max, scan)
        elif cls in LINE_CLASSES:
            reports = [line_roots(entry.field, cls, s_max, scan)]
        else:
            raise UsageError(f"line class must be one of F, V, E, all; got {cls!r}")
    except ValueError as err:
        raise UsageError(str(err)) from None
    out = []
    for r in reports:
        d = r.to_json()
        d["first_positive_root"] = r.first_positive_root()
        out.append(d)
    _emit(_dumps({"field": name, "s_max": s_max, "scan_step": scan, "reports": out}), args.out)
    return EXIT_OK


def cmd_lines(args) -> int:
    from .dynamics import LINE_CLASSES
    from .linalg import icosahedral_group, orbit_of_line

    g = icosahedral_group()
    rows = []
    for cls, rep in LINE_CLASSES.items():
        for d in orbit_of_line(g, rep):
            rows.append({"class": cls, "direction": [str(c) for c in d], "direction_float": [float(c) for c in d]})
    _emit(_dumps({"count": len(rows), "lines": rows}), args.out)
    return EXIT_OK


def cmd_bracket(args) -> int:
    from .verification import bracket_nq, nonzero_witness

    br = bracket_nq()
    w = nonzero_witness(br)
    report = {
        "bracket": "[N, Q]",
        "nonzero": w is not None,
        "witness": w.to_json() if w else None,
        "components": [c.polynomial_part().to_json() for c in br],
    }
    _emit(_dumps(report), args.out)
    return EXIT_OK if w is not None else EXIT_FAIL


def cmd_search(args) -> int:
    from .dynamics import newton_zero_search

    name = args.field or "I"
    entry = _field_entry(name)
    if entry.field.n != 3:
        raise UsageError("the zero search needs a 3-dimensional field")
    box = _float(args.box, "--box")
    if not box > 0 or args.starts <= 0:
        raise UsageError("--box and --starts must be positive")
    found = newton_zero_search(entry.field, box=box, starts=args.starts)
    report = {
        "field": name,
        "box": box,
        "starts": args.starts,
        "zeros": [
            {"point": c.point.tolist(), "residual": c.residual, "on_symmetry_line": c.on_symmetry_line}
            for c in found
        ],
        "off_line_count": sum(not c.on_symmetry_line for c in found),
    }
    _emit(_dumps(report), args.out)
    return EXIT_OK


def cmd_fields(args) -> int:
    cat = catalog()
    if args.name:
        _field_entry(args.name, allow_rational=True)
        _emit(_dumps(cat.descriptor(args.name)), args.out)
    else:
        rows = [{"name": n, "kind": cat.entry(n).kind, "description": cat.entry(n).description} for n in cat.names()]
        _emit(_dumps(rows), args.out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="catalog entry name")
    common.add_argument("--out", help="write the result to this file instead of stdout")
    common.add_argument("--format", choices=("json", "csv", "text"), help="output format")

    p = _Parser(prog="icobeltrami", description="Exact and numeric checks of icosahedral curl eigenfields.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("verify", parents=[common], help="run registered checks (all criteria or one field)")
    s.add_argument("scope", nargs="?", help="'all' or a field name")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("taylor", parents=[common], help="homogeneous Taylor component at the origin")
    s.add_argument("name", nargs="?")
    s.add_argument("deg", nargs="?")
    s.add_argument("--degree")
    s.set_defaults(func=cmd_taylor)

    s = sub.add_parser("orbit", parents=[common], help="RK4 orbit as CSV")
    s.add_argument("name", nargs="?")
    s.add_argument("--x0", help="start point, e.g. 5,6,7")
    s.add_argument("--t-end")
    s.add_argument("--step")
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("zeros", parents=[common], help="zeros on symmetry lines")
    s.add_argument("line_class", nargs="?", help="F, V, E or all")
    s.add_argument("smax", nargs="?")
    s.add_argument("--s-max")
    s.add_argument("--scan-step")
    s.set_defaults(func=cmd_zeros)

    s = sub.add_parser("lines", parents=[common], help="the 62 symmetry rays")
    s.set_defaults(func=cmd_lines)

    s = sub.add_parser("bracket", parents=[common], help="Lie bracket [N, Q] with a nonzero witness")
    s.set_defaults(func=cmd_bracket)

    s = sub.add_parser("search", parents=[common], help="Newton search for zeros off the symmetry lines")
    s.add_argument("--box", default="6")
    s.add_argument("--starts", type=int, default=400)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("fields", parents=[common], help="list catalog entries or dump one as JSON")
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_fields)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as err:
        sys.stderr.write(f"icobeltrami: error: {err}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
