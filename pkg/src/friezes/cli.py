"""Command line interface: ``frieze <verb> [options]``.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 violation found
(scan verbs only).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import core, deformation, geometry, search, signs, triangulations
from .formats import (encode_scalar, frieze_from_json, frieze_to_json, sequence_to_csv,
                      triangulation_from_json, triangulation_to_json)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VIOLATION = 0, 2, 3, 4


class UsageError(Exception):
    pass


def parse_list(text: str) -> list:
    return [core.as_scalar(tok) for tok in text.replace(" ", "").split(",") if tok]


def parse_ints(text: str) -> list:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def parse_threads(value) -> int:
    if value is not None:
        return value
    env = os.environ.get("FRIEZE_THREADS")
    return int(env) if env else 1


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _load_frieze(path: str, rebuild: bool = True) -> core.Frieze:
    return frieze_from_json(_read_json(path), rebuild=rebuild)


def render_pretty(f: core.Frieze, periods: int = 1) -> str:
    """Offset triangular layout: entry ``(i, d)`` sits at half-step column ``2 i + d``."""
    cells = {(2 * i + d, d): core.format_scalar(f.entry(i, d))
             for d in range(f.n + 1) for i in range(-f.n, (periods + 1) * f.n)}
    width = max(len(s) for s in cells.values()) + 1
    lo, hi = f.n, f.n + 2 * periods * f.n
    lines = []
    for d in range(f.n + 1):
        line = "".join(cells.get((c, d), "").rjust(width) if (c - d) % 2 == 0 else " " * width
                       for c in range(lo, hi))
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"


class Output:
    def __init__(self, args):
        self.fmt = getattr(args, "format", "json")
        self.path = getattr(args, "out", None)
        self.pretty = getattr(args, "pretty", False)

    def write(self, text: str):
        if not text.endswith("\n"):
            text += "\n"
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)

    def json(self, obj):
        self.write(json.dumps(obj, indent=2, sort_keys=True))


# --------------------------------------------------------------- verbs


def _emit_frieze(f: core.Frieze, args, out: Output):
    if out.pretty:
        out.write(render_pretty(f))
    elif out.fmt == "csv":
        out.write(sequence_to_csv(f.row(args.row or 1), decimal=not f.exact))
    else:
        out.json(frieze_to_json(f, full=True))


def cmd_build(args, out):
    _emit_frieze(core.build_from_first_row(parse_list(args.first_row)), args, out)
    return EXIT_OK


def cmd_from_triangulation(args, out):
    if args.diagonals is not None:
        if args.n is None:
            raise UsageError("--diagonals needs --n")
        pairs = [tuple(int(v) for v in tok.split("-")) for tok in args.diagonals.split(",") if tok]
        t = triangulations.Triangulation.from_diagonals(args.n, pairs)
    elif args.file:
        t = triangulation_from_json(_read_json(args.file))
    else:
        raise UsageError("give a triangulation file or --n/--diagonals")
    _emit_frieze(triangulations.triangulation_to_frieze(t), args, out)
    return EXIT_OK


def cmd_validate(args, out):
    f = _load_frieze(args.file, rebuild=False)
    rep = core.validate(f)
    out.json(rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_DOMAIN


def cmd_diff(args, out):
    f, g = _load_frieze(args.a), _load_frieze(args.b)
    seq = signs.row_difference(f, g, args.k)
    if out.fmt == "csv":
        out.write(sequence_to_csv(seq.values, decimal=not seq.exact))
    else:
        out.json({"k": args.k, "count": signs.sign_changes(seq),
                  "sequence": [encode_scalar(x) for x in seq.values],
                  "zero_convention": signs.ZERO_CONVENTION})
    return EXIT_OK


def cmd_theorem_check(args, out):
    f, g = _load_frieze(args.a), _load_frieze(args.b)
    ks = parse_ints(args.k) if args.k else list(range(1, f.width // 2 + 1))
    results = []
    for k in ks:
        try:
            results.append(signs.problem1_check(f, g, k).to_dict())
        except signs.Degenerate:
            results.append({"k": k, "count": 0, "verdict": "degenerate", "sequence": []})
    out.json({"results": results, "zero_convention": signs.ZERO_CONVENTION})
    return EXIT_OK


def cmd_deform(args, out):
    if args.q.startswith("seed:"):
        rng = np.random.default_rng(int(args.q[5:]))
        inp = deformation.DeformationInput.gaussian(args.n, args.k, rng)
    else:
        inp = deformation.DeformationInput(args.n, tuple(float(x) for x in args.q.split(",")), args.k)
    cs = deformation.c_sequence(inp)
    res = deformation.infinitesimal_check(inp)
    if out.fmt == "csv":
        out.write(sequence_to_csv(cs.c, decimal=True))
    else:
        out.json({"n": inp.n, "k": inp.k, "q": list(inp.q), "c": list(cs.c),
                  "residuals": list(deformation.harmonic_orthogonality_report(cs)),
                  "count": res.count, "verdict": res.verdict})
    return EXIT_OK


def cmd_scan(args, out):
    threads = parse_threads(args.threads)
    code = EXIT_OK
    try:
        if args.scan_kind == "cc":
            ks = parse_ints(args.k) if args.k else list(range(1, max(1, args.width // 2) + 1))
            report = search.scan_cc(args.width, ks, cap=args.cap, workers=threads)
        else:
            ks = parse_ints(args.k)
            report = search.scan_random(args.n, ks, args.samples, args.seed, workers=threads)
    except search.ScanCapExceeded as exc:
        report, code = exc.report, EXIT_DOMAIN
    out.write(report.to_json())
    if report.violations:
        return EXIT_VIOLATION
    return code


def cmd_cuntz(args, out):
    f, g, report = search.cuntz_counterexample()
    if out.pretty:
        out.write(render_pretty(f) + "\n" + render_pretty(g))
        return EXIT_OK
    payload = report.to_dict()
    payload["friezes"] = [frieze_to_json(f), frieze_to_json(g)]
    out.json(payload)
    return EXIT_OK


def cmd_polygon(args, out):
    if args.polygon_kind == "lift":
        out.json(geometry.frieze_to_polygon(_load_frieze(args.file)).to_json())
    elif args.polygon_kind == "random-frieze":
        p = geometry.random_polygon(args.n, np.random.default_rng(args.seed))
        _emit_frieze(geometry.polygon_to_frieze(p), args, out)
    elif args.polygon_kind == "to-frieze":
        p = geometry.ProjectivePolygon.from_json(_read_json(args.file))
        _emit_frieze(geometry.polygon_to_frieze(p), args, out)
    else:
        ns = range(args.n_min, args.n_max + 1)
        ks = parse_ints(args.k) if args.k else None
        rep = geometry.problem2_experiment(ns, args.pairs, args.seed, ks)
        if out.fmt == "csv":
            lines = ["pair,n,k,count"] + [f"{r['pair']},{r['n']},{r['k']},{r['count']}" for r in rep["records"]]
            out.write("\n".join(lines))
        else:
            out.json(rep)
    return EXIT_OK


def cmd_enumerate(args, out):
    lines = []
    for t in triangulations.enumerate_triangulations(args.n, cap=args.cap):
        rec = triangulation_to_json(t)
        if args.friezes and args.n >= 4:
            rec["first_row"] = [int(x) for x in triangulations.triangulation_to_frieze(t).first_row]
        lines.append(json.dumps(rec, sort_keys=True))
    out.write("\n".join(lines))
    return EXIT_OK


# --------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", metavar="FILE")
    common.add_argument("--pretty", action="store_true", help="offset triangular text layout")
    common.add_argument("--row", type=int, help="row exported with --format csv (default 1)")

    p = argparse.ArgumentParser(prog="frieze", description="Frieze patterns and four-sign-change checks.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("build", parents=[common], help="frieze from its first row")
    s.add_argument("--first-row", required=True, help="comma list of integers or p/q")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("from-triangulation", parents=[common], help="Conway-Coxeter frieze of a triangulation")
    s.add_argument("file", nargs="?", help="triangulation JSON ('-' for stdin)")
    s.add_argument("--n", type=int)
    s.add_argument("--diagonals", help="e.g. 1-6,1-5,2-5,3-5")
    s.set_defaults(func=cmd_from_triangulation)

    s = sub.add_parser("validate", parents=[common], help="check a frieze JSON file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("diff", parents=[common], help="row difference of two friezes")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_diff)

    s = sub.add_parser("theorem-check", parents=[common], help="sign-change counts per row")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--k", help="comma list (default 1..width//2)")
    s.set_defaults(func=cmd_theorem_check)

    s = sub.add_parser("deform", parents=[common], help="infinitesimal deformation of the constant frieze")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--q", required=True, help="comma list or seed:S")
    s.set_defaults(func=cmd_deform)

    s = sub.add_parser("scan", parents=[common], help="search for violations")
    ssub = s.add_subparsers(dest="scan_kind", required=True)
    c = ssub.add_parser("cc", parents=[common])
    c.add_argument("--width", type=int, required=True)
    c.add_argument("--k")
    c.add_argument("--cap", type=int)
    c.add_argument("--threads", type=int)
    r = ssub.add_parser("random", parents=[common])
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--k", required=True)
    r.add_argument("--samples", type=int, required=True)
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("--threads", type=int)
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("cuntz", parents=[common], help="reproduce the Cuntz counterexample")
    s.set_defaults(func=cmd_cuntz)

    s = sub.add_parser("polygon", parents=[common], help="projective and equilateral polygons")
    psub = s.add_subparsers(dest="polygon_kind", required=True)
    x = psub.add_parser("lift", parents=[common])
    x.add_argument("file")
    x = psub.add_parser("to-frieze", parents=[common])
    x.add_argument("file")
    x = psub.add_parser("random-frieze", parents=[common])
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--seed", type=int, required=True)
    x = psub.add_parser("experiment", parents=[common])
    x.add_argument("--n-min", type=int, default=5)
    x.add_argument("--n-max", type=int, default=12)
    x.add_argument("--pairs", type=int, default=1000)
    x.add_argument("--seed", type=int, default=0)
    x.add_argument("--k", help="comma list (default all 1..n-2)")
    s.set_defaults(func=cmd_polygon)

    s = sub.add_parser("enumerate", parents=[common], help="list triangulations as JSON lines")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--cap", type=int, default=triangulations.DEFAULT_CAP)
    s.add_argument("--friezes", action="store_true", help="include Conway-Coxeter first rows")
    s.set_defaults(func=cmd_enumerate)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (core.FriezeError, triangulations.CapExceeded, ValueError, ZeroDivisionError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_DOMAIN


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
