"""Command-line front end: ``diskmetrics {eval,grid,schwarz,selftest}``.

Exit codes: 0 success, 2 parse/usage error, 3 domain error, 4 failed check.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .errors import DiskMetricsError, OutsideDisk, ParseError
from .hyperbolic import check_in_disk
from .oracle import parallel_map, vam_bruteforce
from .selftest import run_selftest, schwarz_sweep
from .vam import ROUTES, applicable_routes, max_pairwise_discrepancy, route_function, vam

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_CHECK = 4

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_IMAG_RE = re.compile(rf"^(?P<im>[+-]?(?:{_NUM})?)i$")
_FULL_RE = re.compile(rf"^(?P<re>[+-]?{_NUM})(?:(?P<sign>[+-])(?P<im>{_NUM})?i)?$")


def _unit(text: str) -> float:
    return -1.0 if text == "-" else 1.0 if text in ("", "+") else float(text)


def parse_complex(text: str) -> complex:
    """Parse ``"x+yi"``, ``"x-yi"`` (ASCII or Unicode minus), ``"x"`` or ``"yi"``; spaces are ignored."""
    s = text.replace("\u2212", "-").replace(" ", "")
    m = _IMAG_RE.match(s)
    if m:
        return complex(0.0, _unit(m.group("im")))
    m = _FULL_RE.match(s)
    if m is None:
        raise ParseError(f"malformed complex literal {text!r}")
    im = 0.0
    if m.group("sign") is not None:
        im = _unit(m.group("sign") + (m.group("im") or ""))
    return complex(float(m.group("re")), im)


def _point_json(z: complex | None):
    return None if z is None else [z.real, z.imag]


def evaluate(a: complex, b: complex, routes: str = "all") -> dict:
    """Evaluate the requested routes and the oracle for one pair; JSON-ready."""
    check_in_disk(a, b)
    out: dict = {"a": _point_json(a), "b": _point_json(b), "routes": {}}
    if a == b:
        out["routes"]["coincident"] = vam(a, b).to_dict()
        out["oracle"] = {"v": 0.0, "argmax": None}
        out["max_discrepancy"] = 0.0
        return out
    if routes == "all":
        names = applicable_routes(a, b)
    else:
        names = [n.strip() for n in routes.split(",") if n.strip()]
        unknown = [n for n in names if n not in ROUTES]
        if unknown:
            raise ParseError(f"unknown route(s) {unknown}; choose from {list(ROUTES)}")
    values = []
    for name in names:
        try:
            res = route_function(name)(a, b)
        except DiskMetricsError as exc:
            out["routes"][name] = {"error": type(exc).__name__}
            continue
        out["routes"][name] = res.to_dict()
        values.append(res.value)
    rep = vam_bruteforce(a, b)
    out["oracle"] = {"v": rep.value, "argmax": _point_json(rep.argmax)}
    out["max_discrepancy"] = max_pairwise_discrepancy(values)
    return out


def _render_eval_text(report: dict) -> str:
    lines = [f"{k} = {report[k][0]:.17g}{report[k][1]:+.17g}i" for k in ("a", "b")]
    for name, r in report["routes"].items():
        if "error" in r:
            lines.append(f"{name:<14} not applicable ({r['error']})")
            continue
        z = r.get("extremal_point")
        where = f"  at {z[0]:.17g}{z[1]:+.17g}i" if z else ""
        lines.append(f"{name:<14} v = {r['v']:.17g}{where}")
    o = report["oracle"]
    lines.append(f"{'oracle':<14} v = {o['v']:.17g}")
    lines.append(f"max_discrepancy = {report['max_discrepancy']:.3e}")
    return "\n".join(lines)


def cmd_eval(args) -> int:
    a = parse_complex(args.a)
    b = parse_complex(args.b)
    report = evaluate(a, b, args.route)
    if args.format == "json":
        print(json.dumps(report))
    else:
        print(_render_eval_text(report))
    return EXIT_OK


def grid_csv(b: complex, n: int, extent: float = 1.0) -> str:
    """CSV text of ``v(a, b)`` over an ``n x n`` grid on ``[-extent, extent]^2``, interior points only."""
    if n < 2:
        raise ParseError("grid needs n >= 2")
    check_in_disk(b)
    # integer numerators keep the axis exactly symmetric about 0
    axis = [extent * (2 * k - (n - 1)) / (n - 1) for k in range(n)]
    points = [complex(x, y) for x in axis for y in axis if abs(complex(x, y)) < 1.0]
    values = parallel_map(lambda a: vam(a, b).value, points)
    rows = ["re,im,v"] + [f"{a.real:.17g},{a.imag:.17g},{v:.17g}" for a, v in zip(points, values)]
    return "\n".join(rows) + "\n"


def cmd_grid(args) -> int:
    text = grid_csv(parse_complex(args.b), args.n, args.extent)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            Path(args.out).write_bytes(text.encode("ascii"))
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
    return EXIT_OK


def cmd_schwarz(args) -> int:
    if not args.k >= 1:
        raise ParseError(f"--k must be >= 1, got {args.k}")
    rep = schwarz_sweep(args.k, args.map, args.samples, args.seed)
    print(f"map={rep['map']} K={rep['K']:g} samples={rep['samples']} seed={rep['seed']}")
    print(f"violations: {rep['violations']}")
    print(f"max lhs/rhs: {rep['max_ratio']:.17g}")
    print(f"min slack:   {rep['min_slack']:.17g}")
    for ratio, slack, a, b, fa, fb in rep["witnesses"]:
        print(f"  witness ratio={ratio:.12f} a={a:.6f} b={b:.6f} f(a)={fa:.6f} f(b)={fb:.6f}")
    return EXIT_OK if rep["violations"] == 0 else EXIT_CHECK


def cmd_selftest(args) -> int:
    if args.samples < 1:
        raise ParseError("--samples must be >= 1")
    results = run_selftest(args.samples, args.seed, args.tol)
    for r in results:
        print(r.line())
    ok = all(r.passed for r in results)
    print("selftest: " + ("pass" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_CHECK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="diskmetrics", description="Visual angle metric of the unit disk.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate every route for one pair")
    e.add_argument("--a", required=True, help='point such as "0.3+0i"')
    e.add_argument("--b", required=True)
    e.add_argument("--route", default="all", help="'all' or a comma list of " + ",".join(ROUTES))
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.set_defaults(func=cmd_eval)

    g = sub.add_parser("grid", help="CSV of v(a, b) over a grid of a")
    g.add_argument("--b", required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--extent", type=float, default=1.0, help="grid covers [-extent, extent]^2")
    g.add_argument("--out", default=None, help="output path (default stdout)")
    g.set_defaults(func=cmd_grid)

    s = sub.add_parser("schwarz", help="seeded sweep of the quasiregular Schwarz bound")
    s.add_argument("--k", type=float, required=True)
    s.add_argument("--map", choices=("mobius", "stretch"), required=True)
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--seed", type=int, default=42)
    s.set_defaults(func=cmd_schwarz)

    t = sub.add_parser("selftest", help="run every invariant suite")
    t.add_argument("--samples", type=int, default=1000)
    t.add_argument("--seed", type=int, default=42)
    t.add_argument("--tol", type=float, default=1e-9, help="route-agreement tolerance")
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OutsideDisk, DiskMetricsError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
