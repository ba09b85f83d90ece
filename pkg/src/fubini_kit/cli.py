"""Command-line front end: ``python3 -m fubini_kit <subcommand> ...``.

Exit status is 0 on success, 1 when a ``verify`` check fails and 2 for
invalid input.  Output is a pure function of the arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from .fps import default_order
from .identities import REGISTRY, SUITES, run_identity, run_suite
from .kernel import BiPoly, X, Y, binomial, format_rational, parse_rational
from .polyfam import PolyFamily, coefficient_rows, family, frobenius_euler
from .stirling import stirling1, stirling2, stirling2_degenerate, stirling2_r
from .stochastic import moments_report
from .transform import (SequenceWindow, backward_fill, bernoulli, chen, forward_fill,
                        fubini_inverse, fubini_transform, ones)

SCHEMA_VERSION = 1

SUBCOMMANDS = ("stirling", "poly", "matrix", "transform", "bernoulli", "verify", "moments")
DEFAULT_FORMAT = {"poly": "text", "verify": "json", "moments": "json"}

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    """Bad flags or values; reported on stderr with exit status 2."""


@dataclass
class RunConfig:
    subcommand: str
    params: Dict[str, object] = field(default_factory=dict)
    output_format: str = "csv"
    seed: Optional[int] = None
    out: Optional[str] = None
    args: Optional[argparse.Namespace] = field(default=None, repr=False)


@dataclass
class Report:
    status: int
    text: str


# -- value rendering ----------------------------------------------------------

def render(value) -> str:
    if isinstance(value, BiPoly):
        return str(value)
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    return str(value)


def csv_text(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([render(v) for v in row])
    return buf.getvalue()


def json_text(payload: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=2) + "\n"


# -- flag parsing -------------------------------------------------------------

def rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def ring_arg(text: str, symbol: str):
    """A rational, or the indeterminate itself when ``text`` names it."""
    if text.strip() == symbol:
        return X if symbol == "x" else Y
    return rational_arg(text)


def sequence_arg(text: str, length: Optional[int]) -> SequenceWindow:
    """``builtin:ones``, ``builtin:chen``, a comma-separated literal or a file path."""
    if text.startswith("builtin:"):
        name = text[len("builtin:"):]
        builders: Dict[str, Callable[[int], SequenceWindow]] = {"ones": ones, "chen": chen}
        if name not in builders:
            raise InputError(f"unknown builtin sequence {name!r}; choose ones or chen")
        if length is None or length < 1:
            raise InputError(f"builtin:{name} needs a positive --rows length")
        return builders[name](length)
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    items = [s for s in text.replace("\n", ",").split(",") if s.strip()]
    if not items:
        raise InputError("empty sequence")
    return SequenceWindow(tuple(rational_arg(s) for s in items))


def need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise InputError(f"{args.subcommand} requires --{name.replace('_', '-')}")
    return value


def check_index(name: str, value: int):
    if value < 0:
        raise InputError(f"index out of range: --{name} must be nonnegative, got {value}")


# -- subcommands --------------------------------------------------------------

def cmd_stirling(args, fmt: str) -> Report:
    n_max = need(args, "n")
    check_index("n", n_max)
    kind = args.family or "second"
    if kind == "first":
        value = stirling1
    elif kind == "second":
        value = stirling2
    elif kind == "r":
        r = args.r if args.r is not None else 0
        check_index("r", r)
        value = lambda n, k: stirling2_r(n, k, r)
    elif kind == "degenerate":
        lam = need(args, "lam")
        value = lambda n, k: stirling2_degenerate(n, k, lam)
    else:
        raise InputError(f"unknown Stirling family {kind!r}; choose first, second, r or degenerate")
    ks = None
    if args.k is not None:
        check_index("k", args.k)
        ks = [args.k]
    rows = [(n, k, value(n, k)) for n in range(n_max + 1)
            for k in (ks if ks is not None else range(n + 1))]
    params = {"family": kind, "n": n_max}
    if kind == "r":
        params["r"] = args.r or 0
    if kind == "degenerate":
        params["lambda"] = render(args.lam)
    if fmt == "json":
        return Report(EXIT_OK, json_text({"params": params, "entries": [
            {"n": n, "k": k, "value": render(v)} for n, k, v in rows]}))
    if fmt == "text":
        lines = []
        for n in range(n_max + 1):
            lines.append(" ".join(render(v) for m, k, v in rows if m == n))
        return Report(EXIT_OK, "\n".join(lines) + "\n")
    return Report(EXIT_OK, csv_text(("n", "k", "value"), rows))


def cmd_poly(args, fmt: str) -> Report:
    n = need(args, "n")
    check_index("n", n)
    name = args.family or PolyFamily.GENERALIZED_FUBINI.value
    if name == PolyFamily.FROBENIUS_EULER.value:
        u, y0 = need(args, "x"), need(args, "y")
        if isinstance(u, BiPoly) or isinstance(y0, BiPoly):
            raise InputError("frobenius-euler is evaluated pointwise: give rational --x and --y")
        value = frobenius_euler(n, u, y0)
        params = {"family": name, "n": n, "x": render(u), "y": render(y0)}
        if fmt == "json":
            return Report(EXIT_OK, json_text({"params": params, "value": render(value)}))
        if fmt == "csv":
            return Report(EXIT_OK, csv_text(("n", "x", "y", "value"), [(n, u, y0, value)]))
        return Report(EXIT_OK, render(value) + "\n")
    try:
        poly = family(name, n, args.lam)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.x1 is not None or args.x2 is not None:
        return two_point(args, n, name, fmt)
    params = {"family": name, "n": n}
    if name == PolyFamily.DEGENERATE_GENERALIZED_FUBINI.value:
        params["lambda"] = render(args.lam if args.lam is not None else 0)
    value = None
    if args.x is not None or args.y is not None:
        x0 = X if args.x is None else args.x
        y0 = Y if args.y is None else args.y
        value = poly.eval(x0, y0)
        params.update(x=render(x0), y=render(y0))
    if fmt == "json":
        payload = {"params": params, "polynomial": str(poly),
                   "coefficients": [{"deg_x": i, "deg_y": j, "coeff": render(c)}
                                    for _, i, j, c in coefficient_rows(n, poly)]}
        if value is not None:
            payload["value"] = render(value)
        return Report(EXIT_OK, json_text(payload))
    if fmt == "csv":
        if value is not None:
            return Report(EXIT_OK, csv_text(("n", "x", "y", "value"),
                                            [(n, params["x"], params["y"], value)]))
        return Report(EXIT_OK, csv_text(("n", "deg_x", "deg_y", "coeff"),
                                        coefficient_rows(n, poly)))
    return Report(EXIT_OK, render(poly if value is None else value) + "\n")


def two_point(args, n: int, name: str, fmt: str) -> Report:
    """Both sides of the two-point convolution at ``(x1, x2, y)``."""
    if name != PolyFamily.GENERALIZED_FUBINI.value:
        raise InputError("--x1/--x2 apply to the fubini-gen family only")
    x1, x2 = need(args, "x1"), need(args, "x2")
    y = Y if args.y is None else args.y
    if x1 == x2:
        raise InputError("--x1 and --x2 must differ")
    F = [family(name, k) for k in range(n + 1)]
    lhs = sum((binomial(n, k) * F[k].eval(x1, y) * F[n - k].eval(x2, y) for k in range(n + 1)),
              Fraction(0))
    rhs = (x2 * F[n].eval(x2, y) - x1 * F[n].eval(x1, y)) / (x2 - x1)
    params = {"family": name, "n": n, "x1": render(x1), "x2": render(x2), "y": render(y)}
    if fmt == "json":
        return Report(EXIT_OK, json_text({"params": params, "convolution": render(lhs),
                                          "difference_quotient": render(rhs), "equal": lhs == rhs}))
    if fmt == "csv":
        return Report(EXIT_OK, csv_text(("n", "convolution", "difference_quotient"), [(n, lhs, rhs)]))
    return Report(EXIT_OK, f"{render(lhs)}\n{render(rhs)}\n")


def cmd_matrix(args, fmt: str) -> Report:
    x = X if args.x is None else args.x
    y = Y if args.y is None else args.y
    if args.initial is not None and args.final is not None:
        raise InputError("give either --initial or --final, not both")
    if args.final is not None:
        boundary = sequence_arg(args.final, args.rows)
        if isinstance(x, BiPoly):
            raise InputError("backward fill needs a rational --x")
        grid = backward_fill(boundary, x, y)
        source = "final"
    else:
        boundary = sequence_arg(args.initial or "builtin:ones", args.rows)
        grid = forward_fill(boundary, x, y)
        source = "initial"
    shown = grid.size if args.rows is None else min(args.rows, grid.size)
    entries = [(n, m, v) for (n, m), v in grid.items() if n < shown]
    params = {"source": source, "length": grid.size, "rows": shown,
              "x": render(x), "y": render(y)}
    if fmt == "json":
        return Report(EXIT_OK, json_text({
            "params": params,
            "entries": [{"n": n, "m": m, "value": render(v)} for n, m, v in entries],
            "column0": [render(v) for v in grid.column(0)],
            "row0": [render(v) for v in grid.row(0)],
        }))
    if fmt == "text":
        lines = [" | ".join(render(v) for v in grid.row(n)) for n in range(shown)]
        return Report(EXIT_OK, "\n".join(lines) + "\n")
    return Report(EXIT_OK, csv_text(("n", "m", "value"), entries))


def cmd_transform(args, fmt: str) -> Report:
    z = need(args, "z")
    if args.initial is not None and args.final is not None:
        raise InputError("give either --initial (forward) or --final (inverse), not both")
    if args.final is not None:
        seq = sequence_arg(args.final, args.rows)
        out = fubini_inverse(seq, z)
        direction = "inverse"
    else:
        seq = sequence_arg(need(args, "initial"), args.rows)
        out = fubini_transform(seq, z)
        direction = "forward"
    rows = list(enumerate(out))
    params = {"direction": direction, "z": render(z), "length": len(seq)}
    if fmt == "json":
        return Report(EXIT_OK, json_text({"params": params,
                                          "input": [render(v) for v in seq],
                                          "output": [render(v) for v in out]}))
    if fmt == "text":
        return Report(EXIT_OK, " ".join(render(v) for v in out) + "\n")
    return Report(EXIT_OK, csv_text(("n", "value"), rows))


def cmd_bernoulli(args, fmt: str) -> Report:
    n = need(args, "n")
    check_index("n", n)
    rows = list(enumerate(bernoulli(n)))
    if fmt == "json":
        return Report(EXIT_OK, json_text({"params": {"n": n},
                                          "entries": [{"n": k, "value": render(b)} for k, b in rows]}))
    if fmt == "text":
        return Report(EXIT_OK, "".join(f"B_{k} = {render(b)}\n" for k, b in rows))
    return Report(EXIT_OK, csv_text(("n", "B_n"), rows))


def cmd_verify(args, fmt: str) -> Report:
    seed = args.seed if args.seed is not None else 0
    order = args.order
    if order is None and "FUBINI_KIT_DEFAULT_ORDER" in os.environ:
        order = default_order()
    if order is not None and order < 1:
        raise InputError(f"index out of range: --order must be positive, got {order}")
    if args.identity is not None and args.suite is not None:
        raise InputError("give either --identity or --suite, not both")
    if args.identity is not None:
        if args.identity not in REGISTRY:
            raise InputError(f"unknown identity {args.identity!r}; see --help for names")
        results = [run_identity(args.identity, order, seed)]
    else:
        suite = args.suite or "all"
        if suite not in SUITES:
            raise InputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
        results = run_suite(suite, order, seed)
    passed = all(r.passed for r in results)
    status = EXIT_OK if passed else EXIT_FAILED
    if fmt == "text":
        lines = [f"{'PASS' if r.passed else 'FAIL'} {r.identity} ({r.cases} cases)" for r in results]
        return Report(status, "\n".join(lines) + "\n")
    if fmt == "csv":
        rows = [(r.identity, r.order, "true" if r.passed else "false", r.cases) for r in results]
        return Report(status, csv_text(("identity", "order", "pass", "cases"), rows))
    if args.identity is not None:
        return Report(status, json_text(results[0].to_dict()))
    return Report(status, json_text({"suite": args.suite or "all", "seed": seed,
                                     "order": order, "pass": passed,
                                     "results": [r.to_dict() for r in results]}))


def cmd_moments(args, fmt: str) -> Report:
    n = need(args, "n")
    check_index("n", n)
    x, y = need(args, "x"), need(args, "y")
    if isinstance(x, BiPoly) or isinstance(y, BiPoly):
        raise InputError("moments need rational --x and --y")
    if args.mc is not None and args.mc <= 0:
        raise InputError(f"--mc must be a positive sample count, got {args.mc}")
    report = moments_report(n, x, y, mc_samples=args.mc or 0,
                            seed=args.seed if args.seed is not None else 0)
    if fmt == "csv":
        return Report(EXIT_OK, csv_text(tuple(report), [tuple(report.values())]))
    if fmt == "text":
        return Report(EXIT_OK, "".join(f"{k}: {v}\n" for k, v in report.items()))
    return Report(EXIT_OK, json_text(report))


COMMANDS = {
    "stirling": cmd_stirling,
    "poly": cmd_poly,
    "matrix": cmd_matrix,
    "transform": cmd_transform,
    "bernoulli": cmd_bernoulli,
    "verify": cmd_verify,
    "moments": cmd_moments,
}


# -- argument parser ----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fubini-kit",
                     description="Exact Stirling, Fubini and transform-matrix computations.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    helps = {
        "stirling": "Stirling triangles (first, second, r, degenerate)",
        "poly": "polynomial families, symbolic or evaluated",
        "matrix": "trapezoid of the transform matrix",
        "transform": "Fubini transform of a sequence and its inverse",
        "bernoulli": "Bernoulli numbers from the transform matrix",
        "verify": "run named identity checks",
        "moments": "geometric-moment representation",
    }
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, help=helps[name])
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--r", type=int)
        p.add_argument("--lambda", dest="lam", type=rational_arg)
        p.add_argument("--x", type=lambda s: ring_arg(s, "x"))
        p.add_argument("--y", type=lambda s: ring_arg(s, "y"))
        p.add_argument("--z", type=rational_arg)
        p.add_argument("--x1", type=rational_arg)
        p.add_argument("--x2", type=rational_arg)
        p.add_argument("--order", type=int)
        p.add_argument("--rows", type=int)
        p.add_argument("--initial")
        p.add_argument("--final")
        p.add_argument("--family")
        p.add_argument("--identity", help="one of: " + ", ".join(REGISTRY))
        p.add_argument("--suite", help="one of: " + ", ".join(SUITES))
        p.add_argument("--seed", type=int)
        p.add_argument("--format", choices=("csv", "json", "text"))
        p.add_argument("--mc", type=int)
        p.add_argument("--out")
    return parser


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    if args.rows is not None and args.rows < 1:
        raise InputError(f"index out of range: --rows must be positive, got {args.rows}")
    fmt = args.format or DEFAULT_FORMAT.get(args.subcommand, "csv")
    params = {k: v for k, v in vars(args).items() if v is not None}
    return RunConfig(args.subcommand, params, fmt, args.seed, args.out, args)


def run(config: RunConfig) -> Report:
    try:
        return COMMANDS[config.subcommand](config.args, config.output_format)
    except InputError as exc:
        return Report(EXIT_USAGE, f"error: {exc}\n")
    except (ValueError, TypeError, IndexError, ZeroDivisionError) as exc:
        return Report(EXIT_USAGE, f"error: {exc}\n")


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = parse_config(argv)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    report = run(config)
    if report.status == EXIT_USAGE:
        sys.stderr.write(report.text)
    elif config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(report.text)
    else:
        sys.stdout.write(report.text)
    return report.status


if __name__ == "__main__":
    sys.exit(main())
