"""
Command line front end.

Structured results are printed as JSON (big integers as strings), class
types in their brace text form, permutations in one-line notation.
``--pretty`` switches to cycle notation and aligned tables.

Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import conjugacy, center, goldens
from .errors import WreathError
from .wreath import (
    DEFAULT_BUDGET, BlockPermutation, compose, enumerate_group, format_one_line,
    parse_class_type, parse_one_line, psi, type_of,
)


def _perm(args, text):
    return BlockPermutation(args.k, parse_one_line(text))


def _type(args, text):
    return parse_class_type(text, args.k)


def _table(rows):
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def cmd_type(args):
    t = type_of(_perm(args, args.perm[0]))
    if args.pretty:
        return _table([("rho", "x(rho)")] + [(str(r), str(p)) for r, p in t.items()])
    return str(t)


def cmd_psi(args):
    w = psi(_perm(args, args.perm[0]))
    if args.pretty:
        return str(w)
    return json.dumps({
        "k": w.k,
        "n": w.n,
        "locals": [list(s.images) for s in w.locals],
        "outer": list(w.outer.images),
    })


def cmd_multiply(args):
    if len(args.perm) < 2:
        raise _Usage("multiply needs at least two --perm values")
    out = _perm(args, args.perm[0])
    for text in args.perm[1:]:
        out = compose(out, _perm(args, text))
    if args.pretty:
        return out.as_permutation().cycle_notation()
    return format_one_line(out)


def cmd_class_size(args):
    return str(conjugacy.class_size(_type(args, args.type)))


def cmd_classes(args):
    types = conjugacy.enumerate_class_types(args.k, args.n)
    if args.pretty:
        return _table([("type", "size")] + [(str(x), str(conjugacy.class_size(x))) for x in types])
    return json.dumps([conjugacy.class_record(x) for x in types])


def cmd_product(args):
    x, y = _type(args, args.x), _type(args, args.y)
    e = center.class_product(x, y, budget=args.budget)
    if args.pretty:
        return _table([("coeff", "class")] + [(str(c), str(z)) for z, c in e.terms.items()])
    return json.dumps({"k": e.k, "n": e.n, "x": str(x), "y": str(y), "terms": e.to_json()})


def cmd_coeff(args):
    x, y, z = _type(args, args.x), _type(args, args.y), _type(args, args.z)
    return str(center.structure_coefficient(x, y, z, budget=args.budget))


def cmd_polyfit(args):
    x, y, h = _type(args, args.x), _type(args, args.y), _type(args, args.h)
    n_range = None
    if args.n_range:
        try:
            lo, hi = (int(v) for v in args.n_range.split(".."))
        except ValueError:
            raise _Usage(f"--n-range expects LO..HI, got {args.n_range!r}") from None
        n_range = range(lo, hi + 1)
    rep = center.polynomiality_report(x, y, h, n_range, budget=args.budget)
    if args.pretty:
        rows = [("n", "c(n)")] + [(str(n), str(c)) for n, c in rep.points]
        return _table(rows) + f"\npoly: {rep.poly}\ndegree {rep.degree}, bound {rep.bound}"
    return json.dumps(rep.to_json())


def cmd_verify_paper(args):
    results = goldens.run_all()
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}: {detail}" for name, ok, detail in results]
    failed = sum(not ok for _, ok, _ in results)
    if failed:
        lines.append(f"{failed} of {len(results)} golden identities failed")
        raise _Failed("\n".join(lines))
    lines.append(f"all {len(results)} golden identities passed")
    return "\n".join(lines)


def cmd_enumerate(args):
    lines = []
    for g in enumerate_group(args.k, args.n, budget=args.budget):
        lines.append(g.as_permutation().cycle_notation() if args.pretty else format_one_line(g))
    return "\n".join(lines)


class _Usage(Exception):
    pass


class _Failed(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="maximum number of group elements to visit")
    common.add_argument("--pretty", action="store_true", help="cycle notation and tables")
    common.add_argument("--error-json", action="store_true",
                        help="report domain errors as JSON on stdout")

    parser = argparse.ArgumentParser(prog="wreathcenter", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = verb("type", cmd_type, "conjugacy type of a block permutation")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--perm", action="append", required=True)

    p = verb("psi", cmd_psi, "wreath coordinates of a block permutation")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--perm", action="append", required=True)

    p = verb("multiply", cmd_multiply, "compose block permutations, rightmost applied first")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--perm", action="append", required=True)

    p = verb("class-size", cmd_class_size, "size of a conjugacy class")
    p.add_argument("--k", type=int)
    p.add_argument("--type", required=True)

    p = verb("classes", cmd_classes, "all conjugacy classes of B(k, n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = verb("product", cmd_product, "expand a product of two class sums")
    p.add_argument("--k", type=int)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)

    p = verb("coeff", cmd_coeff, "one structure coefficient")
    p.add_argument("--k", type=int)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z", required=True)

    p = verb("polyfit", cmd_polyfit, "fit a stable coefficient of proper families as a polynomial in n")
    p.add_argument("--k", type=int)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--n-range", help="inclusive range LO..HI")

    verb("verify-paper", cmd_verify_paper, "check the worked reference identities")

    p = verb("enumerate", cmd_enumerate, "list every element of B(k, n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        text = args.func(args)
    except _Usage as e:
        parser.print_usage(err)
        print(f"wreathcenter {args.verb}: error: {e}", file=err)
        return 2
    except _Failed as e:
        print(str(e), file=out)
        return 1
    except WreathError as e:
        if args.error_json:
            print(json.dumps({"error": type(e).__name__, "message": str(e)}), file=out)
        else:
            print(f"error: {type(e).__name__}: {e}", file=err)
        return 1
    print(text, file=out)
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
