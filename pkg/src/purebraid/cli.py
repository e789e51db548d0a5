"""Command line interface.

Exit codes: 0 success (or a predicate that holds), 1 a predicate that fails,
2 usage or syntax errors, 3 input that violates a contract (e.g. a braid
that is not pure).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import enumeration
from .braids import BraidError, BraidSyntaxError, IndexRangeError, parse_braid
from .chords import iter_monomials, magnus, render_diagram
from .combing import comb, expand_singular
from .invariants import WeightFunctional, braids_equal, evaluate, evaluate_singular, n_trivial

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CONTRACT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _word_arg(text: str, strands: int):
    if text == "-":
        text = sys.stdin.read()
    return parse_braid(text, strands)


def _dump(data) -> str:
    return json.dumps(data, separators=(",", ":"))


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return n


def _non_negative(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="purebraid",
        description="Combing, Magnus expansion and finite type invariants of pure braids.")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help_text, fmt=("text", "json")):
        p = sub.add_parser(name, help=help_text)
        if fmt:
            p.add_argument("--format", choices=fmt, default=fmt[0])
        return p

    p = cmd("comb", "print the combed normal form")
    p.add_argument("-k", "--strands", type=_positive, required=True)
    p.add_argument("word")

    p = cmd("magnus", "print the Magnus expansion")
    p.add_argument("-k", "--strands", type=_positive, required=True)
    p.add_argument("-N", "--degree", type=_non_negative, required=True)
    p.add_argument("--diagrams", action="store_true", help="also draw each monomial")
    p.add_argument("word")

    p = cmd("eval", "evaluate a weight functional", fmt=None)
    p.add_argument("-k", "--strands", type=_positive, required=True)
    p.add_argument("-N", "--degree", type=_non_negative,
                   help="order of the invariant (defaults to the order in the file)")
    p.add_argument("--weights", required=True, help="weight functional JSON file")
    p.add_argument("word")

    p = cmd("equal", "decide equality of two pure braids", fmt=None)
    p.add_argument("-k", "--strands", type=_positive, required=True)
    p.add_argument("word1")
    p.add_argument("word2")

    p = cmd("ntrivial", "decide n-triviality", fmt=None)
    p.add_argument("-k", "--strands", type=_positive, required=True)
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("word")

    p = cmd("expand", "expand a singular braid in the group algebra")
    p.add_argument("-k", "--strands", type=_positive, required=True)
    p.add_argument("word")

    p = cmd("dims", "print a dimension table", fmt=("text", "csv", "json"))
    p.add_argument("--kind", choices=sorted(enumeration.KINDS), required=True)
    p.add_argument("--kmin", type=int, default=2)
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--nmin", type=int, default=1)
    p.add_argument("--nmax", type=int, default=10)

    p = cmd("check", "run the combinatorial identity suites", fmt=None)
    p.add_argument("--lmax", type=int, default=10)
    p.add_argument("--mmax", type=int, default=10)
    p.add_argument("--basis-kmax", type=int, default=6)
    p.add_argument("--basis-nmax", type=int, default=8)
    return parser


def _cmd_comb(args, out):
    c = comb(_word_arg(args.word, args.strands))
    if args.format == "json":
        print(_dump({"strands": c.strands, "factors": c.to_json()}), file=out)
    else:
        print(c, file=out)
    return EXIT_OK


def _cmd_magnus(args, out):
    series = magnus(comb(_word_arg(args.word, args.strands)), args.degree)
    if args.format == "json":
        print(_dump(series.to_json()), file=out)
    else:
        print(series, file=out)
    if args.diagrams:
        for mono, v in series.items():
            print(f"\n{v:+d}", file=out)
            print(render_diagram(mono, series.strands), file=out)
    return EXIT_OK


def _cmd_eval(args, out):
    try:
        with open(args.weights) as fh:
            f = WeightFunctional.from_json(json.load(fh))
    except (OSError, KeyError, json.JSONDecodeError) as err:
        raise UsageError(f"cannot read weights: {err}") from None
    if args.degree is not None:
        f = WeightFunctional(f.strands, args.degree, f.weights)
    w = _word_arg(args.word, args.strands)
    value = evaluate_singular(f, w) if w.is_singular else evaluate(f, w)
    print(value, file=out)
    return EXIT_OK


def _predicate(value: bool, out) -> int:
    print("true" if value else "false", file=out)
    return EXIT_OK if value else EXIT_FALSE


def _cmd_equal(args, out):
    u = _word_arg(args.word1, args.strands)
    v = _word_arg(args.word2, args.strands)
    return _predicate(braids_equal(u, v), out)


def _cmd_ntrivial(args, out):
    return _predicate(n_trivial(_word_arg(args.word, args.strands), args.n), out)


def _cmd_expand(args, out):
    e = expand_singular(_word_arg(args.word, args.strands))
    if args.format == "json":
        print(_dump(e.to_json()), file=out)
    else:
        print(e, file=out)
    return EXIT_OK


def _cmd_dims(args, out):
    if args.kmin < 2 or args.kmax < args.kmin:
        raise UsageError("need 2 <= kmin <= kmax")
    nlow = 0 if args.kind == "dimA" else 1
    if args.nmin < nlow or args.nmax < args.nmin:
        raise UsageError(f"need {nlow} <= nmin <= nmax")
    table = enumeration.make_table(args.kind, range(args.kmin, args.kmax + 1),
                                   range(args.nmin, args.nmax + 1))
    if args.format == "json":
        print(_dump(table.to_json()), file=out)
    elif args.format == "csv":
        out.write(table.to_csv())
    else:
        print(table.to_text(), file=out)
    return EXIT_OK


def run_checks(lmax: int, mmax: int, basis_kmax: int, basis_nmax: int) -> list[tuple[str, bool]]:
    results = []
    ok = all(enumeration.lemma53_check(l, m)
             for l in range(2, lmax + 1) for m in range(1, mmax + 1))
    results.append((f"power sums vs surjections, 2 <= l <= {lmax}, 1 <= m <= {mmax}", ok))
    ok = all(enumeration.binomial_transform_check(l, n)
             for l in range(2, lmax + 1) for n in range(1, mmax + 1))
    results.append((f"binomial transform phi/psi, 2 <= l <= {lmax}, 1 <= n <= {mmax}", ok))
    ok = all(enumeration.dim_A(k, n) == enumeration.stirling2(n + k - 1, k - 1)
             == sum(1 for _ in iter_monomials(k, n))
             for k in range(2, basis_kmax + 1) for n in range(0, basis_nmax + 1))
    results.append((f"dim A = Stirling = basis count, k <= {basis_kmax}, n <= {basis_nmax}", ok))
    return results


def _cmd_check(args, out):
    results = run_checks(args.lmax, args.mmax, args.basis_kmax, args.basis_nmax)
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}", file=out)
    return EXIT_OK if all(ok for _, ok in results) else EXIT_FALSE


COMMANDS = {
    "comb": _cmd_comb,
    "magnus": _cmd_magnus,
    "eval": _cmd_eval,
    "equal": _cmd_equal,
    "ntrivial": _cmd_ntrivial,
    "expand": _cmd_expand,
    "dims": _cmd_dims,
    "check": _cmd_check,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, BraidSyntaxError, IndexRangeError) as exc:
        print(f"purebraid {args.command}: {exc}", file=err)
        return EXIT_USAGE
    except BraidError as exc:
        print(f"purebraid {args.command}: {exc}", file=err)
        return EXIT_CONTRACT
    except ValueError as exc:
        print(f"purebraid {args.command}: {exc}", file=err)
        return EXIT_CONTRACT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
