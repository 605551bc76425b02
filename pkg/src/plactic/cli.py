"""``plactic`` command line.

Exit status: 0 on success or a true verdict, 1 on a false verdict or a
failed verification, 2 on usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .algebra import AlgebraElement, parse_element, parse_expression, reduce_expression
from .formats import (
    ParseError,
    format_rowword,
    format_tableau,
    format_word,
    parse_row,
    parse_rowword,
    parse_tableau,
    parse_word,
    tableau_to_json,
)
from .gsverify import DEFAULT_BUDGET, DEFAULT_SAMPLE_MAX_LEN, BudgetExceeded, check_ordering, verify_gs_basis
from .knuth import FuelExhausted, congruence_class, oracle_equivalent
from .schensted import multiply_rows_closed_form, multiply_rows_schensted
from .tableau import (
    LEFTMOST,
    RIGHTMOST,
    enumerate_tableaux,
    normal_form_letters,
    normal_form_rowword,
    plactic_equivalent,
    tableau_multiply,
)


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_positive, required=True, help="alphabet size")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="plactic", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"plactic {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normal-form", parents=[common], help="tableau of a letter word or row word")
    p.add_argument("word")
    p.add_argument("--rows", action="store_true", help="read the input as a row word")
    p.add_argument("--strategy", choices=("rightmost", "leftmost"), default="rightmost")

    p = sub.add_parser("equiv", parents=[common], help="plactic equivalence via normal forms")
    p.add_argument("u")
    p.add_argument("v")

    p = sub.add_parser("mul-rows", parents=[common], help="product of two rows as a two-row tableau")
    p.add_argument("w")
    p.add_argument("z")
    p.add_argument("--algorithm", choices=("closed-form", "schensted"), default="closed-form")

    p = sub.add_parser("tab-mul", parents=[common], help="product of two tableaux")
    p.add_argument("t1")
    p.add_argument("t2")

    p = sub.add_parser("enumerate", parents=[common], help="all tableaux with a given number of letters")
    p.add_argument("--size", type=_non_negative, required=True)

    p = sub.add_parser("oracle-equiv", parents=[common], help="equivalence by Knuth-relation search")
    p.add_argument("u")
    p.add_argument("v")

    p = sub.add_parser("oracle-class", parents=[common], help="congruence class by Knuth-relation search")
    p.add_argument("word")

    p = sub.add_parser("verify-gs", parents=[common], help="exhaustive composition check on row triples")
    p.add_argument("--max-len", type=_positive, required=True)
    p.add_argument("--samples", type=_non_negative, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--sample-max-len", type=_positive, default=DEFAULT_SAMPLE_MAX_LEN)
    p.add_argument("--workers", type=_positive, default=None, help="default: $PLACTIC_THREADS or 1")

    p = sub.add_parser("check-order", parents=[common], help="every nontrivial relation lowers the row word")
    p.add_argument("--max-len", type=_positive, required=True)

    p = sub.add_parser("alg-mul", parents=[common], help="product of plactic algebra elements")
    p.add_argument("elements", nargs="+")

    p = sub.add_parser("alg-reduce", parents=[common], help="normal form of a combination of row words")
    p.add_argument("expression")
    p.add_argument("--zero", action="store_true", help="report whether the expression reduces to zero")
    return parser


def _emit(args, text: str, payload) -> None:
    out = json.dumps(payload, indent=2, sort_keys=True) if args.format == "json" else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _verdict(args, value: bool, extra: Optional[dict] = None) -> int:
    _emit(args, "true" if value else "false", {"result": value, **(extra or {})})
    return 0 if value else 1


def run(args) -> int:
    n = args.n
    cmd = args.command

    if cmd == "normal-form":
        if args.rows:
            strategy = LEFTMOST if args.strategy == "leftmost" else RIGHTMOST
            t = normal_form_rowword(parse_rowword(args.word, n), n, strategy)
        else:
            t = normal_form_letters(parse_word(args.word, n), n)
        _emit(args, format_tableau(t), tableau_to_json(t))
        return 0

    if cmd == "equiv":
        u, v = parse_word(args.u, n), parse_word(args.v, n)
        return _verdict(args, plactic_equivalent(u, v, n))

    if cmd == "mul-rows":
        w, z = parse_row(args.w, n), parse_row(args.z, n)
        mul = multiply_rows_schensted if args.algorithm == "schensted" else multiply_rows_closed_form
        prod = mul(w, z)
        payload = {
            "n": n,
            "x": None if prod.x is None else list(prod.x.counts),
            "y": list(prod.y.counts),
        }
        _emit(args, format_rowword(prod.rows), payload)
        return 0

    if cmd == "tab-mul":
        t = tableau_multiply(parse_tableau(args.t1, n), parse_tableau(args.t2, n))
        _emit(args, format_tableau(t), tableau_to_json(t))
        return 0

    if cmd == "enumerate":
        tabs = list(enumerate_tableaux(n, args.size))
        _emit(
            args,
            "\n".join(format_tableau(t) for t in tabs),
            {"n": n, "size": args.size, "count": len(tabs), "tableaux": [tableau_to_json(t)["rows"] for t in tabs]},
        )
        return 0

    if cmd == "oracle-equiv":
        u, v = parse_word(args.u, n), parse_word(args.v, n)
        return _verdict(args, oracle_equivalent(u, v))

    if cmd == "oracle-class":
        cls = congruence_class(parse_word(args.word, n))
        words = [format_word(w, n) for w in cls.sorted_words()]
        _emit(args, "\n".join(words), {"n": n, "size": len(words), "words": words})
        return 0

    if cmd == "verify-gs":
        report = verify_gs_basis(
            n,
            args.max_len,
            samples=args.samples,
            seed=args.seed,
            budget=args.budget,
            sample_max_len=args.sample_max_len,
            workers=args.workers,
        )
        _emit(args, report.summary(), report.to_dict())
        return 0 if report.ok else 1

    if cmd == "check-order":
        result = check_ordering(n, args.max_len)
        ok = result["failed"] == 0
        text = (
            f"{result['nontrivial']} nontrivial relations on {result['rows']} rows, "
            f"{result['failed']} fail to decrease: {'ok' if ok else 'FAILED'}"
        )
        _emit(args, text, {"n": n, "max_len": args.max_len, "ok": ok, **result})
        return 0 if ok else 1

    if cmd == "alg-mul":
        product = AlgebraElement.one(n)
        for text in args.elements:
            product = product * parse_element(text, n)
        _emit(args, str(product), product.to_json())
        return 0

    if cmd == "alg-reduce":
        element = reduce_expression(parse_expression(args.expression, n), n)
        if args.zero:
            return _verdict(args, not element, {"element": element.to_json()})
        _emit(args, str(element), element.to_json())
        return 0

    raise UsageError(f"unknown command {cmd}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except ParseError as exc:
        print(f"plactic {args.command}: parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, BudgetExceeded, FuelExhausted, ValueError) as exc:
        print(f"plactic {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
