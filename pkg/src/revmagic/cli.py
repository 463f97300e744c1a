"""Command-line entry point.

Exit codes: 0 success, 1 usage or parse error, 2 domain rejection
(e.g. a palindrome), 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog as cat
from . import verify
from .ball import ball_number
from .codes import DEFAULT_CENSUS_BOUND, decompose_repunit_code, repunit
from .digits import DigitString
from .errors import DomainError, RangeError, VerificationError
from .revdiv import (
    DEFAULT_MAX_DIGITS,
    LARGE_MAX_DIGITS,
    Family,
    carry_search,
    closed_form,
    search_reverse_divisors,
    sum_decomposition,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_input(text: str) -> DigitString:
    x = DigitString.parse(text)
    if x.width < 2:
        raise ValueError("need at least two digits")
    return x


def cmd_ball(args) -> int:
    res = ball_number(_parse_input(args.number))
    print(f"x      = {res.x}")
    print(f"x'     = {res.x_reverse}")
    print(f"y      = {res.difference}" + ("  (x' - x)" if res.swapped else ""))
    print(f"y'     = {res.difference_reverse}")
    print(f"B      = {res.ball_value}")
    print(f"code   = {res.code} ({res.code.kind})")
    print(f"trunc  = {res.truncated_code_value}")
    print(f"{res.ball_value} = 99 x {res.truncated_code_value}")
    return EXIT_OK if res.ball_value == 99 * res.truncated_code_value else EXIT_VERIFY


def cmd_code(args) -> int:
    res = ball_number(_parse_input(args.number))
    print(f"{res.code} {res.code.kind}" + (" swapped" if res.swapped else ""))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if not 2 <= args.width <= DEFAULT_CENSUS_BOUND:
        raise RangeError(f"width must be in 2..{DEFAULT_CENSUS_BOUND}")
    sys.stdout.write(cat.render(cat.catalog_for_width(args.width), args.format))
    return EXIT_OK


def cmd_catalog(args) -> int:
    if not 2 <= args.max_width <= DEFAULT_CENSUS_BOUND:
        raise RangeError(f"max width must be in 2..{DEFAULT_CENSUS_BOUND}")
    text = cat.render(cat.catalog(args.max_width), args.format)
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_revdiv(args) -> int:
    n = args.digits
    if n > DEFAULT_MAX_DIGITS and not args.allow_large:
        print(f"error: {n} digits exceeds the default bound of {DEFAULT_MAX_DIGITS}; "
              f"pass --allow-large for up to {LARGE_MAX_DIGITS}", file=sys.stderr)
        return EXIT_USAGE
    records = search_reverse_divisors(n, allow_large=args.allow_large, workers=args.workers)
    closed = set()
    if n >= 4:
        closed = {closed_form(Family.NINE, n).value, closed_form(Family.FOUR, n).value}
    other = {x for x, _ in carry_search(n)}
    found = {r.value for r in records}
    print("digits,value,reverse,k,family,source,check")
    for r in records:
        mark = "closed-form" if r.value in closed else "search-only"
        agree = "agree" if r.value in other else "disagree"
        print(f"{r.digit_count},{r.value},{r.reverse_value},{r.k},{r.family.value},searched,{mark};{agree}")
    missing = closed - found
    for v in sorted(missing):
        print(f"{n},{v},,,,closed-form,missing", file=sys.stderr)
    return EXIT_VERIFY if missing or found != other else EXIT_OK


def cmd_decompose(args) -> int:
    n = args.repunit
    a, c = decompose_repunit_code(n, args.variant)
    b1, b2 = sum_decomposition(n, args.variant)
    d = 99 * repunit(n)
    print(f"code  {'1' * n}0 = {a} ({a.kind}) + {c} ({c.kind})")
    print(f"D     {d} = {b1} + {b2}")
    print(f"      {b1} = 99 x {b1 // 99}, {b2} = 99 x {b2 // 99}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = verify.SUITES + ("all",)
    if args.suite not in names:
        print(f"error: unknown suite {args.suite!r}; choose from {', '.join(names)}", file=sys.stderr)
        return EXIT_USAGE
    ok = True
    for rep in verify.run_suite(args.suite, workers=args.workers):
        passed = sum(c.ok for c in rep.checks)
        print(rep.render())
        print(f"  -> {passed}/{len(rep.checks)} claims hold")
        if "fibonacci" in rep.data:
            counts = rep.data["counts"]
            for w, f in sorted(rep.data["fibonacci"].items()):
                print(f"  note: width {w}: {counts[w]} codes, Fibonacci-sum formula gives {f} (not asserted)")
        ok &= rep.ok
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="revmagic", description="1089 numbers, borrow codes and reverse divisors")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("ball", help="run the 1089 procedure on a number")
    s.add_argument("number")
    s.set_defaults(func=cmd_ball)

    s = sub.add_parser("code", help="print the borrow code of a number")
    s.add_argument("number")
    s.set_defaults(func=cmd_code)

    s = sub.add_parser("enumerate", help="catalog rows for one input width")
    s.add_argument("--width", type=int, required=True)
    s.add_argument("--format", choices=cat.FORMATS, default="csv")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("catalog", help="catalog rows for widths 2..W")
    s.add_argument("--max-width", type=int, required=True)
    s.add_argument("--format", choices=cat.FORMATS, default="csv")
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("revdiv", help="search reverse divisors with a given digit count")
    s.add_argument("--digits", type=int, required=True)
    s.add_argument("--allow-large", action="store_true")
    s.add_argument("--workers", type=int, default=None)
    s.set_defaults(func=cmd_revdiv)

    s = sub.add_parser("decompose", help="split 99 R_n into two 1089 results")
    s.add_argument("--repunit", type=int, required=True)
    s.add_argument("--variant", choices=("complement", "split"), default="complement")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("--suite", default="all")
    s.add_argument("--workers", type=int, default=None)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (RangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
