"""Command-line front end.

Exit codes: 0 success, 1 malformed invocation, 2 domain error (bad
order, order/multiplicity mismatch, missing derivatives), 3 a
verification check failed.  Results go to stdout, diagnostics to stderr,
and nothing is written to stdout on error.
"""

import argparse
import re
import sys
from fractions import Fraction

from .coeff import coeff_closed
from .errors import DomainError
from .evaluation import EvaluationPoint, evaluate_derivative
from .partition import canonical_mults, max_nonzero_parts, order, partition_count
from .symbolic import expand, render
from .verify import run_verification

# Rendering a million-term document helps nobody; JSON gets more slack
# because it is the machine-readable format.
MAX_TEXT_ORDER = 40
MAX_JSON_ORDER = 60

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _rational(text: str) -> Fraction:
    if not _RATIONAL.match(text):
        raise argparse.ArgumentTypeError(
            f"expected an integer or 'p/q' rational, got {text!r}"
        )
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(piece) for piece in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _rational_list(text: str) -> list[Fraction]:
    return [_rational(piece) for piece in text.split(",")]


def _cmd_expand(args) -> int:
    limit = MAX_JSON_ORDER if args.format == "json" else MAX_TEXT_ORDER
    if args.order > limit:
        raise DomainError(
            f"order {args.order} exceeds the {args.format} limit {limit}"
        )
    print(render(expand(args.order), args.format))
    return 0


def _cmd_coeff(args) -> int:
    mults = canonical_mults(args.mult)
    if order(mults) != args.order:
        raise DomainError(
            f"multiplicities {args.mult} have order {order(mults)}, "
            f"not {args.order}"
        )
    print(coeff_closed(mults))
    return 0


def _cmd_count(args) -> int:
    print(partition_count(args.order))
    return 0


def _cmd_maxparts(args) -> int:
    print(max_nonzero_parts(args.order))
    return 0


def _cmd_eval(args) -> int:
    expansion = expand(args.order)
    point = EvaluationPoint(args.f0, args.derivs, exact=args.exact)
    result = evaluate_derivative(expansion, point)
    if args.exact:
        f0, total = result
        print(f"f0={f0} sum={total}")
    else:
        print(result)
    return 0


def _cmd_verify(args) -> int:
    results = run_verification(args.max_order)
    for res in results:
        if res.ok:
            print(f"PASS {res.name}")
        else:
            print(f"FAIL {res.name}: {res.detail}")
    return 0 if all(res.ok for res in results) else 3


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="expderiv",
        description="Expand, verify, and evaluate nth derivatives of exp(f(x)).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print the order-N expansion")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("coeff", help="coefficient of one monomial")
    p.add_argument("--order", type=int, required=True)
    p.add_argument(
        "--mult",
        type=_int_list,
        required=True,
        metavar="K1,K2,...",
        help="multiplicity of each part size, starting at size 1",
    )
    p.set_defaults(handler=_cmd_coeff)

    p = sub.add_parser("count", help="number of terms at order N")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("maxparts", help="most distinct part sizes at order N")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(handler=_cmd_maxparts)

    p = sub.add_parser("eval", help="evaluate the order-N derivative")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--f0", type=_rational, required=True, help="value of f(x)")
    p.add_argument(
        "--derivs",
        type=_rational_list,
        required=True,
        metavar="D1,D2,...",
        help="derivative values f'(x), f''(x), ... as integers or p/q",
    )
    p.add_argument("--exact", action="store_true", help="rational arithmetic")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("verify", help="run the built-in consistency checks")
    p.add_argument("--max-order", type=int, required=True)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help prints and exits on its own
        return exc.code if isinstance(exc.code, int) else 0
    try:
        return args.handler(args)
    except (DomainError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
