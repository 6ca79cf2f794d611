"""Command-line interface: ``kroncomp <subcommand> ...``.

JSON on stdout is the machine interface; ``--human`` switches to plain text.
Every option can also be given as an environment variable ``KRONCOMP_<DEST>``,
e.g. ``KRONCOMP_PRIME=3`` or ``KRONCOMP_HUMAN=1``; the command line wins.

Exit codes: 0 success, 1 verification or cross-check failure, 2 parse or flag
error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import random
import sys
from typing import Optional, Sequence

from . import __version__
from .algebra import (FuelExhausted, WordTooLong, default_engine, parse_word,
                      q0_alpha_normal_form, straighten_word, verify_presentations)
from .exactq import parse_rational
from .monoid import canonical_decomposition, describe_generic, monoid_normalize
from .roots import DELTA, DimVector, Prei, Prep, hom_ext_generic, parse_dim

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
ENV_PREFIX = "KRONCOMP_"
_TRUE = {"1", "true", "yes", "on"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(args, payload, human: Optional[str] = None):
    if args.human and human is not None:
        print(human)
    else:
        print(json.dumps(payload, ensure_ascii=False, separators=(",", ":")))


# -- subcommands --------------------------------------------------------------------

def _cmd_reduce(args) -> int:
    word = parse_word(args.word)
    if args.basis == "alpha":
        if args.at_q is not None:
            raise UsageError("--basis alpha is a q=0 basis; it cannot be combined with --at-q")
        m = q0_alpha_normal_form(word)
        g = m.grade
        _emit(args, {"grade": [g.i, g.j], "alpha": m.to_json(), "coeff": 1}, str(m))
        return EXIT_OK
    if args.q0 and args.at_q not in (None, 0):
        raise UsageError("--q0 and --at-q disagree")
    q = 0 if args.q0 else args.at_q
    x = straighten_word(word, max_word_length=args.max_len, q=q)
    _emit(args, x.to_json(), str(x))
    if args.memo_stats:
        print(json.dumps({"memo": default_engine(q).memo_stats()}), file=sys.stderr)
    return EXIT_OK


def _cmd_monoid(args) -> int:
    x = monoid_normalize(parse_word(args.word))
    _emit(args, x.to_json(), f"{x}: {describe_generic(x).text}")
    return EXIT_OK


def _cmd_candecomp(args) -> int:
    roots = canonical_decomposition(DimVector(args.a_i, args.a_j))
    labels = [str(r) for r in roots]
    _emit(args, labels, " + ".join(labels))
    return EXIT_OK


def _cmd_ext_table(args) -> int:
    roots = [Prep(m) for m in range(args.max + 1)] + [DELTA] + \
        [Prei(n) for n in range(args.max, -1, -1)]
    rows = []
    for x in roots:
        for y in roots:
            hom, ext = hom_ext_generic(x, y)
            rows.append({"x": str(x), "y": str(y), "hom": hom, "ext": ext})
    width = max(len(str(r)) for r in roots) + 1
    lines = ["hom/ext".ljust(width) + "".join(str(y).rjust(width + 2) for y in roots)]
    for x in roots:
        cells = "".join(f"{'%d/%d' % hom_ext_generic(x, y):>{width + 2}}" for y in roots)
        lines.append(str(x).ljust(width) + cells)
    _emit(args, rows, "\n".join(lines))
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = verify_presentations()
    if args.human:
        status = "ok" if report.ok else f"FAILED at {report.failure.name}"
        text = f"{len(report.checked)} identities checked: {status}"
        if not report.ok:
            text += f"\n  lhs = {report.failure.lhs}\n  rhs = {report.failure.rhs}"
        text += "".join(f"\nnote: {n}" for n in report.notes)
        print(text)
    else:
        _emit(args, report.to_json())
    return EXIT_OK if report.ok else EXIT_FAIL


@contextlib.contextmanager
def _budget(p: int, limit: Optional[int]):
    from .oracle.hall import _BUDGET, set_budget
    before = _BUDGET[p]
    if limit is not None:
        set_budget(p, limit)
    try:
        yield
    finally:
        set_budget(p, before)


def _cmd_oracle_verify(args) -> int:
    from . import oracle
    max_dim = parse_dim(args.max_dim) if args.max_dim else None
    with _budget(args.prime, args.budget):
        report = oracle.run_oracle(args.prime, max_dim, args.relation)
    if args.human:
        lines = [f"F_{report.p}, grades up to {report.max_dim}: {len(report.checks)} checks, "
                 f"{len(report.failures)} failed"]
        lines += [f"  FAIL {c.name} {c.detail}".rstrip() for c in report.failures]
        print("\n".join(lines))
    else:
        _emit(args, report.to_json())
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_oracle_hallnum(args) -> int:
    from .oracle import class_from_id, hall_number
    with _budget(args.prime, args.budget):
        X, M, N = (class_from_id(t, args.prime) for t in (args.X, args.M, args.N))
        value = hall_number(M, N, X)
    _emit(args, {"prime": args.prime, "X": X.id, "M": M.id, "N": N.id, "hall_number": value},
          f"F^{X}_{{{M},{N}}} = {value}")
    return EXIT_OK


def _cmd_crosscheck(args) -> int:
    from .surject import cross_check
    rng = random.Random(args.seed)
    bad = 0
    for _ in range(args.count):
        word = "".join(rng.choice("ij") for _ in range(rng.randint(1, args.max_len)))
        rep = cross_check(word)
        bad += not rep.images_agree
        if args.human:
            flag = "ok " if rep.images_agree else "BAD"
            print(f"{flag} {word}: {rep.algebra_normal_form} -> {rep.monoid_normal_form}")
        else:
            print(json.dumps(rep.to_json(), separators=(",", ":")))
    summary = {"checked": args.count, "mismatches": bad, "seed": args.seed}
    _emit(args, summary, f"{args.count} words, {bad} mismatches")
    return EXIT_FAIL if bad else EXIT_OK


# -- parser -------------------------------------------------------------------------

def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return value


def _prime(text: str) -> int:
    value = int(text)
    if value not in (2, 3):
        raise argparse.ArgumentTypeError("only primes 2 and 3 are supported")
    return value


def _rational(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand's copy of a flag from resetting the top-level one
    common = _Parser(add_help=False)
    common.add_argument("--human", action="store_true", default=argparse.SUPPRESS,
                        help="plain-text output instead of JSON")
    common.add_argument("--memo-stats", action="store_true", default=argparse.SUPPRESS,
                        help="print straightening memo statistics to stderr")

    parser = _Parser(prog="kroncomp", parents=[common],
                     description="Composition algebra and monoid of the Kronecker quiver.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("reduce", parents=[common], help="straighten a word into the PBW basis")
    p.add_argument("word", help='word in i and j, e.g. "i^3 j i j^2"')
    p.add_argument("--at-q", type=_rational, default=None, help="specialise q to a rational")
    p.add_argument("--q0", action="store_true", help="work at q = 0")
    p.add_argument("--basis", choices=("pbw", "alpha"), default="pbw",
                   help="alpha: the q=0 basis of products of (alpha) monomials")
    p.add_argument("--max-len", type=_positive, default=16, help="word-length cap (default 16)")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("monoid", parents=[common], help="composition-monoid normal form")
    p.add_argument("word")
    p.set_defaults(func=_cmd_monoid)

    p = sub.add_parser("candecomp", parents=[common], help="canonical decomposition of (a_i, a_j)")
    p.add_argument("a_i", type=_nonneg)
    p.add_argument("a_j", type=_nonneg)
    p.set_defaults(func=_cmd_candecomp)

    p = sub.add_parser("ext-table", parents=[common], help="generic hom/ext between Schur roots")
    p.add_argument("--max", type=_nonneg, default=3, help="largest P/I index (default 3)")
    p.set_defaults(func=_cmd_ext_table)

    p = sub.add_parser("verify", parents=[common], help="run the identity suite")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="brute-force Hall algebra over F_p")
    osub = p.add_subparsers(dest="oracle_command", required=True, parser_class=_Parser)
    o = osub.add_parser("verify", parents=[common], help="check relations and words against F_p")
    o.add_argument("--prime", type=_prime, default=2)
    o.add_argument("--max-dim", default=None, help='largest grade, e.g. "3,3"')
    o.add_argument("--relation", type=int, choices=range(1, 7), default=None)
    o.add_argument("--budget", type=_positive, default=None, help="representation-count budget")
    o.set_defaults(func=_cmd_oracle_verify)
    o = osub.add_parser("hallnum", parents=[common], help="one Hall number F^X_{MN}")
    o.add_argument("--prime", type=_prime, default=2)
    o.add_argument("--X", required=True, help='class id "a_i,a_j:hex"')
    o.add_argument("--M", required=True)
    o.add_argument("--N", required=True)
    o.add_argument("--budget", type=_positive, default=None)
    o.set_defaults(func=_cmd_oracle_hallnum)

    p = sub.add_parser("crosscheck", parents=[common],
                       help="compare the q=0 algebra and the monoid on random words")
    p.add_argument("--count", type=_nonneg, default=100)
    p.add_argument("--max-len", type=_positive, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_crosscheck)
    return parser


def _iter_parsers(parser: argparse.ArgumentParser):
    yield parser
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for child in action.choices.values():
                yield from _iter_parsers(child)


def apply_env_defaults(parser: argparse.ArgumentParser, environ=None) -> None:
    """Use ``KRONCOMP_<DEST>`` variables as defaults for every option."""
    environ = os.environ if environ is None else environ
    for prs in _iter_parsers(parser):
        for action in prs._actions:
            if not action.option_strings or action.dest in ("help", "version"):
                continue
            raw = environ.get(ENV_PREFIX + action.dest.upper())
            if raw is None:
                continue
            if isinstance(action, argparse._StoreTrueAction):
                value = raw.strip().lower() in _TRUE
            else:
                try:
                    value = action.type(raw) if action.type else raw
                except (argparse.ArgumentTypeError, ValueError) as exc:
                    raise UsageError(f"{ENV_PREFIX}{action.dest.upper()}: {exc}") from None
                if action.choices is not None and value not in action.choices:
                    raise UsageError(f"{ENV_PREFIX}{action.dest.upper()}: invalid choice {raw!r}")
            action.default = value


def main(argv: Optional[Sequence[str]] = None) -> int:
    from .oracle.hall import BudgetExceeded
    try:
        parser = build_parser()
        apply_env_defaults(parser)
        args = parser.parse_args(argv)
        for flag in ("human", "memo_stats"):
            if not hasattr(args, flag):
                setattr(args, flag, False)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (WordTooLong, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FuelExhausted as exc:
        print(f"engine error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
