"""Command-line front end.

Exit codes: 0 for an affirmative answer, 1 for a negative answer (with a
witness where one applies), 2 for usage and input errors.
"""
from __future__ import annotations

import argparse
import sys

from .acceptors import accepts
from .errors import InputError
from .inclusion import equiv, include
from .rightcon import right_con
from .textio import format_word, parse_acceptor, parse_word, serialize_automaton


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _load(path):
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    try:
        return parse_acceptor(text)
    except InputError as e:
        raise InputError(f"{path}: {e}") from None


def cmd_include(args):
    verdict = include(_load(args.left), _load(args.right))
    if verdict.included:
        print("YES")
        return 0
    print(f"NO {format_word(verdict.witness)}")
    return 1


def cmd_equiv(args):
    verdict = equiv(_load(args.left), _load(args.right))
    if verdict.equivalent:
        print("YES")
        return 0
    print(f"NO {verdict.direction} {format_word(verdict.witness)}")
    return 1


def cmd_member(args):
    a = _load(args.acceptor)
    w = parse_word(args.word)
    for pos, sym in enumerate(w.prefix + w.period):
        if sym not in a.alphabet:
            raise InputError(f"unknown symbol {sym!r} at position {pos} of {args.word!r}")
    if accepts(a, w):
        print("ACCEPT")
        return 0
    print("REJECT")
    return 1


def cmd_rightcon(args):
    result = right_con(_load(args.acceptor))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(serialize_automaton(result.automaton))
    if args.witnesses:
        with open(args.witnesses, "w", encoding="utf-8") as f:
            f.writelines(format_word(w) + "\n" for w in result.distinguishers)
    print(result.automaton.state_count)
    return 0


def build_parser():
    parser = _Parser(prog="omegaincl", description="Inclusion and equivalence of deterministic omega acceptors.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("include", help="is L(A1) a subset of L(A2)?")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_include)

    p = sub.add_parser("equiv", help="is L(A1) equal to L(A2)?")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("member", help="is the word u(v) accepted?")
    p.add_argument("acceptor")
    p.add_argument("word")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("rightcon", help="build the right-congruence automaton")
    p.add_argument("acceptor")
    p.add_argument("--out")
    p.add_argument("--witnesses")
    p.set_defaults(func=cmd_rightcon)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, OSError) as e:
        print(f"omegaincl: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
