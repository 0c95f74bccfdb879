"""Command-line front end.

Words are given after ``--`` as comma-separated letters (an empty string is
the empty word).  Ring elements can also be read from JSON with ``@path``, or
``@-`` for standard input.

Exit status: 0 on success, 1 when a verification (``confluence``,
``sl2-check``) fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .configurations import enumerate_configurations
from .ring import RingElement, dim, expand_f, odot, to_f_basis, to_u_basis
from .rewriting import FuelExhausted, Presentation, check_confluence, count_irreducible
from .sl2 import psi
from .words import IndexSet, IndexSetError, Word

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_word(text: str, R: IndexSet) -> Word:
    text = text.strip()
    if not text:
        return Word((), R)
    try:
        letters = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad word {text!r}: expected comma-separated integers") from None
    return Word(letters, R)


def _read_json(arg: str):
    path = arg[1:]
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _operand_element(text: str, R: IndexSet, basis: str) -> RingElement:
    if text.startswith("@"):
        e = RingElement.from_json(_read_json(text))
        if e.index_set != R:
            raise UsageError(f"element is over {e.index_set}, but --index-set is {R}")
        return e
    return RingElement.word(_parse_word(text, R), basis)


def _window(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad window {text!r}: expected <min>:<max>") from None


def _presentation(args) -> Presentation:
    R = args.index_set
    if R.kind != "mod":
        if args.F is not None or args.d is not None:
            raise UsageError("--d and --F require --index-set mod:<2d>")
        return Presentation.free(args.n) if R.kind == "nat" else Presentation.free_bijective(args.n)
    d = R.modulus // 2
    if args.d is not None and args.d != d:
        raise UsageError(f"--d {args.d} disagrees with --index-set mod:{R.modulus}")
    F = None
    if args.F is not None:
        try:
            F = [Fraction(x) for x in args.F.split(",")]
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad --F {args.F!r}: expected comma-separated rationals") from None
    return Presentation.cyclic(args.n, d, F)


def _one_word(args) -> Word:
    if len(args.operands) != 1:
        raise UsageError(f"{args.command} takes exactly one word after --")
    return _parse_word(args.operands[0], args.index_set)


def _element_table(e: RingElement) -> str:
    rows = [(str(c), "(" + ",".join(map(str, w.letters)) + ")") for w, c in e.items()]
    if not rows:
        return "0"
    width = max(len(c) for c, _ in rows)
    prefix = e.basis
    return "\n".join(f"{c.rjust(width)}  {prefix}{w}" for c, w in rows)


def _emit(args, payload, table: str) -> None:
    if args.format == "json":
        text = json.dumps(payload, indent=2)
    else:
        text = table
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def cmd_fuse(args) -> int:
    if len(args.operands) != 2:
        raise UsageError("fuse takes two operands after --")
    a, b = (_operand_element(x, args.index_set, "u") for x in args.operands)
    if a.basis != "u" or b.basis != "u":
        raise UsageError("fuse operands must be in the u basis")
    e = odot(a, b)
    _emit(args, e.to_json(), _element_table(e))
    return EXIT_OK


def cmd_expand(args) -> int:
    e = expand_f(_one_word(args))
    _emit(args, e.to_json(), _element_table(e))
    return EXIT_OK


def _convert(args, source: str) -> int:
    if len(args.operands) != 1:
        raise UsageError(f"{args.command} takes one operand after --")
    a = _operand_element(args.operands[0], args.index_set, source)
    if a.basis != source:
        raise UsageError(f"{args.command} expects an element in the {source} basis")
    e = to_f_basis(a) if source == "u" else to_u_basis(a)
    _emit(args, e.to_json(), _element_table(e))
    return EXIT_OK


def cmd_dim(args) -> int:
    value = dim(_one_word(args), args.n)
    _emit(args, value, str(value))
    return EXIT_OK


def cmd_conf(args) -> int:
    w = _one_word(args)
    confs = [str(c) for c in enumerate_configurations(w)]
    _emit(args, {"word": w.to_json(), "configurations": confs}, "\n".join(confs))
    return EXIT_OK


def cmd_basis_count(args) -> int:
    p = _presentation(args)
    w = _one_word(args)
    value = count_irreducible(w.letters, p)
    _emit(args, value, str(value))
    return EXIT_OK


def cmd_confluence(args) -> int:
    if args.operands:
        raise UsageError("confluence takes no operands")
    p = _presentation(args)
    window = _window(args.window)
    if window is None and p.variant != "cyclic":
        raise UsageError("--window <min>:<max> is required for nat and int index sets")
    report = check_confluence(p, window, args.fuel)
    table = (
        f"presentation  {p}\n"
        f"letters       {','.join(map(str, report.letters))}\n"
        f"overlaps      {report.overlaps}\n"
        f"inclusions    {report.inclusions}\n"
        f"failures      {len(report.failures)}"
    )
    _emit(args, report.to_json(), table)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_sl2_check(args) -> int:
    if args.index_set.kind != "nat":
        raise UsageError("sl2-check works over --index-set nat")
    f = RingElement.word(_one_word(args), "f")
    via_f, via_u = psi(f), psi(to_u_basis(f))
    ok = via_f == via_u
    payload = {"word": f.support()[0].to_json(), "psi_f": via_f.to_json(), "psi_u": via_u.to_json(), "ok": ok}
    table = f"psi(f)       {via_f}\npsi(expand)  {via_u}\n{'ok' if ok else 'MISMATCH'}"
    _emit(args, payload, table)
    return EXIT_OK if ok else EXIT_FAILED


COMMANDS = {
    "fuse": (cmd_fuse, "fusion product of two u-basis elements"),
    "expand": (cmd_expand, "decompose f_w into simples"),
    "to-f": (lambda a: _convert(a, "u"), "rewrite a u-basis element in the f basis"),
    "to-u": (lambda a: _convert(a, "f"), "rewrite an f-basis element in the u basis"),
    "dim": (cmd_dim, "dimension of the simple u_w"),
    "conf": (cmd_conf, "list the configurations of a word"),
    "basis-count": (cmd_basis_count, "number of irreducible monomials of a type"),
    "confluence": (cmd_confluence, "check that all ambiguities resolve"),
    "sl2-check": (cmd_sl2_check, "compare psi(f_w) with psi of its decomposition"),
}


def _index_set_arg(text: str) -> IndexSet:
    try:
        return IndexSet.parse(text)
    except IndexSetError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--index-set", type=_index_set_arg, default=IndexSet("nat"),
                        help="nat, int or mod:<2d> (default nat)")
    common.add_argument("--n", type=int, default=2, help="matrix size (default 2)")
    common.add_argument("--d", type=int, help="must agree with mod:<2d>")
    common.add_argument("--F", help="diagonal of F, comma-separated rationals (mod only)")
    common.add_argument("--window", help="letter window <min>:<max> for nat/int")
    common.add_argument("--fuel", type=int, default=10**6, help="rewrite budget per normal form")
    common.add_argument("--format", choices=["json", "table"],
                        help="output format (default json; table for conf)")
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("operands", nargs="*")

    parser = argparse.ArgumentParser(prog="qgfusion", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "table" if args.command == "conf" else "json"
    if args.n < 2:
        print("error: --n must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    if (args.F is not None or args.d is not None) and args.index_set.kind != "mod":
        print("error: --d and --F require --index-set mod:<2d>", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command][0](args)
    except (UsageError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FuelExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
