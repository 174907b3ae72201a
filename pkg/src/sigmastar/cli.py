"""Command-line interface: machine files in, deterministic text out.

One subcommand per workbench operation; identical invocations produce
byte-identical output, which is what the golden-file tests diff against.
Strings print verbatim (the empty string prints as an empty line), ranks
and indices print in decimal.  The default step budget is 10**6 and can be
overridden with the WORKBENCH_DEFAULT_BUDGET environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from sigmastar.canonical import Alphabet, rank, unrank
from sigmastar.machine import (
    decode_validate,
    encode_machine,
    format_machine,
    load_machine_file,
    run,
)
from sigmastar.streams import (
    Stream,
    bijection_stream,
    dovetail_stream,
    even_rank_bijection,
    increasing_decider,
    nth_printed,
    print_index,
    unrank_bijection,
)
from sigmastar.orders import (
    chain_search,
    delete_min_from_bijection,
    lex_nn_order,
    order_from_bijection,
)
from sigmastar.diagonal import (
    decision_table,
    diagonal_flip,
    diagonal_machine,
    diagonal_shift,
    verify_decider_library,
)


def default_budget() -> int:
    raw = os.environ.get("WORKBENCH_DEFAULT_BUDGET", "")
    if not raw:
        return 10**6
    try:
        value = int(raw)
        if value < 0:
            raise ValueError
    except ValueError:
        raise ValueError(f"WORKBENCH_DEFAULT_BUDGET must be a natural number, got {raw!r}")
    return value


def _emit(line: str):
    print(line, flush=True)


def _alphabet(args) -> Alphabet:
    return Alphabet.from_text(args.alphabet)


def _machine_stream(path: str, max_rounds) -> Stream:
    return dovetail_stream(load_machine_file(path), max_rounds=max_rounds)


def _stream_from_spec(spec: str, alphabet: Alphabet, max_rounds) -> Stream:
    if spec == "unrank":
        return bijection_stream(unrank_bijection(alphabet))
    if spec == "even-ranks":
        return bijection_stream(even_rank_bijection(alphabet))
    return _machine_stream(spec, max_rounds)


# ---------------------------------------------------------------------------
# Subcommand handlers

def cmd_rank(args) -> int:
    _emit(str(rank(_alphabet(args).word(args.string))))
    return 0


def cmd_unrank(args) -> int:
    if args.number < 0:
        raise ValueError("rank must be non-negative")
    _emit(unrank(args.number, _alphabet(args)).text)
    return 0


def cmd_run_tm(args) -> int:
    m = load_machine_file(args.machine_file)
    outcome = run(m, args.input, args.budget)
    _emit(f"{outcome.verdict.value} {outcome.steps}")
    return 0


def cmd_encode(args) -> int:
    _emit(encode_machine(load_machine_file(args.machine_file)))
    return 0


def cmd_decode(args) -> int:
    m = decode_validate(args.bits)
    if m is None:
        raise ValueError("invalid machine encoding")
    sys.stdout.write(format_machine(m))
    sys.stdout.flush()
    return 0


def cmd_dovetail(args) -> int:
    stream = _machine_stream(args.machine_file, args.max_rounds)
    for w in stream.take(args.max_prints):
        _emit(w.text)
    return 0


def cmd_nth(args) -> int:
    # Accepts `nth <machine-file> <n>` as well as `nth <n> --bijection unrank`.
    if args.maybe_n is None:
        n_text, source = args.source_or_n, None
    else:
        source, n_text = args.source_or_n, args.maybe_n
    try:
        n = int(n_text)
    except ValueError:
        raise ValueError(f"print index must be a number, got {n_text!r}")
    if n < 0:
        raise ValueError("print index must be non-negative")
    if source is not None:
        stream = _machine_stream(source, args.max_rounds)
    elif args.bijection == "unrank":
        stream = bijection_stream(unrank_bijection(_alphabet(args)))
    else:
        raise ValueError("give a machine file or --bijection unrank")
    _emit(nth_printed(stream, n).text)
    return 0


def cmd_index_of(args) -> int:
    stream = _machine_stream(args.machine_file, args.max_rounds)
    w = load_machine_file(args.machine_file).input_alphabet.word(args.string)
    found = print_index(stream, w, args.budget)
    _emit("not_seen" if found is None else str(found))
    return 0


def cmd_decide_increasing(args) -> int:
    alphabet = _alphabet(args)
    stream = _stream_from_spec(args.stream_spec, alphabet, args.max_rounds)
    w = alphabet.word(args.string)
    _emit("accepted" if increasing_decider(stream, w) else "rejected")
    return 0


def cmd_deletemin(args) -> int:
    if args.bijection != "unrank":
        raise ValueError(f"unknown bijection {args.bijection!r}")
    src = delete_min_from_bijection(unrank_bijection(_alphabet(args)))
    for _ in range(args.count):
        _emit(src.delete_min().text)
    return 0


def cmd_chain_search(args) -> int:
    if args.order == "lex-nn":
        order = lex_nn_order()

        def parse(text):
            try:
                x, y = text.split(",")
                return (int(x), int(y))
            except ValueError:
                raise ValueError(f"expected a pair like 1,0 — got {text!r}")

        a, b = parse(args.frm), parse(args.to)
        show = lambda p: f"{p[0]},{p[1]}"
    elif args.order == "unrank":
        alphabet = _alphabet(args)
        order = order_from_bijection(unrank_bijection(alphabet))
        a, b = alphabet.word(args.frm), alphabet.word(args.to)
        show = lambda w: w.text
    else:
        raise ValueError(f"unknown order {args.order!r}")
    result = chain_search(order, a, b, args.budget)
    _emit("exceeded" if result.exceeded else "complete")
    _emit(f"length {result.length}")
    if args.show_chain:
        for element in result.chain:
            _emit(show(element))
    return 0


def cmd_diagonalize(args) -> int:
    paths = sorted(Path(args.library).glob("*.tm"))
    if not paths:
        raise ValueError(f"no .tm files in {args.library}")
    library = [load_machine_file(p) for p in paths]
    verify_decider_library(library, args.budget)
    if args.mode == "machine-x":
        alphabet = library[0].input_alphabet
        if args.input is not None:
            words = [alphabet.word(args.input)]
        else:
            words = [unrank(k, alphabet) for k in range(len(library))]
        for w in words:
            k = rank(w)
            f_k = run(library[k], w, args.budget).decision_bit
            g = diagonal_machine(library, w, args.budget)
            _emit(f"{k} {f_k} {g}")
        return 0
    if args.input is not None:
        raise ValueError("--input only applies to --mode machine-x")
    table = decision_table(library, args.budget)
    g = diagonal_flip(table) if args.mode == "flip" else diagonal_shift(table)
    for k in range(len(table)):
        _emit(f"{k} {table[k](k)} {g(k)}")
    return 0


# ---------------------------------------------------------------------------
# Parser

def build_parser(budget: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigmastar",
        description="Computability workbench: canonical string order, budgeted "
                    "machines, dovetailed enumeration, counting orders, diagonals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    def alphabet_flag(p):
        p.add_argument("--alphabet", default="ab",
                       help="ordered alphabet symbols (default: ab)")

    def budget_flag(p, help_text):
        p.add_argument("--budget", type=int, default=budget, help=help_text)

    def rounds_flag(p):
        p.add_argument("--max-rounds", type=int, default=None,
                       help="stop dovetailing after this many rounds "
                            "(default: unbounded; set it for finite languages)")

    p = add("rank", cmd_rank, "rank of a string in canonical order")
    p.add_argument("string")
    alphabet_flag(p)

    p = add("unrank", cmd_unrank, "string with the given canonical rank")
    p.add_argument("number", type=int)
    alphabet_flag(p)

    p = add("run-tm", cmd_run_tm, "run a machine on an input with a step budget")
    p.add_argument("machine_file")
    p.add_argument("input")
    budget_flag(p, "step budget (default: WORKBENCH_DEFAULT_BUDGET or 10^6)")

    p = add("encode", cmd_encode, "binary encoding of a machine file")
    p.add_argument("machine_file")

    p = add("decode", cmd_decode, "decode and validate a binary machine encoding")
    p.add_argument("bits")

    p = add("dovetail", cmd_dovetail, "enumerate a machine's language by dovetailing")
    p.add_argument("machine_file")
    p.add_argument("--max-prints", type=int, required=True,
                   help="number of printed strings to emit")
    rounds_flag(p)

    p = add("nth", cmd_nth, "the (n+1)-th printed string of an enumeration")
    p.add_argument("source_or_n",
                   help="machine file (then give n next), or n itself with --bijection")
    p.add_argument("maybe_n", nargs="?", default=None)
    p.add_argument("--bijection", choices=["unrank"], default=None,
                   help="enumerate all strings in canonical order instead of a machine")
    alphabet_flag(p)
    rounds_flag(p)

    p = add("index-of", cmd_index_of, "print index of a string in an enumeration")
    p.add_argument("machine_file")
    p.add_argument("string")
    budget_flag(p, "scan at most this many prints (default: WORKBENCH_DEFAULT_BUDGET or 10^6)")
    rounds_flag(p)

    p = add("decide-increasing", cmd_decide_increasing,
            "decide membership against an increasing enumeration")
    p.add_argument("stream_spec",
                   help="'unrank', 'even-ranks', or a machine file to dovetail")
    p.add_argument("string")
    alphabet_flag(p)
    rounds_flag(p)

    p = add("deletemin", cmd_deletemin, "repeatedly delete the minimal element")
    p.add_argument("--bijection", required=True, choices=["unrank"])
    p.add_argument("--count", type=int, required=True)
    alphabet_flag(p)

    p = add("chain-search", cmd_chain_search,
            "grow a descending chain between two elements (gap-finiteness probe)")
    p.add_argument("--order", required=True, choices=["lex-nn", "unrank"])
    p.add_argument("--from", dest="frm", required=True,
                   help="upper endpoint: 'x,y' for lex-nn, a string for unrank")
    p.add_argument("--to", dest="to", required=True, help="lower endpoint")
    p.add_argument("--budget", type=int, required=True,
                   help="chain length above which the search reports exceeded")
    p.add_argument("--show-chain", action="store_true")
    alphabet_flag(p)

    p = add("diagonalize", cmd_diagonalize,
            "diagonal table over a directory of decider machine files")
    p.add_argument("--library", required=True, help="directory of .tm files")
    p.add_argument("--mode", required=True, choices=["flip", "shift", "machine-x"])
    p.add_argument("--input", default=None,
                   help="single input string (machine-x mode only)")
    budget_flag(p, "step budget for library runs")

    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser(default_budget())
        args = parser.parse_args(argv)
        return args.handler(args)
    except KeyboardInterrupt:
        sys.stdout.flush()
        return 130
    except BrokenPipeError:
        return 0
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
