"""Desk-scale diagonalization: build a function no table entry can be.

Everything here is finite and executable: a function table is a list of
total callables on the naturals, and the diagonal constructions return a
new function that provably differs from entry k at argument k.

    flipped diagonal   g(n) = 1 - f_n(n)   for tables of 0/1-valued functions
    shifted diagonal   g(n) = f_n(n) + 1   for tables of natural-valued functions
    diagonal machine   route input w to the machine indexed by rank(w) and
                       answer the opposite

The same two arithmetic tricks cover every listing that can be read as a
function table: decision functions directly, languages through their
characteristic functions, machine libraries through their verdict bits.
The infinite versions of these arguments are proofs, not programs; what is
checkable here is the pointwise disagreement on the diagonal, and the test
suite checks it exhaustively over each table.

The diagonal machine only makes sense over genuine deciders, so the
library contract (halts on every input within the step budget) is enforced
by `verify_decider_library`, a pre-flight sweep over all short strings; a
breach raises DeciderContractError rather than producing a silent wrong
bit.
"""

from __future__ import annotations

from typing import Callable, Sequence

from sigmastar.canonical import CanonicalString, rank, strings_of_length_at_most, unrank
from sigmastar.machine import RunOutcome, TuringMachine, Verdict, run

# A finite prefix of an enumeration of total functions on the naturals.
FunctionTable = Sequence[Callable[[int], int]]


class DeciderContractError(RuntimeError):
    """A machine presented as a decider failed to halt within its budget."""


def diagonal_flip(table: FunctionTable) -> Callable[[int], int]:
    """g with g(n) = 1 - table[n](n); differs from every entry on the diagonal.

    Entries must behave as decision functions at their diagonal argument;
    a non-0/1 value raises ValueError, an argument beyond the table raises
    IndexError (the finite table defines g only up to its size).
    """

    def g(n: int) -> int:
        if not 0 <= n < len(table):
            raise IndexError(f"diagonal argument {n} outside table of size {len(table)}")
        v = table[n](n)
        if v not in (0, 1):
            raise ValueError(f"table entry {n} returned non-boolean {v!r} on the diagonal")
        return 1 - v

    return g


def diagonal_shift(table: FunctionTable) -> Callable[[int], int]:
    """g with g(n) = table[n](n) + 1: the diagonal trick for ranges beyond 0/1."""

    def g(n: int) -> int:
        if not 0 <= n < len(table):
            raise IndexError(f"diagonal argument {n} outside table of size {len(table)}")
        return table[n](n) + 1

    return g


def decision_function(m: TuringMachine, budget: int) -> Callable[[int], int]:
    """The decision function of a decider, indexed by canonical rank:
    n -> verdict bit of m on the rank-n string over m's input alphabet."""
    alphabet = m.input_alphabet

    def f(n: int) -> int:
        outcome = run(m, unrank(n, alphabet), budget)
        if not outcome.halted:
            raise DeciderContractError(
                f"machine did not halt within {budget} steps on rank-{n} input"
            )
        return outcome.decision_bit

    return f


def decision_table(machines: Sequence[TuringMachine], budget: int) -> list[Callable[[int], int]]:
    return [decision_function(m, budget) for m in machines]


def diagonal_machine(deciders: Sequence[TuringMachine], w: CanonicalString,
                     budget: int, runner: Callable[..., RunOutcome] = run) -> int:
    """Answer the opposite of the decider selected by w's canonical rank.

    Computes i = rank(w), runs deciders[i] on w, and returns 1 minus its
    verdict bit, so the result differs from decider k on the rank-k string
    for every k the library covers.  `runner` is injectable so tests can
    observe which machine was consulted.
    """
    i = rank(w)
    if i >= len(deciders):
        raise IndexError(f"rank {i} of {w.text!r} outside library of size {len(deciders)}")
    outcome = runner(deciders[i], w, budget)
    if outcome.verdict is Verdict.OUT_OF_BUDGET:
        raise DeciderContractError(
            f"library machine {i} broke the decider contract on {w.text!r}"
        )
    return 1 - outcome.decision_bit


def verify_decider_library(machines: Sequence[TuringMachine], budget: int,
                           max_length: int = 6) -> None:
    """Pre-flight sweep: every library machine must halt, within budget, on
    every input of length <= max_length.  Raises DeciderContractError naming
    the first offender; returns None when the sweep is clean."""
    for idx, m in enumerate(machines):
        for w in strings_of_length_at_most(m.input_alphabet, max_length):
            if not run(m, w, budget).halted:
                raise DeciderContractError(
                    f"library machine {idx} did not halt on {w.text!r} within {budget} steps"
                )
