"""Shared test utilities: seeded generators and brute-force oracles."""

import random

from sigmastar.canonical import Alphabet, CanonicalString
from sigmastar.machine import LEFT, RIGHT, TuringMachine, Verdict, run


def random_machine(rng: random.Random, max_states: int = 8,
                   max_symbols: int = 4) -> TuringMachine:
    """A random well-formed machine: blank-first tape alphabet, all
    non-blank symbols as input, no rules out of the halting states."""
    nq = rng.randint(2, max_states)
    ng = rng.randint(2, max_symbols)
    states = tuple(f"q{i}" for i in range(nq))
    syms = ("_",) + tuple(chr(ord("a") + i) for i in range(ng - 1))
    accept = rng.randrange(nq)
    reject = rng.choice([i for i in range(nq) if i != accept])
    start = rng.randrange(nq)
    rules = []
    for q in range(nq):
        if q in (accept, reject):
            continue
        for a in range(ng):
            if rng.random() < 0.8:
                rules.append((q, a, rng.randrange(nq), rng.randrange(ng),
                              rng.choice([LEFT, RIGHT])))
    return TuringMachine(states, syms[1:], syms, "_", start, accept, reject,
                         tuple(rules))


def random_word(rng: random.Random, m: TuringMachine, max_len: int = 8) -> str:
    return "".join(rng.choices(m.input_symbols, k=rng.randint(0, max_len)))


def accepted_strings(m: TuringMachine, max_len: int, budget: int) -> set[CanonicalString]:
    """Direct-run oracle: which strings of length <= max_len does m accept
    within the budget."""
    from sigmastar.canonical import strings_of_length_at_most

    return {
        w for w in strings_of_length_at_most(m.input_alphabet, max_len)
        if run(m, w, budget).verdict is Verdict.ACCEPTED
    }


def brute_force_order(alphabet: Alphabet, max_len: int) -> list[CanonicalString]:
    """Independent enumeration of the canonical order: lengths ascending,
    itertools.product supplies the within-length digit order."""
    import itertools

    out = []
    k = alphabet.size
    for n in range(max_len + 1):
        for digits in itertools.product(range(k), repeat=n):
            out.append(alphabet.from_indices(digits))
    return out
