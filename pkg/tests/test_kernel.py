"""Differential tests: the compiled stepper must match the pure one exactly."""

import random

import pytest

from helpers import random_machine, random_word
from sigmastar import stepper
from sigmastar.machine import stepper_tables, _tape_indices

needs_compiled = pytest.mark.skipif(
    "compiled" not in stepper.available_backends(),
    reason="compiled stepper not built",
)


def advance_with(backend, m, word, budget):
    tape = bytearray(_tape_indices(m, word))
    state, head, steps = backend(stepper_tables(m), tape, 0, m.start, 0, budget)
    return state, head, steps, bytes(tape).rstrip(bytes([m.blank_index]))


@needs_compiled
def test_backends_agree_on_corpus(corpus):
    backends = stepper.available_backends()
    for m in corpus.values():
        for text in ["", "a", "b", "ab", "bbabab", "aaaaaaa"]:
            for budget in (0, 1, 2, 7, 50, 1000):
                results = {
                    name: advance_with(fn, m, text, budget)
                    for name, fn in backends.items()
                }
                assert results["pure"] == results["compiled"], (text, budget)


@needs_compiled
def test_backends_agree_on_random_machines():
    rng = random.Random(4242)
    backends = stepper.available_backends()
    for _ in range(150):
        m = random_machine(rng)
        word = random_word(rng, m)
        budget = rng.choice([0, 1, 3, 17, 256, 5000])
        assert advance_with(backends["pure"], m, word, budget) == \
            advance_with(backends["compiled"], m, word, budget)


@needs_compiled
def test_tape_growth_matches(corpus):
    # slow_quadratic walks to the right edge repeatedly; loop_on_odd
    # bounces in place.  Both must grow and read the tape identically.
    backends = stepper.available_backends()
    for name in ("slow_quadratic", "loop_on_odd"):
        m = corpus[name]
        for budget in (10, 100, 10_000):
            assert advance_with(backends["pure"], m, "ababa", budget) == \
                advance_with(backends["compiled"], m, "ababa", budget)
