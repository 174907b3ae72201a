"""The bundled machine corpus.

Twelve small machines over the input alphabet {a, b}, written as golden
text files.  They cover the behaviors the rest of the library needs to
demonstrate: fast accepters and rejecters, a finite language, a machine
that loops on half its inputs, and accepters whose running time is
quadratic (uniformly, or only on a-initial strings, which makes their
fair enumeration print out of canonical order).
"""

from functools import lru_cache
from importlib import resources

from sigmastar.machine import TuringMachine, parse_machine_text

CORPUS = (
    "accept_all",
    "reject_all",
    "even_length",
    "loop_on_odd",
    "member_finite",
    "slow_quadratic",
    "slow_on_a",
    "starts_with_b",
    "ends_with_a",
    "contains_b",
    "parity_b_even",
    "all_a",
)

# Every corpus machine halts on every input except loop_on_odd.
DECIDERS = tuple(n for n in CORPUS if n != "loop_on_odd")

# Machines whose language keeps a constant fraction of all strings, so an
# enumeration reaches many prints in few rounds.  all_a is infinite but
# sparse (one member per length) and reject_all/member_finite are finite.
DENSE_INFINITE = (
    "accept_all",
    "even_length",
    "loop_on_odd",
    "slow_quadratic",
    "slow_on_a",
    "starts_with_b",
    "ends_with_a",
    "contains_b",
    "parity_b_even",
)


def sample_source(name: str) -> str:
    """Raw text of a corpus machine file."""
    if name not in CORPUS:
        raise KeyError(f"unknown sample machine {name!r}; choose from {CORPUS}")
    return (resources.files(__package__) / f"{name}.tm").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def load_sample(name: str) -> TuringMachine:
    return parse_machine_text(sample_source(name), source=f"{name}.tm")


def all_samples() -> dict[str, TuringMachine]:
    return {name: load_sample(name) for name in CORPUS}
