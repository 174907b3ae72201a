"""Deterministic single-tape machines: representation, budgeted runs, encoding.

Tape geometry is semi-infinite: cells are indexed by naturals, a left move at
cell 0 stays at cell 0, and unwritten cells read as the blank symbol.  A
missing transition is an implicit move to the reject state that writes
nothing and does not move the head (it still costs one step).  Because
looping is not observable, every run takes an explicit step budget and
reports `out_of_budget` instead of hanging.

The binary encoding of a machine is a bit string with unary-coded fields:

    header       0^|Q| 1 0^|G| 1 0^(start+1) 1 0^(accept+1) 1 0^(reject+1) 1 1
    transition   0^(q+1) 1 0^(a+1) 1 0^(q'+1) 1 0^(b+1) 1 0^d      d: 1=L 2=R
    machine      header transition (1 1 transition)*

with transitions in strictly increasing (q, a) order, so equal machines
encode identically and every valid encoding re-encodes to itself.  The
encoding captures states, tape symbols, the three distinguished states and
the rule table *by index only*; symbol names and the input/blank designation
are presentation details, which is why structural machine equality
(`same_structure`) compares indices, not names.  `decode_validate` is the
decision procedure for "is this bit string a well-formed machine": it
returns the machine or None, never raises.
"""

from __future__ import annotations

import enum
from array import array
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence, Union

from sigmastar.canonical import Alphabet, AlphabetError, CanonicalString
from sigmastar import stepper

LEFT = "L"
RIGHT = "R"

# (state, read symbol, next state, written symbol, direction)
Rule = tuple[int, int, int, int, str]

WordLike = Union[CanonicalString, str, Sequence[str]]


class MachineFormatError(ValueError):
    """Malformed textual machine description; message cites the line."""


class Verdict(enum.Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"
    OUT_OF_BUDGET = "out_of_budget"


@dataclass(frozen=True)
class RunOutcome:
    verdict: Verdict
    steps: int

    @property
    def halted(self) -> bool:
        return self.verdict is not Verdict.OUT_OF_BUDGET

    @property
    def decision_bit(self) -> int:
        """1 for accepted, 0 for rejected; undefined when out of budget."""
        if self.verdict is Verdict.ACCEPTED:
            return 1
        if self.verdict is Verdict.REJECTED:
            return 0
        raise ValueError("machine ran out of budget; no decision bit")


@dataclass(frozen=True)
class Configuration:
    """Instantaneous description: state, sparse tape, head position, step count.

    The tape maps cell index -> tape-symbol index and never stores blanks.
    """

    state: int
    tape: dict[int, int]
    head: int
    steps: int


@dataclass(frozen=True)
class TuringMachine:
    states: tuple[str, ...]
    input_symbols: tuple[str, ...]
    tape_symbols: tuple[str, ...]
    blank: str
    start: int
    accept: int
    reject: int
    rules: tuple[Rule, ...]

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(sorted(self.rules)))
        nq, ng = len(self.states), len(self.tape_symbols)
        if len(set(self.states)) != nq or nq == 0:
            raise ValueError("states must be non-empty and distinct")
        if len(set(self.tape_symbols)) != ng:
            raise ValueError("tape symbols must be distinct")
        if self.blank not in self.tape_symbols:
            raise ValueError(f"blank {self.blank!r} not a tape symbol")
        if not self.input_symbols:
            raise ValueError("input alphabet must be non-empty")
        bad = set(self.input_symbols) - (set(self.tape_symbols) - {self.blank})
        if bad:
            raise ValueError(f"input symbols must be non-blank tape symbols: {bad}")
        for idx, name in ((self.start, "start"), (self.accept, "accept"), (self.reject, "reject")):
            if not 0 <= idx < nq:
                raise ValueError(f"{name} state index {idx} out of range")
        if self.accept == self.reject:
            raise ValueError("accept and reject states must differ")
        seen = set()
        for q, a, q2, b, d in self.rules:
            if not (0 <= q < nq and 0 <= q2 < nq and 0 <= a < ng and 0 <= b < ng):
                raise ValueError(f"rule {(q, a, q2, b, d)} references undeclared indices")
            if q in (self.accept, self.reject):
                raise ValueError(f"rule leaves halting state {self.states[q]}")
            if d not in (LEFT, RIGHT):
                raise ValueError(f"direction must be L or R, got {d!r}")
            if (q, a) in seen:
                raise ValueError(f"duplicate rule for state/symbol {(q, a)}")
            seen.add((q, a))

    @classmethod
    def build(cls, states, input_symbols, tape_symbols, blank, start, accept, reject,
              transitions: Mapping[tuple[int, int], tuple[int, int, str]]) -> "TuringMachine":
        rules = tuple((q, a, q2, b, d) for (q, a), (q2, b, d) in transitions.items())
        return cls(tuple(states), tuple(input_symbols), tuple(tape_symbols),
                   blank, start, accept, reject, rules)

    @property
    def blank_index(self) -> int:
        return self.tape_symbols.index(self.blank)

    @property
    def input_alphabet(self) -> Alphabet:
        return Alphabet(self.input_symbols)

    @property
    def transition_map(self) -> dict[tuple[int, int], tuple[int, int, str]]:
        return {(q, a): (q2, b, d) for q, a, q2, b, d in self.rules}

    def same_structure(self, other: "TuringMachine") -> bool:
        """Index-level equality: exactly the structure the bit encoding carries."""
        return (
            len(self.states) == len(other.states)
            and len(self.tape_symbols) == len(other.tape_symbols)
            and (self.start, self.accept, self.reject)
            == (other.start, other.accept, other.reject)
            and self.rules == other.rules
        )


def _tape_indices(m: TuringMachine, w: WordLike) -> list[int]:
    """Input word -> list of tape-symbol indices; rejects foreign symbols."""
    if isinstance(w, CanonicalString):
        names = w.symbols
    else:
        names = tuple(w)
    allowed = set(m.input_symbols)
    for s in names:
        if s not in allowed:
            raise AlphabetError(f"input symbol {s!r} not in input alphabet {m.input_symbols}")
    return [m.tape_symbols.index(s) for s in names]


def start_configuration(m: TuringMachine, w: WordLike) -> Configuration:
    blank = m.blank_index
    tape = {i: v for i, v in enumerate(_tape_indices(m, w)) if v != blank}
    return Configuration(state=m.start, tape=tape, head=0, steps=0)


def step(m: TuringMachine, c: Configuration) -> Configuration:
    """One transition applied to c.  The caller must not step a halted config."""
    if c.state in (m.accept, m.reject):
        raise ValueError("cannot step a halted configuration")
    blank = m.blank_index
    sym = c.tape.get(c.head, blank)
    rule = m.transition_map.get((c.state, sym))
    if rule is None:
        return Configuration(m.reject, dict(c.tape), c.head, c.steps + 1)
    q2, b, d = rule
    tape = dict(c.tape)
    if b == blank:
        tape.pop(c.head, None)
    else:
        tape[c.head] = b
    head = c.head + (1 if d == RIGHT else -1)
    if head < 0:
        head = 0
    return Configuration(q2, tape, head, c.steps + 1)


@lru_cache(maxsize=256)
def stepper_tables(m: TuringMachine):
    """Flat rule tables consumed by the stepper kernels.

    Missing (state, symbol) pairs get mov=0 / nxt=reject, the implicit-reject
    sentinel.  Tape symbols are stored in a bytearray, hence the 256 limit.
    """
    nq, ng = len(m.states), len(m.tape_symbols)
    if ng > 256:
        raise ValueError("stepper kernels support at most 256 tape symbols")
    nxt = array("q", [m.reject] * (nq * ng))
    wrt = array("q", [0] * (nq * ng))
    mov = array("b", [0] * (nq * ng))
    for q, a, q2, b, d in m.rules:
        i = q * ng + a
        nxt[i] = q2
        wrt[i] = b
        mov[i] = 1 if d == RIGHT else -1
    return (nxt, wrt, mov, ng, m.accept, m.reject, m.blank_index)


def _verdict(m: TuringMachine, state: int) -> Verdict:
    if state == m.accept:
        return Verdict.ACCEPTED
    if state == m.reject:
        return Verdict.REJECTED
    return Verdict.OUT_OF_BUDGET


def run(m: TuringMachine, w: WordLike, budget: int) -> RunOutcome:
    """Run m on w from the start configuration for at most `budget` steps."""
    if budget < 0:
        raise ValueError("budget must be non-negative")
    tape = bytearray(_tape_indices(m, w))
    state, _, steps = stepper.advance(stepper_tables(m), tape, 0, m.start, 0, budget)
    return RunOutcome(_verdict(m, state), steps)


def advance_configuration(m: TuringMachine, c: Configuration, budget: int) -> Configuration:
    """Kernel-backed equivalent of iterating `step` until halt or `budget`."""
    blank = m.blank_index
    size = max([c.head + 1] + [i + 1 for i in c.tape])
    tape = bytearray([blank]) * size
    for i, v in c.tape.items():
        tape[i] = v
    state, head, steps = stepper.advance(stepper_tables(m), tape, c.head, c.state, c.steps, budget)
    sparse = {i: v for i, v in enumerate(tape) if v != blank}
    return Configuration(state, sparse, head, steps)


# ---------------------------------------------------------------------------
# Binary encoding

def encode_machine(m: TuringMachine) -> str:
    header = (
        "0" * len(m.states) + "1"
        + "0" * len(m.tape_symbols) + "1"
        + "0" * (m.start + 1) + "1"
        + "0" * (m.accept + 1) + "1"
        + "0" * (m.reject + 1) + "11"
    )
    parts = []
    for q, a, q2, b, d in m.rules:  # already sorted by (q, a)
        parts.append(
            "0" * (q + 1) + "1"
            + "0" * (a + 1) + "1"
            + "0" * (q2 + 1) + "1"
            + "0" * (b + 1) + "1"
            + "0" * (1 if d == LEFT else 2)
        )
    return header + "11".join(parts)


class _BitReader:
    def __init__(self, bits: str):
        self.bits = bits
        self.pos = 0

    def at_end(self) -> bool:
        return self.pos >= len(self.bits)

    def zeros(self) -> int:
        n = 0
        while self.pos < len(self.bits) and self.bits[self.pos] == "0":
            n += 1
            self.pos += 1
        return n

    def take_one(self) -> bool:
        """Consume a '1'; False at end of string or on a '0'."""
        if self.pos < len(self.bits) and self.bits[self.pos] == "1":
            self.pos += 1
            return True
        return False


def _synthetic_names(nq: int, ng: int) -> tuple[tuple[str, ...], tuple[str, ...]]:
    states = tuple(f"q{i}" for i in range(nq))
    letters = "abcdefghijklmnopqrstuvwxyz"
    syms = ["_"] + [letters[i] if i < len(letters) else f"s{i + 1}" for i in range(ng - 1)]
    return states, tuple(syms)


def decode_validate(bits: str) -> TuringMachine | None:
    """Decode a bit string; None unless it is a well-formed machine encoding.

    Valid strings are exactly the image of `encode_machine` up to naming:
    the grammar, the index ranges, accept != reject, no rules out of halting
    states, and the canonical (q, a) rule order are all enforced.  The
    reconstructed machine gets synthetic names with tape symbol 0 as the
    blank and all other tape symbols as input symbols.
    """
    if not bits or set(bits) - {"0", "1"}:
        return None
    r = _BitReader(bits)
    header = []
    for _ in range(5):
        header.append(r.zeros())
        if not r.take_one():
            return None
    if not r.take_one():  # second 1 closing the header
        return None
    nq, ng, start1, accept1, reject1 = header
    if min(start1, accept1, reject1) < 1:
        return None

    rules: list[Rule] = []
    while not r.at_end():
        fields = []
        for _ in range(4):
            fields.append(r.zeros())
            if not r.take_one():
                return None
        d = r.zeros()
        if not r.at_end():
            # Between transitions the grammar requires the 1 1 joiner,
            # followed by at least one bit of the next transition.
            if not r.take_one() or not r.take_one() or r.at_end():
                return None
        if min(fields) < 1 or d not in (1, 2):
            return None
        q, a, q2, b = (f - 1 for f in fields)
        rules.append((q, a, q2, b, LEFT if d == 1 else RIGHT))

    if rules != sorted(rules) or len({(q, a) for q, a, *_ in rules}) != len(rules):
        return None
    states, syms = _synthetic_names(nq, ng)
    try:
        return TuringMachine(
            states=states,
            input_symbols=syms[1:],
            tape_symbols=syms,
            blank="_" if ng else "",
            start=start1 - 1,
            accept=accept1 - 1,
            reject=reject1 - 1,
            rules=tuple(rules),
        )
    except (ValueError, IndexError):
        return None


# ---------------------------------------------------------------------------
# Textual machine files

_REQUIRED_KEYS = ("states", "input_alphabet", "tape_alphabet", "blank",
                  "start", "accept", "reject")


def parse_machine_text(text: str, source: str = "<string>") -> TuringMachine:
    """Parse the line-oriented machine format.

    Keyword lines `states:`, `input_alphabet:`, `tape_alphabet:`, `blank:`,
    `start:`, `accept:`, `reject:` in any order, then one
    `delta: q a -> q' b L|R` line per rule.  `#` starts a comment.  All
    errors cite the offending line number.
    """
    fields: dict[str, list[str]] = {}
    deltas: list[tuple[int, list[str]]] = []

    def fail(lineno: int, msg: str):
        raise MachineFormatError(f"{source}:{lineno}: {msg}")

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            fail(lineno, f"expected 'key: value', got {line!r}")
        key, _, rest = line.partition(":")
        key = key.strip()
        tokens = rest.split()
        if key == "delta":
            deltas.append((lineno, tokens))
        elif key in _REQUIRED_KEYS:
            if key in fields:
                fail(lineno, f"duplicate {key!r} line")
            if not tokens:
                fail(lineno, f"{key!r} needs at least one value")
            fields[key] = tokens
        else:
            fail(lineno, f"unknown key {key!r}")

    for key in _REQUIRED_KEYS:
        if key not in fields:
            raise MachineFormatError(f"{source}: missing {key!r} line")

    states = fields["states"]
    tape_symbols = fields["tape_alphabet"]
    state_idx = {s: i for i, s in enumerate(states)}
    sym_idx = {s: i for i, s in enumerate(tape_symbols)}

    def lookup(table, name, what, lineno):
        if name not in table:
            fail(lineno, f"unknown {what} {name!r}")
        return table[name]

    single = {}
    for key in ("start", "accept", "reject", "blank"):
        if len(fields[key]) != 1:
            raise MachineFormatError(f"{source}: {key!r} takes exactly one value")
        single[key] = fields[key][0]

    rules = []
    for lineno, tokens in deltas:
        if len(tokens) != 6 or tokens[2] != "->":
            fail(lineno, "expected 'delta: q a -> q2 b L|R'")
        q, a, _, q2, b, d = tokens
        if d not in (LEFT, RIGHT):
            fail(lineno, f"direction must be L or R, got {d!r}")
        rules.append((
            lookup(state_idx, q, "state", lineno),
            lookup(sym_idx, a, "tape symbol", lineno),
            lookup(state_idx, q2, "state", lineno),
            lookup(sym_idx, b, "tape symbol", lineno),
            d,
        ))

    try:
        return TuringMachine(
            states=tuple(states),
            input_symbols=tuple(fields["input_alphabet"]),
            tape_symbols=tuple(tape_symbols),
            blank=single["blank"],
            start=lookup(state_idx, single["start"], "state", 0),
            accept=lookup(state_idx, single["accept"], "state", 0),
            reject=lookup(state_idx, single["reject"], "state", 0),
            rules=tuple(rules),
        )
    except ValueError as exc:
        raise MachineFormatError(f"{source}: {exc}") from exc


def load_machine_file(path) -> TuringMachine:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_machine_text(fh.read(), source=str(path))


def format_machine(m: TuringMachine) -> str:
    """Render m in the textual machine format (inverse of parse for names)."""
    lines = [
        "states: " + " ".join(m.states),
        "input_alphabet: " + " ".join(m.input_symbols),
        "tape_alphabet: " + " ".join(m.tape_symbols),
        f"blank: {m.blank}",
        f"start: {m.states[m.start]}",
        f"accept: {m.states[m.accept]}",
        f"reject: {m.states[m.reject]}",
    ]
    for q, a, q2, b, d in m.rules:
        lines.append(
            f"delta: {m.states[q]} {m.tape_symbols[a]} -> "
            f"{m.states[q2]} {m.tape_symbols[b]} {d}"
        )
    return "\n".join(lines) + "\n"
