"""Enumeration streams: machines with a printer, and counting bijections.

A `Stream` is a re-iterable, deterministic producer of canonical strings;
every `iter()` starts a fresh cursor at the first print, so consuming
operations never disturb one another.  Streams come from two sources: a
counting bijection (print f(0), f(1), ... in order) or a recognizer put
through `dovetail_stream`, which interleaves runs of one machine over all
strings so that no diverging input ever blocks progress.

The dovetail schedule is: in round i the first i strings of canonical order
each get a step budget of i; a string is printed in the first round whose
budget covers its accepting run, rounds are unbounded by default, and within
a round prints come in canonical order.  Every member of the language is
printed exactly once, non-members never, which is what makes the printed
sequence a counting bijection of the language (`stream_bijection` /
`nth_printed` / `print_index` below).

Any operation whose idealized counterpart could diverge takes an explicit
budget and returns a distinguishable "not seen" instead of hanging.  Note
the budgets here count *prints*; a stream over a finite language prints
finitely often no matter how many rounds run, so give `dovetail_stream` a
`max_rounds` bound when the language may be finite and you need exhaustion
to be observable.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Optional

from sigmastar.canonical import (
    Alphabet,
    CanonicalString,
    compare,
    iter_canonical,
    rank,
    unrank,
)
from sigmastar.machine import TuringMachine, stepper_tables
from sigmastar import stepper


class StreamExhausted(ValueError):
    """The stream ended before producing the requested print."""


class NonIncreasingStream(ValueError):
    """A stream declared increasing printed a string out of order."""


class NotInCarrier(ValueError):
    """Inverse lookup on an element outside the bijection's carrier."""


class Stream:
    """Lazy sequence of printed strings; iterating starts a fresh cursor."""

    def __init__(self, factory: Callable[[], Iterator[CanonicalString]],
                 description: str = ""):
        self._factory = factory
        self.description = description

    def __iter__(self) -> Iterator[CanonicalString]:
        return self._factory()

    def take(self, n: int) -> list[CanonicalString]:
        return list(itertools.islice(self, n))

    def __repr__(self):
        return f"Stream({self.description!r})"


@dataclass
class CountingBijection:
    """A map n -> carrier element, total on 0..size (or all naturals).

    `inverse`, when given, must be exact on the carrier and raise
    NotInCarrier elsewhere.  Bijections without a closed-form inverse are
    handled by MemoizedBijection, whose lookup takes a scan budget.
    """

    forward: Callable[[int], Any]
    inverse: Optional[Callable[[Any], int]] = None
    size: Optional[int] = None
    description: str = ""

    def __call__(self, n: int) -> Any:
        return self.forward(n)

    def index_of(self, element: Any) -> int:
        if self.inverse is None:
            raise ValueError(f"bijection {self.description!r} has no exact inverse")
        return self.inverse(element)


class MemoizedBijection:
    """Counting bijection realized by memoizing a single pull source.

    forward(i) is the (i+1)-th element the source ever produced; the memo
    makes it a function even though the source is consumed destructively.
    index_of scans the memo and extends it on demand, up to `budget` known
    elements, returning None when the element was not seen within budget.
    """

    def __init__(self, pull: Callable[[], Any], size: Optional[int] = None,
                 description: str = ""):
        self._pull = pull
        self._memo: list[Any] = []
        self._positions: dict[Any, int] = {}
        self.size = size
        self.inverse = None
        self.description = description

    def _extend_to(self, n: int) -> bool:
        while len(self._memo) <= n:
            if self.size is not None and len(self._memo) >= self.size:
                return False
            try:
                element = self._pull()
            except (StopIteration, StreamExhausted):
                self.size = len(self._memo)
                return False
            self._positions.setdefault(element, len(self._memo))
            self._memo.append(element)
        return True

    def forward(self, n: int) -> Any:
        if not self._extend_to(n):
            raise StreamExhausted(
                f"source of {self.description!r} ended after {len(self._memo)} elements"
            )
        return self._memo[n]

    def __call__(self, n: int) -> Any:
        return self.forward(n)

    def index_of(self, element: Any, budget: Optional[int] = None) -> Optional[int]:
        limit = budget if budget is not None else len(self._memo)
        self._extend_to(limit - 1)
        return self._positions.get(element)


def unrank_bijection(alphabet: Alphabet) -> CountingBijection:
    """The canonical counting bijection of all strings over `alphabet`."""
    return CountingBijection(
        forward=lambda n: unrank(n, alphabet),
        inverse=rank,
        size=None,
        description=f"unrank over {''.join(alphabet.symbols)}",
    )


def even_rank_bijection(alphabet: Alphabet) -> CountingBijection:
    """Counting bijection of the strings of even rank, in increasing order."""

    def inv(s: CanonicalString) -> int:
        r = rank(s)
        if r % 2:
            raise NotInCarrier(f"{s.text!r} has odd rank {r}")
        return r // 2

    return CountingBijection(
        forward=lambda n: unrank(2 * n, alphabet),
        inverse=inv,
        size=None,
        description=f"even ranks over {''.join(alphabet.symbols)}",
    )


# ---------------------------------------------------------------------------
# Recognizer -> printer (dovetailing)

@dataclass(slots=True)
class _Live:
    """A simulation that has not halted yet, explored up to `explored` steps."""

    string: CanonicalString
    str_rank: int
    tape: bytearray
    head: int
    state: int
    steps: int
    explored: int = 0


def dovetail_stream(m: TuringMachine, max_rounds: Optional[int] = None) -> Stream:
    """Print L(m) by fair interleaving, each member exactly once.

    Equivalent to rerunning every admitted string from scratch each round,
    but implemented by resuming stored configurations and exploring ahead
    with doubling budgets, so a string that loops costs O(final round)
    total steps instead of O(final round^2).  Print order is identical to
    the from-scratch schedule (the machine is deterministic): a string
    appears in round max(rank + 1, accepting steps), rank-ordered within
    its round.
    """
    tables = stepper_tables(m)
    accept = m.accept
    reject = m.reject
    in_to_tape = [m.tape_symbols.index(s) for s in m.input_symbols]

    def explore(cfg: _Live, target: int,
                due: list[tuple[int, int, CanonicalString]],
                parked: dict[int, list[_Live]]):
        cfg.state, cfg.head, cfg.steps = stepper.advance(
            tables, cfg.tape, cfg.head, cfg.state, cfg.steps, target
        )
        cfg.explored = target
        if cfg.state == accept:
            heapq.heappush(due, (max(cfg.str_rank + 1, cfg.steps), cfg.str_rank, cfg.string))
        elif cfg.state != reject:
            parked.setdefault(target, []).append(cfg)

    def cursor() -> Iterator[CanonicalString]:
        admit = iter_canonical(m.input_alphabet)
        due: list[tuple[int, int, CanonicalString]] = []
        parked: dict[int, list[_Live]] = {}
        round_no = 0
        while max_rounds is None or round_no < max_rounds:
            round_no += 1
            w = next(admit)
            tape = bytearray(in_to_tape[i] for i in w.indices)
            explore(_Live(w, round_no - 1, tape, 0, m.start, 0), max(round_no, 64),
                    due, parked)
            for cfg in parked.pop(round_no, ()):
                explore(cfg, 2 * round_no, due, parked)
            while due and due[0][0] == round_no:
                yield heapq.heappop(due)[2]

    bound = "" if max_rounds is None else f", max_rounds={max_rounds}"
    return Stream(cursor, description=f"dovetail of {len(m.states)}-state machine{bound}")


def naive_dovetail_prints(m: TuringMachine, rounds: int) -> list[CanonicalString]:
    """From-scratch reference for the dovetail schedule (slow; for testing).

    Round i reruns each of the first i canonical strings with budget i and
    prints newly accepted strings in canonical order.
    """
    from sigmastar.machine import run, Verdict

    prints: list[CanonicalString] = []
    printed: set[CanonicalString] = set()
    pool: list[CanonicalString] = []
    admit = iter_canonical(m.input_alphabet)
    for i in range(1, rounds + 1):
        pool.append(next(admit))
        for w in pool:
            if w in printed:
                continue
            if run(m, w, i).verdict is Verdict.ACCEPTED:
                printed.add(w)
                prints.append(w)
    return prints


# ---------------------------------------------------------------------------
# Printer -> recognizer, and the counting bijection of the printed sequence

def stream_accepts(stream: Stream, w: CanonicalString, print_budget: int) -> bool:
    """True iff w occurs among the first `print_budget` prints of the stream.

    False means "not seen": definitive when the stream exhausted, otherwise
    only that w has not been printed yet.
    """
    return any(y == w for y in itertools.islice(stream, print_budget))


def nth_printed(stream: Stream, n: int) -> CanonicalString:
    """The (n+1)-th printed string: count prints until the counter hits n."""
    for c, x in enumerate(itertools.islice(stream, n + 1)):
        if c == n:
            return x
    raise StreamExhausted(f"stream ended before print {n}")


def print_index(stream: Stream, w: CanonicalString,
                print_budget: int) -> Optional[int]:
    """Position of w in the printed sequence, scanning at most print_budget
    prints; None if not seen (w may not be in the enumerated set)."""
    for c, x in enumerate(itertools.islice(stream, print_budget)):
        if x == w:
            return c
    return None


def bijection_stream(f) -> Stream:
    """Print f(0), f(1), f(2), ... in exactly that order."""

    def cursor():
        n = 0
        while f.size is None or n < f.size:
            yield f.forward(n)
            n += 1

    return Stream(cursor, description=f"prints of {f.description!r}")


def stream_bijection(stream: Stream, size: Optional[int] = None) -> MemoizedBijection:
    """The counting bijection defined by print order: forward(n) is the
    (n+1)-th print (nth_printed folded over one memoized cursor)."""
    it = iter(stream)
    return MemoizedBijection(lambda: next(it), size=size,
                             description=f"print order of {stream.description!r}")


# ---------------------------------------------------------------------------
# Increasing streams decide their language

def increasing_decider(stream: Stream, w: CanonicalString) -> bool:
    """Decide membership against a stream whose prints strictly increase.

    Pull until a print y >= w appears or the stream ends; accept iff y == w.
    Always terminates: an increasing stream either passes w or exhausts.
    Raises NonIncreasingStream the moment the order contract is violated.
    """
    prev = None
    for y in stream:
        if prev is not None and compare(y, prev) <= 0:
            raise NonIncreasingStream(
                f"{y.text!r} printed after {prev.text!r}"
            )
        prev = y
        c = compare(y, w)
        if c == 0:
            return True
        if c > 0:
            return False
    return False


def is_increasing_prefix(stream: Stream, n: int) -> bool:
    """True iff the first n prints are strictly increasing in canonical order."""
    prev = None
    for y in itertools.islice(stream, n):
        if prev is not None and compare(y, prev) <= 0:
            return False
        prev = y
    return True
