"""Canonical (length-then-value) order on the strings over a finite alphabet.

Fix an ordered alphabet of k distinct symbols.  Every finite string gets a
rank: all shorter strings come first, and strings of equal length are ordered
by the base-k numeral they spell.  Concretely, for k >= 2

    rank(s) = (k**len(s) - 1) // (k - 1) + string_value(s)

where the first term counts the strings strictly shorter than s and
string_value reads s as a base-k number (symbol i has digit value i).  For
k == 1 the geometric sum degenerates and rank(s) = len(s).  The map is a
bijection onto the naturals; `unrank` inverts it exactly with integer
arithmetic (no floating point, so boundary ranks never misround).

Over {a, b} the order starts:  '' a b aa ab ba bb aaa ...  with ranks 0..7.

Everything here is immutable and pure; values can be shared freely across
threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterator, Sequence


class AlphabetError(ValueError):
    """Malformed alphabet or a symbol used outside its alphabet."""


class AlphabetMismatch(ValueError):
    """Two strings from different alphabets were compared."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of distinct symbols; the order defines digit values."""

    symbols: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.symbols) == 0:
            raise AlphabetError("alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise AlphabetError(f"alphabet symbols must be distinct: {self.symbols}")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.symbols)})

    @classmethod
    def from_text(cls, text: str) -> "Alphabet":
        """Alphabet of single-character symbols, e.g. from_text('ab')."""
        return cls(tuple(text))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        """0-based position of `symbol`; raises if it is not in the alphabet."""
        try:
            return self._index[symbol]
        except KeyError:
            raise AlphabetError(f"symbol {symbol!r} not in alphabet {self.symbols}") from None

    def word(self, symbols: Sequence[str]) -> "CanonicalString":
        """Build a string from a sequence of symbols (or a str of 1-char symbols)."""
        return CanonicalString(self, tuple(self.index(s) for s in symbols))

    def from_indices(self, indices: Sequence[int]) -> "CanonicalString":
        return CanonicalString(self, tuple(indices))

    @property
    def empty(self) -> "CanonicalString":
        return CanonicalString(self, ())


@total_ordering
@dataclass(frozen=True)
class CanonicalString:
    """A finite string over a fixed alphabet, stored as symbol indices."""

    alphabet: Alphabet
    indices: tuple[int, ...]

    def __post_init__(self):
        k = self.alphabet.size
        if any(not (0 <= i < k) for i in self.indices):
            raise AlphabetError(f"symbol index out of range for k={k}: {self.indices}")

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(self.alphabet.symbols[i] for i in self.indices)

    @property
    def text(self) -> str:
        return "".join(self.symbols)

    def __str__(self) -> str:
        return self.text

    def __len__(self) -> int:
        return len(self.indices)

    def __lt__(self, other: "CanonicalString") -> bool:
        return compare(self, other) < 0


def symbol_index(symbol: str, alphabet: Alphabet) -> int:
    """Digit value of `symbol` (its position in the alphabet)."""
    return alphabet.index(symbol)


def string_value(s: CanonicalString) -> int:
    """Base-k value of s: value('') = 0, value(xa) = value(x)*k + digit(a)."""
    k = s.alphabet.size
    v = 0
    for i in s.indices:
        v = v * k + i
    return v


def shorter_count(k: int, n: int) -> int:
    """How many strings over k symbols are strictly shorter than length n."""
    if k == 1:
        return n
    return (k**n - 1) // (k - 1)


def rank(s: CanonicalString) -> int:
    """Position of s in the canonical order (arbitrary precision)."""
    return shorter_count(s.alphabet.size, len(s)) + string_value(s)


def unrank(x: int, alphabet: Alphabet) -> CanonicalString:
    """The unique string with rank x over `alphabet`.

    The length is recovered by accumulating the geometric series in exact
    integer arithmetic: n is the largest length whose run of shorter strings
    fits below x.  The remainder is spelled as n base-k digits, most
    significant first, left-padded with the 0th symbol.
    """
    if x < 0:
        raise ValueError(f"rank must be non-negative, got {x}")
    k = alphabet.size
    if k == 1:
        return CanonicalString(alphabet, (0,) * x)
    # Find n with shorter_count(n) <= x < shorter_count(n + 1).
    n = 0
    below = 0  # strings shorter than n
    run = 1    # k**n, strings of length exactly n
    while below + run <= x:
        below += run
        run *= k
        n += 1
    v = x - below
    digits = [0] * n
    for pos in range(n - 1, -1, -1):
        v, digits[pos] = divmod(v, k)
    return CanonicalString(alphabet, tuple(digits))


def compare(x: CanonicalString, y: CanonicalString) -> int:
    """Sign of rank(x) - rank(y), computed without evaluating ranks.

    Shorter strings come first; equal lengths compare digit by digit.
    """
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch(
            f"cannot compare strings over {x.alphabet.symbols} and {y.alphabet.symbols}"
        )
    if len(x) != len(y):
        return -1 if len(x) < len(y) else 1
    if x.indices == y.indices:
        return 0
    return -1 if x.indices < y.indices else 1


def successor(s: CanonicalString) -> CanonicalString:
    """The next string in canonical order: rank(successor(s)) = rank(s) + 1."""
    k = s.alphabet.size
    digits = list(s.indices)
    for pos in range(len(digits) - 1, -1, -1):
        if digits[pos] < k - 1:
            digits[pos] += 1
            return CanonicalString(s.alphabet, tuple(digits))
        digits[pos] = 0
    # All digits carried over: next length, all-0th-symbol string.
    return CanonicalString(s.alphabet, (0,) * (len(digits) + 1))


def iter_canonical(alphabet: Alphabet) -> Iterator[CanonicalString]:
    """All strings over `alphabet` in canonical order, starting from ''."""
    s = alphabet.empty
    while True:
        yield s
        s = successor(s)


def strings_of_length_at_most(alphabet: Alphabet, max_len: int) -> Iterator[CanonicalString]:
    """All strings of length <= max_len, in canonical order."""
    return itertools.islice(
        iter_canonical(alphabet), shorter_count(alphabet.size, max_len + 1)
    )
