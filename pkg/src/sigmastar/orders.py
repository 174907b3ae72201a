"""Counting orders: gap-finite well orders, and deleteMin as their algorithm.

An order here is a comparator over some carrier set, returning the sign of
a >= b (or None when the two are incomparable, for genuinely partial
orders).  An order is *gap-finite* when only finitely many distinct
elements fit strictly between any two; a total, well-founded, gap-finite
order lets the carrier be listed one element at a time from the minimum,
which is exactly what `delete_min` does.  The two constructions below are
each other's inverses:

    bijection -> order     compare by position in the listing
    bijection -> deleteMin the (i+1)-th call returns element i
    deleteMin -> bijection memoize the returns; position = return index

Gap-finiteness is not decidable from the outside, so `chain_search` is a
bounded *falsifier* only: a strictly descending chain longer than the
budget is a counterexample witness at that scale, while staying under
budget proves nothing beyond the elements sampled.  The lexicographic
order on pairs of naturals is the stock counterexample (infinitely many
(0, y) sit between (1, 0) and (0, 0)) and ships with a sampler that
reproduces it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterator, Optional

from sigmastar.streams import MemoizedBijection, StreamExhausted


class IncomparableError(ValueError):
    """chain_search endpoints are unrelated under a partial order."""


@dataclass
class Order:
    """Comparator over a carrier, with an optional between-endpoint sampler.

    compare(a, b) returns >0, 0, <0 for a > b, a = b, a < b, or None when
    incomparable.  `sampler(a, b)` lazily proposes carrier elements used by
    chain_search to grow chains from a down to b; it may propose elements
    outside the interval (they are filtered), but whatever it never
    proposes can never appear in a chain.
    """

    compare: Callable[[Any, Any], Optional[int]]
    sampler: Optional[Callable[[Any, Any], Iterator[Any]]] = None
    description: str = ""


def order_from_bijection(f) -> Order:
    """Order the carrier by listing position: a >= b iff index(a) >= index(b).

    The result is total, well-founded, and gap-finite by construction;
    between two elements sit exactly the elements of the index gap, which
    is what the sampler enumerates.
    """

    def cmp(a, b):
        ia, ib = f.index_of(a), f.index_of(b)
        return (ia > ib) - (ia < ib)

    def sampler(a, b):
        lo, hi = sorted((f.index_of(a), f.index_of(b)))
        return (f.forward(j) for j in range(lo + 1, hi))

    return Order(cmp, sampler, description=f"listing order of {f.description!r}")


class CountingDeleteMin:
    """deleteMin over a carrier listed by a counting bijection.

    The carrier is mutated by nothing else, so after i deletions the
    minimum under the listing order is element i: each call returns
    f(call_count) and advances the counter.
    """

    def __init__(self, f):
        self._f = f
        self.call_count = 0

    def delete_min(self) -> Any:
        if getattr(self._f, "size", None) is not None and self.call_count >= self._f.size:
            raise StreamExhausted(
                f"carrier of {self._f.description!r} exhausted after {self.call_count} deletions"
            )
        element = self._f.forward(self.call_count)
        self.call_count += 1
        return element


def delete_min_from_bijection(f) -> CountingDeleteMin:
    return CountingDeleteMin(f)


def bijection_from_delete_min(src, size: Optional[int] = None,
                              description: str = "") -> MemoizedBijection:
    """Counting bijection from a deleteMin source: forward(i) is the return
    of the (i+1)-th call, memoized so repeated lookups do not re-delete."""
    return MemoizedBijection(
        src.delete_min, size=size,
        description=description or "deleteMin return order",
    )


@dataclass
class ChainResult:
    """Outcome of chain_search: the chain runs from a down to b inclusive."""

    exceeded: bool
    chain: list

    @property
    def length(self) -> int:
        return len(self.chain)


def chain_search(order: Order, a: Any, b: Any, budget: int) -> ChainResult:
    """Grow a strictly descending chain from a to b out of sampled elements.

    Candidates from the order's sampler are inserted wherever they fit
    strictly between chain neighbours.  The search stops the moment the
    chain length passes `budget` (exceeded=True: a non-gap-finiteness
    witness at this scale) or when the sampler runs dry (exceeded=False:
    the longest chain found).  Requires a >= b.
    """

    c = order.compare(a, b)
    if c is None:
        raise IncomparableError(f"endpoints {a!r} and {b!r} are incomparable")
    if c < 0:
        raise IncomparableError(f"endpoints out of order: {a!r} < {b!r}")
    if c == 0:
        return ChainResult(False, [a])
    if order.sampler is None:
        raise ValueError("chain_search needs an order with a carrier sampler")

    chain = [a, b]  # strictly descending at all times
    if len(chain) > budget:
        return ChainResult(True, chain)
    for cand in order.sampler(a, b):
        # Binary-search the descending chain; skip candidates equal to a
        # chain element or falling outside the open interval (b, a).
        lo, hi = 0, len(chain)
        equal = False
        while lo < hi:
            mid = (lo + hi) // 2
            s = order.compare(chain[mid], cand)
            if s is None or s == 0:
                equal = True
                break
            if s > 0:
                lo = mid + 1
            else:
                hi = mid
        if equal or lo == 0 or lo == len(chain):
            continue
        chain.insert(lo, cand)
        if len(chain) > budget:
            return ChainResult(True, chain)
    return ChainResult(False, chain)


def lex_nn_order() -> Order:
    """Lexicographic order on pairs of naturals: a well order, not gap-finite.

    The sampler walks (x_low, y) upward forever when the endpoints differ
    in the first coordinate, which is the classic infinite descent between
    (x_high, ...) and (x_low, ...); with equal first coordinates it fills
    the finite second-coordinate gap.
    """

    def cmp(p, q):
        return (p > q) - (p < q)  # tuple comparison is lexicographic

    def sampler(a, b):
        (x1, y1), (x2, y2) = a, b
        if x1 == x2:
            # Finite gap: only second coordinates strictly between.
            return ((x2, y) for y in range(y2 + 1, y1))
        # Infinite descent: every (x2, y) with y > y2 sits below a, so each
        # proposal extends the chain and the budget bound terminates the search.
        return ((x2, y) for y in itertools.count(y2 + 1))

    return Order(cmp, sampler, description="lexicographic order on N x N")


def subset_order() -> Order:
    """Containment order on finite sets: X >= Y iff Y is a subset of X.

    Partial: {0} and {1} are incomparable, so compare returns None there.
    Used to exhibit a well-founded order that is neither total nor
    gap-finite-testable by listing.
    """

    def cmp(x, y):
        if x == y:
            return 0
        if y <= x:
            return 1
        if x <= y:
            return -1
        return None

    return Order(cmp, None, description="subset order on finite sets")
