import itertools
import random

import pytest

from sigmastar.canonical import rank, unrank
from sigmastar.orders import (
    CountingDeleteMin,
    IncomparableError,
    bijection_from_delete_min,
    chain_search,
    delete_min_from_bijection,
    lex_nn_order,
    order_from_bijection,
    subset_order,
)
from sigmastar.streams import (
    CountingBijection,
    NotInCarrier,
    StreamExhausted,
    even_rank_bijection,
    unrank_bijection,
)


def square_rank_bijection(ab):
    return CountingBijection(
        forward=lambda n: unrank(n * n, ab),
        inverse=None,
        description="square ranks",
    )


# ---------------------------------------------------------------------------
# Order from a bijection

def test_order_from_unrank(ab):
    order = order_from_bijection(unrank_bijection(ab))
    assert order.compare(ab.word("ba"), ab.word("ab")) > 0   # ranks 5 vs 4
    for text in ["", "a", "bab"]:
        assert order.compare(ab.word(text), ab.word(text)) == 0


def test_order_from_even_rank_bijection_agrees_with_rank(ab):
    order = order_from_bijection(even_rank_bijection(ab))
    words = [unrank(2 * n, ab) for n in range(20)]
    for x, y in itertools.product(words, repeat=2):
        want = (rank(x) > rank(y)) - (rank(x) < rank(y))
        assert order.compare(x, y) == want


def test_order_inverse_failure_outside_carrier(ab):
    order = order_from_bijection(even_rank_bijection(ab))
    with pytest.raises(NotInCarrier):
        order.compare(ab.word("a"), ab.word("b"))  # rank("a") = 1 is odd


# ---------------------------------------------------------------------------
# deleteMin

def test_delete_min_from_bijection(ab):
    src = delete_min_from_bijection(unrank_bijection(ab))
    assert [src.delete_min().text for _ in range(3)] == ["", "a", "b"]
    src.delete_min()
    src.delete_min()
    assert src.call_count == 5


def test_delete_min_square_ranks(ab):
    src = delete_min_from_bijection(square_rank_bijection(ab))
    got = [rank(src.delete_min()) for _ in range(4)]
    assert got == [0, 1, 4, 9]


def test_delete_min_returns_are_distinct(ab):
    src = delete_min_from_bijection(unrank_bijection(ab))
    returns = [src.delete_min() for _ in range(200)]
    assert len(set(returns)) == 200


def test_listing_law(ab):
    # Every element with index <= n is among the first n+1 deletions.
    f = unrank_bijection(ab)
    src = delete_min_from_bijection(f)
    for n in (0, 5, 31):
        while src.call_count < n + 1:
            src.delete_min()
    src2 = delete_min_from_bijection(f)
    first = {src2.delete_min() for _ in range(32)}
    assert {f.forward(i) for i in range(32)} <= first


def test_bijection_delete_min_round_trips(ab):
    f = unrank_bijection(ab)
    g = bijection_from_delete_min(delete_min_from_bijection(f))
    for i in range(1000):
        assert g.forward(i) == f.forward(i)

    src_a = delete_min_from_bijection(f)
    src_b = delete_min_from_bijection(
        bijection_from_delete_min(delete_min_from_bijection(f)))
    assert [src_a.delete_min() for _ in range(1000)] == \
        [src_b.delete_min() for _ in range(1000)]


def test_delete_min_exhaustion(ab):
    finite = CountingBijection(forward=lambda n: unrank(n, ab), size=3)
    g = bijection_from_delete_min(delete_min_from_bijection(finite))
    assert g.forward(2) == unrank(2, ab)
    with pytest.raises(StreamExhausted):
        g.forward(3)
    assert g.forward(0) == unrank(0, ab)  # memo survives exhaustion


def test_delete_min_forward_zero_is_first_return(ab):
    src = delete_min_from_bijection(unrank_bijection(ab))
    first = src.delete_min()
    g = bijection_from_delete_min(delete_min_from_bijection(unrank_bijection(ab)))
    assert g.forward(0) == first


# ---------------------------------------------------------------------------
# Chain search

def test_chain_search_lex_nn_is_not_gap_finite():
    order = lex_nn_order()
    result = chain_search(order, (1, 0), (0, 0), budget=10**4)
    assert result.exceeded
    assert result.length == 10**4 + 1
    assert result.chain[0] == (1, 0) and result.chain[-1] == (0, 0)
    assert all(a > b for a, b in itertools.pairwise(result.chain))


def test_chain_search_lex_nn_finite_gap():
    order = lex_nn_order()
    result = chain_search(order, (0, 5), (0, 0), budget=100)
    assert not result.exceeded
    assert result.chain == [(0, 5), (0, 4), (0, 3), (0, 2), (0, 1), (0, 0)]


def test_chain_search_unrank_order_is_gap_finite(ab):
    order = order_from_bijection(unrank_bijection(ab))
    result = chain_search(order, ab.word("bb"), ab.empty, budget=10**4)
    assert not result.exceeded
    assert result.length == 7
    assert [rank(w) for w in result.chain] == [6, 5, 4, 3, 2, 1, 0]
    # With the budget below the full gap the same chain is a witness.
    assert chain_search(order, ab.word("bb"), ab.empty, budget=6).exceeded


def test_chain_search_gap_is_exactly_index_difference(ab):
    order = order_from_bijection(unrank_bijection(ab))
    rng = random.Random(5)
    for _ in range(25):
        j = rng.randrange(0, 200)
        i = j + rng.randrange(1, 60)
        result = chain_search(order, unrank(i, ab), unrank(j, ab), budget=i - j + 1)
        assert not result.exceeded
        assert result.length == i - j + 1


def test_chain_search_degenerate_and_error_cases(ab):
    order = lex_nn_order()
    assert chain_search(order, (3, 3), (3, 3), budget=10).chain == [(3, 3)]
    with pytest.raises(IncomparableError):
        chain_search(order, (0, 0), (1, 0), budget=10)  # endpoints reversed
    with pytest.raises(IncomparableError):
        chain_search(subset_order(), frozenset({0}), frozenset({1}), budget=10)


# ---------------------------------------------------------------------------
# Order axioms

def lex_sample(rng):
    return (rng.randrange(6), rng.randrange(6))


def subset_sample(rng):
    return frozenset(i for i in range(6) if rng.random() < 0.5)


def test_poset_axioms_on_random_triples(ab):
    rng = random.Random(11)
    unrank_order = order_from_bijection(unrank_bijection(ab))
    cases = [
        (lex_nn_order(), lex_sample, True),
        (unrank_order, lambda r: unrank(r.randrange(64), ab), True),
        (subset_order(), subset_sample, False),
    ]
    for order, sample, total in cases:
        for _ in range(1000):
            a, b, c = sample(rng), sample(rng), sample(rng)
            assert order.compare(a, a) == 0
            ab_, ba = order.compare(a, b), order.compare(b, a)
            if total:
                assert ab_ is not None
            if ab_ is not None:
                assert ba == -ab_
                if ab_ == 0:
                    assert a == b  # antisymmetry
            bc, ac = order.compare(b, c), order.compare(a, c)
            if ab_ is not None and bc is not None and ab_ >= 0 and bc >= 0:
                assert ac is not None and ac >= 0  # transitivity


def test_subset_order_has_incomparable_pair():
    order = subset_order()
    assert order.compare(frozenset({0}), frozenset({1})) is None
    assert order.compare(frozenset({0, 1}), frozenset({1})) == 1


def test_sampled_subsets_have_unique_minimum(ab):
    rng = random.Random(3)
    order = order_from_bijection(unrank_bijection(ab))
    for _ in range(50):
        subset = [unrank(rng.randrange(500), ab) for _ in range(rng.randint(1, 20))]
        minima = [x for x in subset
                  if all(order.compare(x, y) <= 0 for y in subset)]
        assert len({rank(m) for m in minima}) == 1
