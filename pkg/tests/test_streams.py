import itertools

import pytest

from helpers import accepted_strings
from sigmastar.canonical import rank, strings_of_length_at_most, unrank
from sigmastar.streams import (
    CountingBijection,
    MemoizedBijection,
    NonIncreasingStream,
    Stream,
    StreamExhausted,
    bijection_stream,
    dovetail_stream,
    even_rank_bijection,
    increasing_decider,
    is_increasing_prefix,
    naive_dovetail_prints,
    nth_printed,
    print_index,
    stream_accepts,
    stream_bijection,
    unrank_bijection,
)

AB_TABLE = ["", "a", "b", "aa", "ab", "ba", "bb"]


def finite_stream(alphabet, texts):
    words = [alphabet.word(t) for t in texts]
    return Stream(lambda: iter(words), description=f"fixed {texts}")


# ---------------------------------------------------------------------------
# Dovetailing

def test_dovetail_matches_from_scratch_schedule(corpus):
    # The resumable scheduler is an optimization; print order must equal the
    # rerun-every-round reference exactly.
    for name, rounds in [("even_length", 40), ("slow_on_a", 25),
                         ("loop_on_odd", 30), ("member_finite", 30),
                         ("slow_quadratic", 25), ("all_a", 40)]:
        reference = naive_dovetail_prints(corpus[name], rounds)
        got = dovetail_stream(corpus[name]).take(len(reference))
        assert got == reference, name


def test_dovetail_first_prints_even_length(corpus):
    stream = dovetail_stream(corpus["even_length"])
    assert [w.text for w in stream.take(5)] == ["", "aa", "ab", "ba", "bb"]


def test_dovetail_reject_all_prints_nothing(corpus):
    stream = dovetail_stream(corpus["reject_all"], max_rounds=10**4)
    assert stream.take(1) == []


def test_dovetail_covers_language_despite_looping_inputs(corpus, ab):
    # loop_on_odd diverges on half of all inputs; every even-length string
    # of length <= 6 must still show up after finitely many rounds.
    prints = set(dovetail_stream(corpus["loop_on_odd"], max_rounds=200))
    expected = accepted_strings(corpus["loop_on_odd"], 6, budget=10**4)
    assert {w for w in prints if len(w) <= 6} == expected
    assert expected == {w for w in strings_of_length_at_most(ab, 6) if len(w) % 2 == 0}


def test_dovetail_soundness_and_uniqueness(corpus):
    for name in ("even_length", "slow_on_a", "member_finite"):
        m = corpus[name]
        prints = dovetail_stream(m, max_rounds=300).take(2000)
        assert len(set(prints)) == len(prints), name
        members = accepted_strings(m, 9, budget=10**4)
        assert all(w in members for w in prints if len(w) <= 9), name


def test_dovetail_cursors_are_independent(corpus):
    stream = dovetail_stream(corpus["even_length"])
    first = stream.take(10)
    it = iter(stream)
    assert next(it) == first[0]
    assert stream.take(10) == first


# ---------------------------------------------------------------------------
# Printer -> recognizer

def test_stream_accepts(corpus, ab):
    stream = dovetail_stream(corpus["even_length"])
    assert stream_accepts(stream, ab.word("aa"), 100)
    assert not stream_accepts(stream, ab.word("a"), 100)
    assert not stream_accepts(finite_stream(ab, [""]), ab.word("aa"), 10)


def test_nth_printed(corpus, ab):
    dovetail = dovetail_stream(corpus["even_length"])
    assert nth_printed(dovetail, 0) == dovetail.take(1)[0]
    assert nth_printed(bijection_stream(unrank_bijection(ab)), 5).text == "ba"
    with pytest.raises(StreamExhausted):
        nth_printed(finite_stream(ab, ["", "a", "b"]), 7)


def test_print_index(corpus, ab):
    stream = bijection_stream(unrank_bijection(ab))
    assert print_index(stream, ab.word("ba"), 100) == 5
    dovetail = dovetail_stream(corpus["even_length"])
    for n in range(100):
        assert print_index(dovetail, nth_printed(dovetail, n), 10**4) == n
    assert print_index(dovetail, ab.word("a"), 200) is None


# ---------------------------------------------------------------------------
# Bijection-backed streams

def test_bijection_stream_prints_in_order(ab):
    assert [w.text for w in bijection_stream(unrank_bijection(ab)).take(7)] == AB_TABLE


def test_even_rank_stream(ab):
    stream = bijection_stream(even_rank_bijection(ab))
    prints = stream.take(50)
    assert [rank(w) for w in prints] == [2 * n for n in range(50)]


def test_singleton_bijection_stream(ab):
    f = CountingBijection(forward=lambda n: unrank(n, ab), size=1)
    assert [w.text for w in bijection_stream(f).take(10)] == [""]


def test_stream_bijection_round_trip(corpus):
    stream = dovetail_stream(corpus["even_length"])
    again = bijection_stream(stream_bijection(stream))
    assert again.take(100) == stream.take(100)


def test_memoized_bijection(ab):
    it = iter(bijection_stream(unrank_bijection(ab)))
    f = MemoizedBijection(lambda: next(it))
    assert f.forward(5).text == "ba"
    assert f.forward(5).text == "ba"          # memo, not re-pull
    assert f.index_of(ab.word("aa"), budget=100) == 3
    assert f.index_of(ab.word("bb"), budget=2) is None

    finite = MemoizedBijection(iter([ab.word("a")]).__next__)
    assert finite.forward(0).text == "a"
    with pytest.raises(StreamExhausted):
        finite.forward(1)
    assert finite.size == 1


# ---------------------------------------------------------------------------
# Increasing streams

def test_increasing_decider(ab):
    evens = bijection_stream(even_rank_bijection(ab))
    assert increasing_decider(evens, ab.word("b"))        # rank 2
    assert not increasing_decider(evens, ab.word("a"))    # rank 1, passed by "b"
    assert not increasing_decider(finite_stream(ab, ["", "a"]), ab.word("bb"))


def test_increasing_decider_agrees_with_rank_parity(ab):
    evens = bijection_stream(even_rank_bijection(ab))
    for w in strings_of_length_at_most(ab, 5):
        assert increasing_decider(evens, w) == (rank(w) % 2 == 0)


def test_increasing_decider_flags_contract_violation(ab):
    bad = finite_stream(ab, ["b", "a"])
    with pytest.raises(NonIncreasingStream):
        increasing_decider(bad, ab.word("bb"))


def test_is_increasing_prefix(ab, corpus):
    assert is_increasing_prefix(bijection_stream(unrank_bijection(ab)), 100)
    assert is_increasing_prefix(finite_stream(ab, []), 10)
    # slow_on_a delays a-initial strings, so its prints leave canonical order.
    assert not is_increasing_prefix(dovetail_stream(corpus["slow_on_a"]), 8)
    bad_prefix = dovetail_stream(corpus["slow_on_a"]).take(8)
    assert any(rank(x) > rank(y) for x, y in itertools.pairwise(bad_prefix))
