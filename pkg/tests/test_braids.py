import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from purebraid.braids import (
    BraidSyntaxError,
    BraidWord,
    FreeWord,
    IndexRangeError,
    Permutation,
    PureGen,
    Sigma,
    Singular,
    SingularLetterError,
    StrandMismatchError,
    act,
    artin_action,
    delete_strand,
    free_reduce,
    invert,
    is_pure,
    parse_braid,
    permutation_of,
    pure_gen_to_sigma,
    reduce_word,
)


def sig(k, *word):
    return BraidWord.from_sigma(k, word)


# -- parsing -----------------------------------------------------------------


def test_parse_examples():
    assert parse_braid("s1 s2^-1", 3).letters == (Sigma(1, 1), Sigma(2, -1))
    assert parse_braid("a[1,3]^2", 3).letters == (PureGen(1, 3, 1), PureGen(1, 3, 1))
    with pytest.raises(IndexRangeError):
        parse_braid("s3", 3)


def test_parse_whitespace_and_forms():
    assert parse_braid("  s1   s2^-1\n", 3) == parse_braid("s1 s2^-1", 3)
    assert parse_braid("a[ 1 , 3 ]^-1", 3).letters == (PureGen(1, 3, -1),)
    assert parse_braid("s1^0", 2).letters == ()
    assert parse_braid("", 4) == BraidWord.identity(4)
    assert parse_braid("t1 t2", 3).letters == (Singular(1), Singular(2))
    assert parse_braid("s2^-3", 3).letters == (Sigma(2, -1),) * 3


@pytest.mark.parametrize("text, pos", [("s1 x2", 3), ("s1 s", 3), ("t1^2", 0), ("a[1 2]", 0)])
def test_parse_syntax_error_position(text, pos):
    with pytest.raises(BraidSyntaxError) as exc:
        parse_braid(text, 3)
    assert exc.value.position == pos


def test_parse_range_errors():
    with pytest.raises(IndexRangeError):
        parse_braid("a[2,2]", 3)
    with pytest.raises(IndexRangeError):
        parse_braid("a[1,4]", 3)
    with pytest.raises(IndexRangeError):
        parse_braid("t0", 3)


def test_str_round_trip():
    w = parse_braid("s1 s2^-1 a[1,3] a[2,3]^-1 t2", 3)
    assert parse_braid(str(w), 3) == w


# -- permutations ------------------------------------------------------------


def test_permutation_examples():
    assert permutation_of(sig(2, 1)) == Permutation((2, 1))
    assert permutation_of(sig(2, 1, 1)).is_identity
    # s1 s2 composes to the 3-cycle 1 -> 2 -> 3 -> 1.
    p = permutation_of(sig(3, 1, 2))
    assert (p(1), p(2), p(3)) == (2, 3, 1)


def test_permutation_rejects_singular():
    with pytest.raises(SingularLetterError):
        permutation_of(parse_braid("t1", 2))


def test_is_pure_examples():
    assert is_pure(sig(2, 1, 1))
    assert not is_pure(sig(2, 1))


def _positions_after(word, k):
    # Independent oracle: follow the strand at each top position down the word.
    ends = []
    for start in range(1, k + 1):
        p = start
        for s in word:
            j = abs(s)
            if p == j:
                p = j + 1
            elif p == j + 1:
                p = j
        ends.append(p)
    return ends


@pytest.mark.parametrize("k", range(2, 9))
def test_pure_generators_are_pure(k):
    for i in range(1, k):
        for j in range(i + 1, k + 1):
            w = pure_gen_to_sigma(i, j, k)
            assert permutation_of(w).is_identity
            assert _positions_after(w.sigma_word(), k) == list(range(1, k + 1))
            assert is_pure(BraidWord(k, (PureGen(i, j, -1),)))


def test_permutation_matches_strand_tracking():
    rng = random.Random(5)
    for _ in range(200):
        k = rng.randint(2, 6)
        word = [rng.choice((1, -1)) * rng.randint(1, k - 1) for _ in range(rng.randint(0, 12))]
        ends = _positions_after(word, k)
        p = permutation_of(sig(k, *word))
        # p sends the end position of each strand back to its start.
        assert [p(e) for e in ends] == list(range(1, k + 1))


# -- free words --------------------------------------------------------------


def test_free_reduce_examples():
    assert free_reduce([1, -1], 3).letters == ()
    assert free_reduce([1, 2, -2, 1], 3).letters == (1, 1)
    assert free_reduce([1, -2, 2, -1, 2], 3).letters == (2,)
    assert free_reduce([(1, 1), (2, -1)], 3).letters == (1, -2)
    with pytest.raises(IndexRangeError):
        free_reduce([3], 3)


free_letters = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=30)


@given(free_letters)
def test_free_reduce_idempotent_and_shrinking(letters):
    once = free_reduce(letters, 4)
    assert free_reduce(once.letters, 4) == once
    assert len(once) <= len(letters)
    assert all(once.letters[p] != -once.letters[p + 1] for p in range(len(once) - 1))


@given(free_letters, st.randoms(use_true_random=False))
def test_free_reduce_confluent(letters, rng):
    # Cancel adjacent pairs in random order until none is left.
    word = list(letters)
    while True:
        spots = [p for p in range(len(word) - 1) if word[p] == -word[p + 1]]
        if not spots:
            break
        p = rng.choice(spots)
        del word[p:p + 2]
    assert tuple(word) == free_reduce(letters, 4).letters


def test_free_word_stays_reduced():
    assert FreeWord(3, (1, 2, -2, -1)).letters == ()
    assert (FreeWord(3, (1, 2)) * FreeWord(3, (-2, 1))).letters == (1, 1)
    assert str(FreeWord(3, (-1, -1, 2))) == "x[3,1]^-2 x[3,2]"


# -- pure generators ---------------------------------------------------------


def test_pure_gen_to_sigma_examples():
    assert pure_gen_to_sigma(1, 2, 2).sigma_word() == (1, 1)
    assert pure_gen_to_sigma(1, 3, 3).sigma_word() == (2, 1, 1, -2)
    assert pure_gen_to_sigma(2, 4, 4).sigma_word() == (3, 2, 2, -3)
    assert pure_gen_to_sigma(1, 4, 5).sigma_word() == (3, 2, 1, 1, -2, -3)
    with pytest.raises(IndexRangeError):
        pure_gen_to_sigma(2, 2, 3)


# -- Artin action ------------------------------------------------------------


def test_artin_action_examples():
    assert artin_action(sig(2, 1), FreeWord(3, (1,))).letters == (2,)
    assert artin_action(sig(2, -1), FreeWord(3, (1,))).letters == (1, 2, -1)
    y = FreeWord(4, (1, -3, 2, 2))
    assert artin_action(BraidWord.identity(3), y) == y


def test_artin_action_generator_rules():
    y = lambda *w: FreeWord(5, w)
    s2, s2i = sig(4, 2), sig(4, -2)
    assert artin_action(s2, y(3)).letters == (-3, 2, 3)
    assert artin_action(s2i, y(3)).letters == (2,)
    assert artin_action(s2, y(1)).letters == (1,)
    assert artin_action(s2, y(4)).letters == (4,)


def test_artin_action_rejects_wrong_block():
    with pytest.raises(StrandMismatchError):
        artin_action(sig(3, 1), FreeWord(3, (1,)))
    with pytest.raises(SingularLetterError):
        artin_action(parse_braid("t1", 3), FreeWord(4, (1,)))


K = 5
sigma_words = st.lists(st.integers(1, K - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=8)
ywords = st.lists(st.integers(1, K).flatmap(lambda i: st.sampled_from([i, -i])), max_size=8)


@given(st.integers(1, K - 2), ywords)
def test_braid_relation_three_term(i, y):
    y = reduce_word(y)
    assert act((i, i + 1, i), y) == act((i + 1, i, i + 1), y)


@given(st.integers(1, K - 1), st.integers(1, K - 1), ywords)
def test_far_generators_commute(i, j, y):
    y = reduce_word(y)
    if abs(i - j) >= 2:
        assert act((i, j), y) == act((j, i), y)
    assert act((i, -i), y) == y
    assert act((-i, i), y) == y


@given(sigma_words, sigma_words, ywords)
def test_action_composes(u, v, y):
    y = reduce_word(y)
    assert act(tuple(u) + tuple(v), y) == act(u, act(v, y))


@given(sigma_words, ywords, ywords)
def test_action_is_a_homomorphism(w, y1, y2):
    y1, y2 = reduce_word(y1), reduce_word(y2)
    assert act(w, reduce_word(y1 + y2)) == reduce_word(act(w, y1) + act(w, y2))
    assert act(w, invert(y1)) == invert(act(w, y1))


@given(sigma_words, ywords)
def test_action_inverts(w, y):
    y = reduce_word(y)
    assert act(invert(w), act(w, y)) == y


# -- strand deletion ---------------------------------------------------------


def test_delete_strand_examples():
    assert delete_strand(sig(2, 1, 1), 2) == BraidWord.identity(1)
    assert delete_strand(sig(3, 1, 1), 3) == sig(2, 1, 1)
    assert delete_strand(sig(3, 2, 1, 1, -2), 3) == BraidWord.identity(2)


def test_delete_strand_middle():
    # a[1,3] with the middle strand removed is s1^2 on the remaining two.
    assert delete_strand(pure_gen_to_sigma(1, 3, 3), 2).sigma_word() == (1, 1)
    # Output is not free-reduced: the crossings of strand 2 over strand 3 survive.
    assert delete_strand(pure_gen_to_sigma(1, 3, 3), 1).sigma_word() == (1, -1)
    with pytest.raises(IndexRangeError):
        delete_strand(sig(3, 1), 4)


def test_delete_strand_expands_pure_letters():
    w = BraidWord(4, (PureGen(2, 3), PureGen(1, 4, -1)))
    assert delete_strand(w, 4) == delete_strand(BraidWord.from_sigma(4, w.sigma_word()), 4)
    assert reduce_word(delete_strand(w, 4).sigma_word()) == (2, 2)


def test_braid_word_algebra():
    u = parse_braid("s1 a[1,3]", 3)
    assert (u * u.inverse()).sigma_word() == u.sigma_word() + invert(u.sigma_word())
    assert (u ** 2).letters == u.letters * 2
    assert (u ** -1) == u.inverse()
    with pytest.raises(StrandMismatchError):
        u * BraidWord.identity(4)
    with pytest.raises(SingularLetterError):
        parse_braid("t1", 2).inverse()


@settings(max_examples=50)
@given(st.integers(2, 8), st.data())
def test_permutation_of_words_in_pure_generators(k, data):
    letters = data.draw(st.lists(
        st.tuples(st.integers(1, k - 1), st.integers(2, k), st.sampled_from([1, -1]))
        .filter(lambda t: t[0] < t[1]), max_size=6))
    w = BraidWord(k, tuple(PureGen(i, j, s) for i, j, s in letters))
    assert is_pure(w)
    assert is_pure(BraidWord.from_sigma(k, w.sigma_word()))
