"""Random braid material for the property tests (seeded ``random.Random``)."""

from __future__ import annotations

import random

from purebraid.braids import BraidWord, Sigma, Singular, _pure_sigma, invert
from purebraid.combing import CombedBraid


def pure_generator(rng: random.Random, k: int) -> tuple[int, ...]:
    i = rng.randint(1, k - 1)
    j = rng.randint(i + 1, k)
    word = _pure_sigma(i, j)
    return word if rng.random() < 0.5 else invert(word)


def random_sigma(rng: random.Random, k: int, length: int) -> tuple[int, ...]:
    return tuple(rng.choice((1, -1)) * rng.randint(1, k - 1) for _ in range(length))


def random_pure_sigma(rng: random.Random, k: int, max_len: int) -> tuple[int, ...]:
    """A pure sigma word of length at most max_len.

    Built from pure generators, some of them conjugated by a short random
    sigma word, with occasional cancelling pairs thrown in.
    """
    word: tuple[int, ...] = ()
    if k < 2:
        return word
    while True:
        roll = rng.random()
        if roll < 0.6:
            piece = pure_generator(rng, k)
        elif roll < 0.85:
            c = random_sigma(rng, k, rng.randint(1, 3))
            piece = c + pure_generator(rng, k) + invert(c)
        else:
            s = random_sigma(rng, k, 1)
            piece = s + invert(s)
        if len(word) + len(piece) > max_len:
            return word
        word += piece


def perturb(rng: random.Random, word: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Apply one braid relation somewhere in the word."""
    moves = ["insert_free"]
    if k >= 3:
        moves.append("insert_braid")
    if k >= 4:
        moves.append("insert_commute")
    swaps = [p for p in range(len(word) - 1) if abs(abs(word[p]) - abs(word[p + 1])) >= 2]
    if swaps:
        moves.append("swap")
    cancels = [p for p in range(len(word) - 1) if word[p] == -word[p + 1]]
    if cancels:
        moves.append("cancel")
    move = rng.choice(moves)
    pos = rng.randint(0, len(word))
    if move == "insert_free":
        s = random_sigma(rng, k, 1)
        rel = s + invert(s)
    elif move == "insert_braid":
        i = rng.randint(1, k - 2)
        rel = (i, i + 1, i, -(i + 1), -i, -(i + 1))
        if rng.random() < 0.5:
            rel = invert(rel)
    elif move == "insert_commute":
        i = rng.randint(1, k - 3)
        j = rng.randint(i + 2, k - 1)
        a, b = rng.choice((1, -1)) * i, rng.choice((1, -1)) * j
        rel = (a, b, -a, -b)
    elif move == "swap":
        p = rng.choice(swaps)
        return word[:p] + (word[p + 1], word[p]) + word[p + 2:]
    else:
        p = rng.choice(cancels)
        return word[:p] + word[p + 2:]
    return word[:pos] + rel + word[pos:]


def random_combed(rng: random.Random, k: int, max_factor_len: int) -> CombedBraid:
    words = []
    for m in range(k, 1, -1):
        n = rng.randint(0, max_factor_len)
        words.append([rng.choice((1, -1)) * rng.randint(1, m - 1) for _ in range(n)])
    return CombedBraid.from_words(k, words)


def random_combed_total(rng: random.Random, k: int, total: int) -> CombedBraid:
    """A combed braid whose factor lengths add up to at most ``total``."""
    words: list[list[int]] = [[] for _ in range(k - 1)]
    for _ in range(rng.randint(0, total)):
        pos = rng.randrange(k - 1)
        m = k - pos
        words[pos].append(rng.choice((1, -1)) * rng.randint(1, m - 1))
    return CombedBraid.from_words(k, words)


def decorate(rng: random.Random, word: tuple[int, ...], k: int, n: int) -> BraidWord | None:
    """Turn n randomly chosen crossings of a sigma word into double points."""
    if len(word) < n:
        return None
    slots = set(rng.sample(range(len(word)), n))
    letters = []
    for pos, s in enumerate(word):
        if pos in slots:
            letters.append(Singular(abs(s)))
        else:
            letters.append(Sigma(abs(s), 1 if s > 0 else -1))
    return BraidWord(k, tuple(letters))


def random_singular(rng: random.Random, k: int, n: int, max_len: int) -> BraidWord:
    while True:
        w = decorate(rng, random_pure_sigma(rng, k, max_len), k, n)
        if w is not None:
            return w


def one_point_generator(i: int, j: int, k: int) -> BraidWord:
    """The singular braid resolving to a[i,j] - 1: one crossing of a[i,j] made singular."""
    conj = tuple(range(j - 1, i, -1))
    letters = [Sigma(c) for c in conj] + [Sigma(i), Singular(i)] + [Sigma(c, -1) for c in reversed(conj)]
    return BraidWord(k, tuple(letters))
