"""
Braid words, free words and the Artin action.

A braid word on k strands is a flat sequence of letters:

    Sigma(i, sign)        the Artin generator s_i^(+-1), 1 <= i < k
    PureGen(i, j, sign)   the pure generator a[i,j]^(+-1), 1 <= i < j <= k
    Singular(i)           a double point between strands i and i+1

Words are read left to right as top to bottom, so ``u * v`` is u stacked on
top of v.  The pure generator is the fixed sigma-word

    a[i,j] = (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}^-1 ... s_{j-1}^-1)

Free words live in a single combing block m: letters are signed integers
+-i standing for x[m,i]^(+-1) with 1 <= i < m.  They are kept freely reduced.

Internally every non-singular braid word is flattened to a tuple of signed
integers (+-i for s_i^(+-1)); the algorithms below work on that form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence, Union


class BraidError(ValueError):
    """Base class for all errors raised on invalid braid input."""


class BraidSyntaxError(BraidError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class IndexRangeError(BraidError):
    pass


class StrandMismatchError(BraidError):
    pass


class SingularLetterError(BraidError):
    pass


class NotPureError(BraidError):
    pass


class NotInKernelError(BraidError):
    pass


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")


@dataclass(frozen=True)
class Sigma:
    index: int
    sign: int = 1

    def __post_init__(self):
        _check_sign(self.sign)

    def __str__(self):
        return f"s{self.index}" if self.sign > 0 else f"s{self.index}^-1"


@dataclass(frozen=True)
class PureGen:
    lower: int
    upper: int
    sign: int = 1

    def __post_init__(self):
        _check_sign(self.sign)

    def __str__(self):
        s = f"a[{self.lower},{self.upper}]"
        return s if self.sign > 0 else s + "^-1"


@dataclass(frozen=True)
class Singular:
    index: int

    def __str__(self):
        return f"t{self.index}"


Letter = Union[Sigma, PureGen, Singular]


def _check_letter(letter: Letter, k: int) -> None:
    if isinstance(letter, (Sigma, Singular)):
        if not 1 <= letter.index < k:
            raise IndexRangeError(f"{letter} is out of range for {k} strands")
    elif isinstance(letter, PureGen):
        if not 1 <= letter.lower < letter.upper <= k:
            raise IndexRangeError(f"{letter} is out of range for {k} strands")
    else:
        raise TypeError(f"not a braid letter: {letter!r}")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            _check_letter(letter, self.strands)

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands, ())

    @classmethod
    def from_sigma(cls, strands: int, word: Iterable[int]) -> BraidWord:
        """Build a word from signed integers, +-i meaning s_i^(+-1)."""
        return cls(strands, tuple(Sigma(abs(s), 1 if s > 0 else -1) for s in word))

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise StrandMismatchError(
                f"cannot multiply braids on {self.strands} and {other.strands} strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, n: int) -> BraidWord:
        if n < 0:
            return self.inverse() ** -n
        return BraidWord(self.strands, self.letters * n)

    def inverse(self) -> BraidWord:
        out = []
        for letter in reversed(self.letters):
            if isinstance(letter, Sigma):
                out.append(Sigma(letter.index, -letter.sign))
            elif isinstance(letter, PureGen):
                out.append(PureGen(letter.lower, letter.upper, -letter.sign))
            else:
                raise SingularLetterError("a singular braid has no inverse")
        return BraidWord(self.strands, tuple(out))

    @property
    def double_points(self) -> int:
        return sum(isinstance(letter, Singular) for letter in self.letters)

    @property
    def is_singular(self) -> bool:
        return self.double_points > 0

    def sigma_word(self) -> tuple[int, ...]:
        """The flattened signed-integer sigma word (pure generators expanded)."""
        out: list[int] = []
        for letter in self.letters:
            if isinstance(letter, Sigma):
                out.append(letter.sign * letter.index)
            elif isinstance(letter, PureGen):
                word = _pure_sigma(letter.lower, letter.upper)
                out.extend(word if letter.sign > 0 else invert(word))
            else:
                raise SingularLetterError(f"singular letter {letter} in {self}")
        return tuple(out)

    def __str__(self):
        return " ".join(str(letter) for letter in self.letters)


# ---------------------------------------------------------------------------
# Parsing

_TOKEN = re.compile(
    r"""(?:
        (?P<s>s)\s*(?P<si>\d+)
      | (?P<a>a)\s*\[\s*(?P<ai>\d+)\s*,\s*(?P<aj>\d+)\s*\]
      | (?P<t>t)\s*(?P<ti>\d+)
    )(?:\s*\^\s*(?P<exp>[+-]?\d+))?""",
    re.VERBOSE,
)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse a braid word such as ``"s1 s2^-1 a[1,3]^2 t1"``.

    Exponents expand to repeated letters; a negative exponent means the
    inverse.  Singular letters ``t<i>`` only admit the exponent 1.
    """
    letters: list[Letter] = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            raise BraidSyntaxError(f"unexpected {text[pos]!r}", pos)
        exp = int(match.group("exp")) if match.group("exp") is not None else 1
        sign = 1 if exp > 0 else -1
        if match.group("s"):
            letter: Letter = Sigma(int(match.group("si")), sign)
        elif match.group("a"):
            letter = PureGen(int(match.group("ai")), int(match.group("aj")), sign)
        else:
            if exp != 1:
                raise BraidSyntaxError("singular letters take no exponent", pos)
            letter = Singular(int(match.group("ti")))
        try:
            _check_letter(letter, strands)
        except IndexRangeError as err:
            raise IndexRangeError(f"{err} (position {pos})") from None
        letters.extend([letter] * abs(exp))
        pos = match.end()
    return BraidWord(strands, tuple(letters))


# ---------------------------------------------------------------------------
# Permutations


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..k}; ``images[x-1]`` is the image of x.

    Products compose as functions: ``(p * q)(x) == p(q(x))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation")

    @classmethod
    def identity(cls, k: int) -> Permutation:
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def transposition(cls, i: int, k: int) -> Permutation:
        images = list(range(1, k + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(tuple(self(other(x)) for x in range(1, len(self.images) + 1)))

    @property
    def is_identity(self) -> bool:
        return all(img == x for x, img in enumerate(self.images, start=1))


def _underlying_permutation(w: BraidWord, allow_singular: bool) -> Permutation:
    images = list(range(1, w.strands + 1))
    # Right-to-left so that the result is the functional product of the letters.
    for letter in reversed(w.letters):
        if isinstance(letter, PureGen):
            continue
        if isinstance(letter, Singular) and not allow_singular:
            raise SingularLetterError(f"singular letter {letter} has no permutation")
        i = letter.index
        images = [i + 1 if x == i else i if x == i + 1 else x for x in images]
    return Permutation(tuple(images))


def permutation_of(w: BraidWord) -> Permutation:
    return _underlying_permutation(w, allow_singular=False)


def is_pure(w: BraidWord) -> bool:
    return permutation_of(w).is_identity


def require_pure(w: BraidWord) -> None:
    if not is_pure(w):
        raise NotPureError(f"braid {w} is not pure")


# ---------------------------------------------------------------------------
# Free words


def reduce_word(word: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a signed-integer word (stack based, so confluent)."""
    out: list[int] = []
    for a in word:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def invert(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(-a for a in reversed(word))


@dataclass(frozen=True)
class FreeWord:
    """A reduced word in x[block,1..block-1]; letters are signed lower indices."""

    block: int
    letters: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.block < 1:
            raise ValueError("block must be positive")
        for a in self.letters:
            if a == 0 or abs(a) >= self.block:
                raise IndexRangeError(f"index {abs(a)} out of range for block {self.block}")
        object.__setattr__(self, "letters", reduce_word(self.letters))

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        if other.block != self.block:
            raise ValueError("free words from different blocks")
        return FreeWord(self.block, self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(self.block, invert(self.letters))

    def pairs(self) -> list[tuple[int, int]]:
        """Letters as (lower index, sign) pairs."""
        return [(abs(a), 1 if a > 0 else -1) for a in self.letters]

    def __str__(self):
        return format_free(self.block, self.letters)


def format_free(block: int, letters: Sequence[int]) -> str:
    if not letters:
        return "e"
    parts = []
    run_start = 0
    for pos in range(1, len(letters) + 1):
        if pos == len(letters) or letters[pos] != letters[run_start]:
            a, n = letters[run_start], pos - run_start
            exp = n if a > 0 else -n
            base = f"x[{block},{abs(a)}]"
            parts.append(base if exp == 1 else f"{base}^{exp}")
            run_start = pos
    return " ".join(parts)


def free_reduce(letters: Iterable[int | tuple[int, int]], block: int) -> FreeWord:
    """Reduce a raw letter list, given as signed ints or (index, sign) pairs."""
    flat = []
    for a in letters:
        if isinstance(a, tuple):
            index, sign = a
            _check_sign(sign)
            a = index * sign
        flat.append(a)
    return FreeWord(block, tuple(flat))


# ---------------------------------------------------------------------------
# Pure generators, strand deletion, Artin action


@lru_cache(maxsize=None)
def _pure_sigma(i: int, j: int) -> tuple[int, ...]:
    conj = tuple(range(j - 1, i, -1))
    return conj + (i, i) + invert(conj)


def pure_gen_to_sigma(i: int, j: int, k: int) -> BraidWord:
    if not 1 <= i < j <= k:
        raise IndexRangeError(f"a[{i},{j}] is out of range for {k} strands")
    return BraidWord.from_sigma(k, _pure_sigma(i, j))


def _delete(word: Sequence[int], p: int) -> tuple[int, ...]:
    out = []
    for s in word:
        j = s if s > 0 else -s
        if j == p - 1:
            p -= 1
        elif j == p:
            p += 1
        elif j < p - 1:
            out.append(s)
        else:
            out.append(s - 1 if s > 0 else s + 1)
    return tuple(out)


def delete_strand(w: BraidWord, s: int) -> BraidWord:
    """Forget the strand that starts (at the top) in position s."""
    if not 1 <= s <= w.strands:
        raise IndexRangeError(f"strand {s} out of range for {w.strands} strands")
    if w.strands == 1:
        raise IndexRangeError("cannot delete the only strand")
    return BraidWord.from_sigma(w.strands - 1, _delete(w.sigma_word(), s))


@lru_cache(maxsize=None)
def _rules(s: int) -> dict[int, tuple[int, ...]]:
    """Images of the letters moved by conjugation with s_i^(+-1)."""
    i = abs(s)
    if s > 0:
        img = {i: (i + 1,), i + 1: (-(i + 1), i, i + 1)}
    else:
        img = {i: (i, i + 1, -i), i + 1: (i,)}
    img.update({-a: invert(b) for a, b in list(img.items())})
    return img


def act(word: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    """Apply conjugation by a sigma word to a reduced free word.

    The last letter of ``word`` acts first, so ``act(u + v, y) ==
    act(u, act(v, y))``.
    """
    y = list(y)
    for s in reversed(word):
        images = _rules(s)
        out: list[int] = []
        push, pop = out.append, out.pop
        for g in y:
            img = images.get(g)
            if img is None:
                if out and out[-1] == -g:
                    pop()
                else:
                    push(g)
            else:
                for b in img:
                    if out and out[-1] == -b:
                        pop()
                    else:
                        push(b)
        y = out
    return tuple(y)


def artin_action(w: BraidWord, y: FreeWord) -> FreeWord:
    """Conjugate the free word y by the braid w (w y w^-1).

    ``y`` lives in block k+1 for a braid on k strands, i.e. in the free group
    on x[k+1,1..k] that the braid group B_k acts on.
    """
    if y.block != w.strands + 1:
        raise StrandMismatchError(
            f"a braid on {w.strands} strands acts on block {w.strands + 1}, got {y.block}")
    return FreeWord(y.block, act(w.sigma_word(), y.letters))
