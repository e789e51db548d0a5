"""
Artin combing of pure braids and its linear extension to singular braids.

A pure braid on k strands factors uniquely as b_{k-1} ... b_1 with b_i a word
in the free group on x[i+1,1..i].  The factors are found top-down: forgetting
the last strand of w leaves r, the braid g = w * r^-1 lies in the kernel of the
forgetful map, and g is transcribed into a free word by looking at how it
conjugates the loop around the last puncture.  That direct method is kept as
``comb_by_action``; ``comb`` reaches the same normal form through pure
generators, which avoids the blow-up of intermediate words.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping

from .braids import (
    BraidError,
    BraidWord,
    FreeWord,
    NotInKernelError,
    NotPureError,
    Singular,
    SingularLetterError,
    StrandMismatchError,
    _delete,
    _pure_sigma,
    _underlying_permutation,
    act,
    format_free,
    invert,
    reduce_word,
    require_pure,
)


@dataclass(frozen=True)
class CombedBraid:
    """Artin normal form; ``factors[0]`` is the block-k factor b_{k-1}."""

    strands: int
    factors: tuple[FreeWord, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if len(self.factors) != self.strands - 1:
            raise ValueError(
                f"{self.strands} strands need {self.strands - 1} factors, got {len(self.factors)}")
        for pos, factor in enumerate(self.factors):
            if factor.block != self.strands - pos:
                raise ValueError(f"factor {pos} should live in block {self.strands - pos}")

    @classmethod
    def trivial(cls, strands: int) -> CombedBraid:
        return cls(strands, tuple(FreeWord(m) for m in range(strands, 1, -1)))

    @classmethod
    def from_words(cls, strands: int, words) -> CombedBraid:
        """Build from plain signed-integer letter lists, highest block first."""
        return cls(strands, tuple(FreeWord(strands - pos, tuple(w)) for pos, w in enumerate(words)))

    @property
    def is_trivial(self) -> bool:
        return not any(self.factors)

    def __len__(self):
        return sum(len(f) for f in self.factors)

    def factor(self, block: int) -> FreeWord:
        return self.factors[self.strands - block]

    def __str__(self):
        if self.strands == 1:
            return "e"
        return " ; ".join(format_free(f.block, f.letters) for f in self.factors)

    @classmethod
    def parse(cls, text: str, strands: int) -> CombedBraid:
        """Parse the ``"x[3,1]^-1 x[3,2] ; x[2,1]"`` text form."""
        chunks = [c.strip() for c in text.split(";")] if strands > 1 else []
        if len(chunks) != strands - 1:
            raise BraidError(f"expected {strands - 1} factors in {text!r}")
        words = []
        for pos, chunk in enumerate(chunks):
            block = strands - pos
            letters: list[int] = []
            for tok in chunk.split():
                if tok == "e":
                    continue
                base, _, exp = tok.partition("^")
                if not (base.startswith("x[") and base.endswith("]")):
                    raise BraidError(f"bad free letter {tok!r}")
                m, i = (int(v) for v in base[2:-1].split(","))
                if m != block:
                    raise BraidError(f"{tok} does not belong to block {block}")
                n = int(exp) if exp else 1
                letters.extend([i if n > 0 else -i] * abs(n))
            words.append(letters)
        return cls.from_words(strands, words)

    def to_json(self) -> list:
        return [[[f.block, abs(a), 1 if a > 0 else -1] for a in f.letters] for f in self.factors]

    @classmethod
    def from_json(cls, strands: int, data: list) -> CombedBraid:
        words = []
        for factor in data:
            words.append([i * sign for _, i, sign in factor])
        return cls.from_words(strands, words)


def embed(w: BraidWord, m: int | None = None) -> BraidWord:
    """Add a non-interacting strand on the right."""
    m = w.strands + 1 if m is None else m
    if m < w.strands:
        raise StrandMismatchError("embedding must not lose strands")
    return BraidWord(m, w.letters)


def _kernel_free(g: tuple[int, ...], m: int, check: bool) -> tuple[int, ...]:
    image = act(g, (m,))
    half = len(image) // 2
    if len(image) % 2 == 0 or image[half] != m or image[:half] != invert(image[half + 1:]):
        raise NotInKernelError("image of the last generator is not a conjugate of it")
    if check:
        # The induced action on the generators away from the moving strand
        # must be trivial once the last generator is killed.
        for j in range(1, m):
            if reduce_word(a for a in act(g, (j,)) if abs(a) != m) != (j,):
                raise NotInKernelError("braid does not lie in the kernel of strand deletion")
    return invert(reduce_word(a for a in image[:half] if abs(a) != m))


def kernel_to_free(g: BraidWord, m: int | None = None, check: bool = True) -> FreeWord:
    """Transcribe a braid in the kernel of forgetting strand m into F_{m-1}.

    The braid conjugates the last generator y_m to c y_m c^-1.  The conjugator
    is only defined up to right multiplication by powers of y_m, and with
    the generator convention used here it genuinely involves y_m, so it is
    read modulo y_m.  Its inverse, written in x[m,i], is the answer; this
    makes the map a homomorphism sending a[i,m] to x[m,i].
    """
    m = g.strands if m is None else m
    if g.strands != m:
        raise StrandMismatchError(f"expected a braid on {m} strands")
    if g.is_singular:
        raise SingularLetterError("cannot transcribe a singular braid")
    if not _underlying_permutation(g, allow_singular=False).is_identity:
        raise NotInKernelError("braid is not pure")
    return FreeWord(m, _kernel_free(g.sigma_word(), m, check))


@lru_cache(maxsize=1 << 14)
def _comb_by_action(k: int, word: tuple[int, ...]) -> CombedBraid:
    factors = []
    for m in range(k, 1, -1):
        rest = reduce_word(_delete(word, m))
        g = word + invert(rest)
        factors.append(FreeWord(m, _kernel_free(g, m, check=False)))
        word = rest
    return CombedBraid(k, tuple(factors))


def comb_by_action(w: BraidWord) -> CombedBraid:
    """Comb by transcribing w * delete(w)^-1 directly, one strand at a time.

    Straightforward but the intermediate free words can grow exponentially
    with the length of w, so ``comb`` only uses it on short words.
    """
    if w.is_singular:
        raise SingularLetterError("use expand_singular for singular braids")
    require_pure(w)
    return _comb_by_action(w.strands, reduce_word(w.sigma_word()))


# The fast path.  A sigma word is first rewritten as a word in the pure
# generators (Schreier rewriting against a fixed transversal of P_k in B_k),
# then the generators are pushed into the normal form one at a time.  For each
# block m we keep the images of x[m,1..m-1] under conjugation by the part of
# the braid living on the first m-1 strands, so appending a[i,j] costs one
# substitution per higher block and never leaves the free group F_{m-1}.


def _swap(arrangement: tuple[int, ...], i: int) -> tuple[int, ...]:
    a = list(arrangement)
    a[i - 1], a[i] = a[i], a[i - 1]
    return tuple(a)


@lru_cache(maxsize=None)
def _transversal(k: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """A shortest positive sigma word for every strand arrangement."""
    start = tuple(range(1, k + 1))
    reps = {start: ()}
    frontier = [start]
    while frontier:
        nxt = []
        for a in frontier:
            for i in range(1, k):
                b = _swap(a, i)
                if b not in reps:
                    reps[b] = reps[a] + (i,)
                    nxt.append(b)
        frontier = nxt
    return reps


@lru_cache(maxsize=None)
def _schreier(k: int, a: tuple[int, ...], s: int):
    """Pure generator letters (i, m, sign) of rep(a) s rep(a s)^-1, and a s."""
    reps = _transversal(k)
    b = _swap(a, abs(s))
    c = _comb_by_action(k, reduce_word(reps[a] + (s,) + invert(reps[b])))
    letters = tuple((abs(x), f.block, 1 if x > 0 else -1) for f in c.factors for x in f.letters)
    return letters, b


@lru_cache(maxsize=None)
def _conjugate(m: int, p: int, q: int, sign: int, i: int) -> tuple[int, ...]:
    """a[p,q]^sign x[m,i] a[p,q]^-sign as a word in x[m,*], for q < m."""
    g = _pure_sigma(p, q) if sign > 0 else invert(_pure_sigma(p, q))
    return _kernel_free(reduce_word(g + _pure_sigma(i, m) + invert(g)), m, check=False)


def _substitute(images: list, word: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    for a in word:
        out.extend(images[a] if a > 0 else invert(images[-a]))
    return reduce_word(out)


def _comb_pure(k: int, letters) -> CombedBraid:
    factors = {m: () for m in range(2, k + 1)}
    images = {m: [()] + [(i,) for i in range(1, m)] for m in range(2, k + 1)}
    for i, j, s in letters:
        for m in range(j + 1, k + 1):
            img = images[m]
            images[m] = [()] + [_substitute(img, _conjugate(m, i, j, s, t)) for t in range(1, m)]
        x = images[j][i]
        factors[j] = reduce_word(factors[j] + (x if s > 0 else invert(x)))
    return CombedBraid(k, tuple(FreeWord(m, factors[m]) for m in range(k, 1, -1)))


@lru_cache(maxsize=1 << 14)
def _comb_sigma(k: int, word: tuple[int, ...]) -> CombedBraid:
    arrangement = tuple(range(1, k + 1))
    letters = []
    for s in word:
        piece, arrangement = _schreier(k, arrangement, s)
        letters.extend(piece)
    if arrangement != tuple(range(1, k + 1)):
        raise NotPureError("braid is not pure")
    return _comb_pure(k, letters)


def comb(w: BraidWord) -> CombedBraid:
    if w.is_singular:
        raise SingularLetterError("use expand_singular for singular braids")
    require_pure(w)
    return _comb_sigma(w.strands, reduce_word(w.sigma_word()))


def _combed_sigma(c: CombedBraid) -> tuple[int, ...]:
    out: list[int] = []
    for f in c.factors:
        for a in f.letters:
            word = _pure_sigma(abs(a), f.block)
            out.extend(word if a > 0 else invert(word))
    return tuple(out)


def combed_to_braid(c: CombedBraid) -> BraidWord:
    return BraidWord.from_sigma(c.strands, _combed_sigma(c))


# ---------------------------------------------------------------------------
# Group algebra


@dataclass(frozen=True)
class GroupAlgebraElement:
    """A finite integer combination of pure braids keyed by combed form."""

    strands: int
    terms: Mapping[CombedBraid, int] = field(default_factory=dict)

    def __post_init__(self):
        terms = {}
        for c, v in self.terms.items():
            if c.strands != self.strands:
                raise StrandMismatchError("term on the wrong number of strands")
            if v:
                terms[c] = int(v)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_braid(cls, w: BraidWord, coeff: int = 1) -> GroupAlgebraElement:
        return cls(w.strands, {comb(w): coeff})

    @classmethod
    def one(cls, strands: int) -> GroupAlgebraElement:
        return cls(strands, {CombedBraid.trivial(strands): 1})

    def __iter__(self) -> Iterator[tuple[CombedBraid, int]]:
        return iter(sorted(self.terms.items(), key=lambda kv: _combed_key(kv[0])))

    def __len__(self):
        return len(self.terms)

    def _check(self, other: GroupAlgebraElement) -> None:
        if other.strands != self.strands:
            raise StrandMismatchError(
                f"elements on {self.strands} and {other.strands} strands")

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        self._check(other)
        terms = defaultdict(int, self.terms)
        for c, v in other.terms.items():
            terms[c] += v
        return GroupAlgebraElement(self.strands, terms)

    def __neg__(self) -> GroupAlgebraElement:
        return GroupAlgebraElement(self.strands, {c: -v for c, v in self.terms.items()})

    def __sub__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        return self + (-other)

    def __rmul__(self, scalar: int) -> GroupAlgebraElement:
        return GroupAlgebraElement(self.strands, {c: scalar * v for c, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return algebra_product(self, other)

    def __str__(self):
        if not self.terms:
            return "0"
        return "\n".join(f"{v:+d}  {c}" for c, v in self)

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "terms": [{"coeff": v, "factors": c.to_json()} for c, v in self],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> GroupAlgebraElement:
        if isinstance(data, str):
            data = json.loads(data)
        k = data["strands"]
        terms: dict[CombedBraid, int] = defaultdict(int)
        for term in data["terms"]:
            terms[CombedBraid.from_json(k, term["factors"])] += int(term["coeff"])
        return cls(k, terms)


def _combed_key(c: CombedBraid):
    return (len(c), tuple(f.letters for f in c.factors))


def expand_singular(w: BraidWord) -> GroupAlgebraElement:
    """Resolve every double point as (positive crossing - negative crossing)."""
    if not _underlying_permutation(w, allow_singular=True).is_identity:
        raise NotPureError(f"underlying braid of {w} is not pure")
    k = w.strands
    slots = [pos for pos, letter in enumerate(w.letters) if isinstance(letter, Singular)]
    pieces = []
    for letter in w.letters:
        if isinstance(letter, Singular):
            pieces.append(None)
        else:
            pieces.append(BraidWord(k, (letter,)).sigma_word())
    terms: dict[CombedBraid, int] = defaultdict(int)
    for signs in itertools.product((1, -1), repeat=len(slots)):
        chosen = iter(signs)
        word: list[int] = []
        for pos, piece in enumerate(pieces):
            if piece is None:
                word.append(next(chosen) * w.letters[pos].index)
            else:
                word.extend(piece)
        coeff = -1 if signs.count(-1) % 2 else 1
        terms[_comb_sigma(k, reduce_word(word))] += coeff
    return GroupAlgebraElement(k, terms)


def algebra_product(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    if a.strands != b.strands:
        raise StrandMismatchError(f"elements on {a.strands} and {b.strands} strands")
    k = a.strands
    terms: dict[CombedBraid, int] = defaultdict(int)
    for c1, v1 in a.terms.items():
        w1 = _combed_sigma(c1)
        for c2, v2 in b.terms.items():
            terms[_comb_sigma(k, reduce_word(w1 + _combed_sigma(c2)))] += v1 * v2
    return GroupAlgebraElement(k, terms)
