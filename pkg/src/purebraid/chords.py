"""
Truncated integer power series in the chord variables X[m,i].

A monomial is a tuple of chords ``(m, i)`` with 1 <= i < m.  Chords from
different blocks commute and chords inside a block do not, so a monomial is
canonical when its blocks appear in descending order of m; the order inside
a block is part of the monomial.  These are the sorted diagrams, and they
form a basis of the chord diagram algebra of the pure braid group.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .braids import FreeWord, StrandMismatchError
from .combing import CombedBraid, GroupAlgebraElement

Chord = tuple[int, int]
Monomial = tuple[Chord, ...]


def canonical(chords: Iterable[Chord]) -> Monomial:
    """Move chords of different blocks past each other into sorted order."""
    return tuple(sorted(chords, key=lambda c: -c[0]))


def is_canonical(mono: Monomial, strands: int | None = None) -> bool:
    for pos, (m, i) in enumerate(mono):
        if not 1 <= i < m or (strands is not None and m > strands):
            return False
        if pos and mono[pos - 1][0] < m:
            return False
    return True


def monomial_key(mono: Monomial):
    """Ordering key: degree first, then the chord list with blocks descending."""
    return (len(mono), tuple((-m, i) for m, i in mono))


def format_monomial(mono: Monomial) -> str:
    if not mono:
        return "1"
    parts = []
    for chord, run in itertools.groupby(mono):
        n = len(list(run))
        base = f"X[{chord[0]},{chord[1]}]"
        parts.append(base if n == 1 else f"{base}^{n}")
    return "".join(parts)


def render_diagram(mono: Monomial, strands: int) -> str:
    """Draw a sorted diagram: one chord per row, top to bottom.

    ``*`` marks chord ends, ``-`` the chord itself and ``+`` a strand the chord
    passes over.
    """
    rows = ["  ".join("|" * strands)]
    for m, i in mono:
        row = list("  ".join("|" * strands))
        lo, hi = 3 * (i - 1), 3 * (m - 1)
        for col in range(lo, hi + 1):
            row[col] = "+" if row[col] == "|" else "-"
        row[lo] = row[hi] = "*"
        rows.append("".join(row) + f"   {m}-{i}")
    rows.append(rows[0])
    return "\n".join(rows)


def _merge(a: Monomial, b: Monomial) -> Monomial:
    """Product of canonical monomials: per block, a's run then b's run."""
    if not a:
        return b
    if not b:
        return a
    if a[-1][0] > b[0][0]:
        return a + b
    out = []
    p = q = 0
    while p < len(a) or q < len(b):
        if q == len(b) or (p < len(a) and a[p][0] >= b[q][0]):
            block = a[p][0]
            while p < len(a) and a[p][0] == block:
                out.append(a[p])
                p += 1
            while q < len(b) and b[q][0] == block:
                out.append(b[q])
                q += 1
        else:
            out.append(b[q])
            q += 1
    return tuple(out)


@dataclass(frozen=True)
class ChordSeries:
    strands: int
    trunc: int
    coeffs: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.trunc < 0:
            raise ValueError("truncation degree must be non-negative")
        coeffs = {}
        for mono, v in self.coeffs.items():
            mono = tuple(tuple(c) for c in mono)
            if not is_canonical(mono, self.strands):
                raise ValueError(f"monomial {mono} is not canonical on {self.strands} strands")
            if v and len(mono) <= self.trunc:
                coeffs[mono] = int(v)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def one(cls, strands: int, trunc: int) -> ChordSeries:
        return cls(strands, trunc, {(): 1})

    @classmethod
    def zero(cls, strands: int, trunc: int) -> ChordSeries:
        return cls(strands, trunc, {})

    def __getitem__(self, mono: Iterable[Chord]) -> int:
        return self.coeffs.get(tuple(mono), 0)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: monomial_key(kv[0]))

    def _check(self, other: ChordSeries) -> None:
        if other.strands != self.strands:
            raise StrandMismatchError(
                f"series on {self.strands} and {other.strands} strands")

    def __add__(self, other: ChordSeries) -> ChordSeries:
        self._check(other)
        out = defaultdict(int, self.coeffs)
        for mono, v in other.coeffs.items():
            out[mono] += v
        return ChordSeries(self.strands, min(self.trunc, other.trunc), out)

    def __neg__(self) -> ChordSeries:
        return ChordSeries(self.strands, self.trunc, {m: -v for m, v in self.coeffs.items()})

    def __sub__(self, other: ChordSeries) -> ChordSeries:
        return self + (-other)

    def __rmul__(self, scalar: int) -> ChordSeries:
        return ChordSeries(self.strands, self.trunc, {m: scalar * v for m, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return series_mul(self, other)

    def degree_part(self, n: int) -> dict[Monomial, int]:
        return {m: v for m, v in self.coeffs.items() if len(m) == n}

    def truncate(self, n: int) -> ChordSeries:
        return ChordSeries(self.strands, min(n, self.trunc), self.coeffs)

    def min_degree(self) -> int | None:
        return min_degree(self)

    def __str__(self):
        terms = self.items()
        if not terms:
            return "0"
        out = []
        for mono, v in terms:
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = format_monomial(mono)
            else:
                body = f"{mag}*{format_monomial(mono)}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        return text + "".join(f" {s} {b}" for s, b in out[1:])

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "trunc": self.trunc,
            "terms": [{"coeff": str(v), "monomial": [list(c) for c in mono]}
                      for mono, v in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> ChordSeries:
        if isinstance(data, str):
            data = json.loads(data)
        coeffs: dict[Monomial, int] = defaultdict(int)
        for term in data["terms"]:
            coeffs[tuple(tuple(c) for c in term["monomial"])] += int(term["coeff"])
        return cls(data["strands"], data["trunc"], coeffs)


def series_mul(a: ChordSeries, b: ChordSeries) -> ChordSeries:
    if a.strands != b.strands:
        raise StrandMismatchError(f"series on {a.strands} and {b.strands} strands")
    n = min(a.trunc, b.trunc)
    out: dict[Monomial, int] = defaultdict(int)
    for ma, va in a.coeffs.items():
        room = n - len(ma)
        if room < 0:
            continue
        for mb, vb in b.coeffs.items():
            if len(mb) <= room:
                out[_merge(ma, mb)] += va * vb
    return ChordSeries(a.strands, n, out)


def min_degree(s: ChordSeries) -> int | None:
    """Smallest degree carrying a nonzero coefficient, None for zero."""
    return min((len(m) for m in s.coeffs), default=None)


def _magnus_block(letters, trunc: int) -> dict[tuple[int, ...], int]:
    # Words in the lower indices of a single block; multiply on the right.
    series: dict[tuple[int, ...], int] = {(): 1}
    for a in letters:
        i = abs(a)
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for word, v in series.items():
            nxt[word] += v
            room = trunc - len(word)
            if a > 0:
                if room >= 1:
                    nxt[word + (i,)] += v
            else:
                for p in range(1, room + 1):
                    nxt[word + (i,) * p] += -v if p % 2 else v
        series = {w: v for w, v in nxt.items() if v}
    return series


def magnus_free(wd: FreeWord, trunc: int, strands: int | None = None) -> ChordSeries:
    """Magnus expansion x -> 1 + X of a single-block free word."""
    strands = wd.block if strands is None else strands
    m = wd.block
    block = _magnus_block(wd.letters, trunc)
    return ChordSeries(strands, trunc, {tuple((m, i) for i in w): v for w, v in block.items()})


def magnus(c: CombedBraid, trunc: int) -> ChordSeries:
    out = ChordSeries.one(c.strands, trunc)
    for factor in c.factors:
        if factor.letters:
            out = series_mul(out, magnus_free(factor, trunc, c.strands))
    return out


def magnus_algebra(e: GroupAlgebraElement, trunc: int) -> ChordSeries:
    out: dict[Monomial, int] = defaultdict(int)
    for c, v in e.terms.items():
        for mono, u in magnus(c, trunc).coeffs.items():
            out[mono] += v * u
    return ChordSeries(e.strands, trunc, out)


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def iter_monomials(k: int, n: int) -> Iterator[Monomial]:
    """Stream the sorted monomials of degree n on k strands (unordered)."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    if k == 1:
        if n == 0:
            yield ()
        return
    blocks = [[(m, i) for i in range(1, m)] for m in range(k, 1, -1)]
    for comp in _compositions(n, len(blocks)):
        slots = [blocks[b] for b, d in enumerate(comp) for _ in range(d)]
        yield from itertools.product(*slots)


def monomial_basis(k: int, n: int) -> list[Monomial]:
    """All sorted monomials of degree n on k strands, in the standard order."""
    return sorted(iter_monomials(k, n), key=monomial_key)


def external_product(a: ChordSeries, b: ChordSeries) -> ChordSeries:
    """Place a on the left of b; b's strands are renumbered after a's."""
    k = a.strands
    out: dict[Monomial, int] = defaultdict(int)
    n = min(a.trunc, b.trunc)
    for mb, vb in b.coeffs.items():
        shifted = tuple((m + k, i + k) for m, i in mb)
        for ma, va in a.coeffs.items():
            if len(ma) + len(mb) <= n:
                out[shifted + ma] += va * vb
    return ChordSeries(k + b.strands, n, out)
