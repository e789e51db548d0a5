"""
Finite type invariants of pure braids as weight functionals on the Magnus
expansion, plus exact equality and n-triviality tests.

A weight functional of order n assigns integers to sorted monomials of degree
at most n; pairing it with the Magnus expansion truncated at n gives an
integer-valued invariant of type n, and every such invariant arises this way.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .braids import BraidWord, SingularLetterError, StrandMismatchError, require_pure
from .chords import ChordSeries, Monomial, is_canonical, magnus, magnus_algebra, monomial_key
from .combing import comb, expand_singular


@dataclass(frozen=True)
class WeightFunctional:
    strands: int
    order: int
    weights: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        weights = {}
        for mono, v in self.weights.items():
            mono = tuple(tuple(c) for c in mono)
            if not is_canonical(mono, self.strands):
                raise ValueError(f"monomial {mono} is not canonical on {self.strands} strands")
            if len(mono) > self.order:
                raise ValueError(f"monomial {mono} has degree above {self.order}")
            if v:
                weights[mono] = int(v)
        object.__setattr__(self, "weights", weights)

    def pair(self, series: ChordSeries) -> int:
        if series.strands != self.strands:
            raise StrandMismatchError("series and functional live on different strands")
        if series.trunc < self.order:
            raise ValueError("series is truncated below the order of the functional")
        return sum(v * series[mono] for mono, v in self.weights.items())

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "order": self.order,
            "weights": [{"monomial": [list(c) for c in mono], "weight": v}
                        for mono, v in sorted(self.weights.items(),
                                              key=lambda kv: monomial_key(kv[0]))],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> WeightFunctional:
        if isinstance(data, str):
            data = json.loads(data)
        weights: dict[Monomial, int] = {}
        for entry in data["weights"]:
            mono = tuple(tuple(c) for c in entry["monomial"])
            weights[mono] = weights.get(mono, 0) + int(entry["weight"])
        return cls(data["strands"], data["order"], weights)


def _check_strands(f: WeightFunctional, w: BraidWord) -> None:
    if f.strands != w.strands:
        raise StrandMismatchError(
            f"functional on {f.strands} strands, braid on {w.strands}")


def evaluate(f: WeightFunctional, w: BraidWord) -> int:
    _check_strands(f, w)
    if w.is_singular:
        raise SingularLetterError("use evaluate_singular for singular braids")
    return f.pair(magnus(comb(w), f.order))


def evaluate_singular(f: WeightFunctional, w: BraidWord) -> int:
    """Value of the skein extension of f on a singular braid."""
    _check_strands(f, w)
    return f.pair(magnus_algebra(expand_singular(w), f.order))


def braids_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise StrandMismatchError(f"braids on {u.strands} and {v.strands} strands")
    return comb(u) == comb(v)


def magnus_separates(u: BraidWord, v: BraidWord, trunc: int) -> bool:
    """Whether the Magnus expansions truncated at ``trunc`` differ."""
    if u.strands != v.strands:
        raise StrandMismatchError(f"braids on {u.strands} and {v.strands} strands")
    return magnus(comb(u), trunc) != magnus(comb(v), trunc)


def n_trivial(w: BraidWord, n: int) -> bool:
    """Whether w is invisible to all invariants of type less than n.

    Equivalently w - 1 lies in the n-th power of the augmentation ideal, which
    for pure braids is the n-th term of the lower central series.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    require_pure(w)
    rest = magnus(comb(w), n) - ChordSeries.one(w.strands, n)
    low = rest.min_degree()
    return low is None or low >= n


def commutator(u: BraidWord, v: BraidWord) -> BraidWord:
    """The word u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()
