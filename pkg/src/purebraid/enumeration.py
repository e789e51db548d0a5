"""
Counting finite type invariants of pure braids.

All arithmetic is exact integer arithmetic.  The Moebius sums are checked
for divisibility before dividing; a remainder means a bug, never rounding.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Sequence


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def mobius(n: int) -> int:
    _require(n >= 1, f"mobius needs n >= 1, got {n}")
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _mobius_average(n: int, term: Callable[[int], int]) -> int:
    total = sum(mobius(n // m) * term(m) for m in divisors(n))
    q, r = divmod(total, n)
    if r:
        raise ArithmeticError(f"Moebius sum {total} is not divisible by {n}")
    return q


def witt_rank(i: int, n: int) -> int:
    """Rank of the n-th lower central quotient of a free group of rank i."""
    _require(i >= 1 and n >= 1, f"witt_rank needs i, n >= 1, got ({i}, {n})")
    return _mobius_average(n, lambda m: i ** m)


def phi(k: int, n: int) -> int:
    """Indecomposable type n invariants of P_k modulo type n-1."""
    _require(k >= 2 and n >= 1, f"phi needs k >= 2, n >= 1, got ({k}, {n})")
    return _mobius_average(n, lambda m: sum(i ** m for i in range(1, k)))


def sur(m: int, j: int) -> int:
    """Number of surjections from an m-set onto a j-set; sur(m, 0) = 0."""
    _require(m >= 1 and j >= 0, f"sur needs m >= 1, j >= 0, got ({m}, {j})")
    if j == 0:
        return 0
    return sum((-1) ** t * comb(j, t) * (j - t) ** m for t in range(j + 1))


def psi(k: int, n: int) -> int:
    """phi reduced further by the invariants induced from fewer strands."""
    _require(k >= 2 and n >= 1, f"psi needs k >= 2, n >= 1, got ({k}, {n})")
    return _mobius_average(n, lambda m: sur(m, k - 1))


def dim_A(k: int, n: int) -> int:
    """Number of sorted monomials of degree n on k strands.

    Sum over compositions n = n_{k-1} + ... + n_1 of prod i^{n_i}, built up one
    block at a time.
    """
    _require(k >= 2 and n >= 0, f"dim_A needs k >= 2, n >= 0, got ({k}, {n})")
    counts = [1] + [0] * n      # counts[d]: monomials of degree d in blocks seen so far
    for i in range(1, k):
        counts = [sum(counts[d - e] * i ** e for e in range(d + 1)) for d in range(n + 1)]
    return counts[n]


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind via S(n,k) = k S(n-1,k) + S(n-1,k-1)."""
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def binomial_transform_check(l: int, n: int) -> bool:
    """phi(l, n) == sum_k C(l, k) psi(k, n), with psi(1, n) = 0."""
    _require(l >= 2 and n >= 1, f"need l >= 2, n >= 1, got ({l}, {n})")
    return phi(l, n) == sum(comb(l, k) * psi(k, n) for k in range(2, l + 1))


def lemma53_check(l: int, m: int) -> bool:
    """sum_{i<l} i^m == sum_{j<=l} C(l, j) sur(m, j - 1)."""
    _require(l >= 2 and m >= 1, f"need l >= 2, m >= 1, got ({l}, {m})")
    left = sum(i ** m for i in range(1, l))
    right = sum(comb(l, j) * sur(m, j - 1) for j in range(1, l + 1))
    return left == right


KINDS: dict[str, Callable[[int, int], int]] = {"dimA": dim_A, "phi": phi, "psi": psi}


@dataclass(frozen=True)
class DimensionTable:
    kind: str
    ks: tuple[int, ...]
    ns: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, kn: tuple[int, int]) -> int:
        k, n = kn
        return self.entries[self.ks.index(k)][self.ns.index(n)]

    def to_text(self) -> str:
        head = ["k\\n"] + [str(n) for n in self.ns]
        rows = [head] + [[str(k)] + [str(v) for v in row] for k, row in zip(self.ks, self.entries)]
        widths = [max(len(r[c]) for r in rows) for c in range(len(head))]
        lines = [" ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in rows]
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k"] + list(self.ns))
        for k, row in zip(self.ks, self.entries):
            writer.writerow([k] + list(row))
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "k": list(self.ks),
            "n": list(self.ns),
            "entries": [[str(v) for v in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> DimensionTable:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["kind"], tuple(data["k"]), tuple(data["n"]),
                   tuple(tuple(int(v) for v in row) for row in data["entries"]))


def make_table(kind: str, ks: Sequence[int], ns: Sequence[int]) -> DimensionTable:
    if kind not in KINDS:
        raise ValueError(f"unknown table kind {kind!r}; expected one of {sorted(KINDS)}")
    fn = KINDS[kind]
    entries = tuple(tuple(fn(k, n) for n in ns) for k in ks)
    return DimensionTable(kind, tuple(ks), tuple(ns), entries)
