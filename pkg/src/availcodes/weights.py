"""Exact combinatorics: binomials, Krawtchouk polynomials, weight
distributions and their transform to the dual distribution.

Everything here is arbitrary-precision integer arithmetic; no floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bitmatrix import BitMatrix, rank_and_nullspace

ENUMERATION_LIMIT = 28  # codeword enumeration is 2^k; keep k at or below this


class EnumerationBudgetError(ValueError):
    """An exhaustive enumeration would exceed the configured budget."""


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 when k > n or k < 0."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def krawtchouk(q: int, n: int, j: int, i: int) -> int:
    """K_j(i) = sum_a (-1)^a (q-1)^(j-a) C(i,a) C(n-i,j-a) over a q-ary alphabet."""
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    if not 0 <= j <= n:
        raise ValueError(f"degree j={j} outside 0..{n}")
    if not 0 <= i <= n:
        raise ValueError(f"point i={i} outside 0..{n}")
    acc = 0
    for a in range(j + 1):
        term = (q - 1) ** (j - a) * binomial(i, a) * binomial(n - i, j - a)
        acc += -term if a & 1 else term
    return acc


@dataclass(frozen=True)
class WeightDistribution:
    """Exact codeword-weight counts A_0..A_n, optionally with the dual's B_0..B_n."""

    n: int
    q: int
    A: tuple[int, ...]
    B: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.A) != self.n + 1:
            raise ValueError(f"A must have {self.n + 1} entries")
        if self.A[0] != 1:
            raise ValueError("A_0 must be 1")
        if any(a < 0 for a in self.A):
            raise ValueError("weight counts must be nonnegative")
        if not _is_power(sum(self.A), self.q):
            raise ValueError(f"sum(A)={sum(self.A)} is not a power of {self.q}")
        if self.B is not None:
            if len(self.B) != self.n + 1 or self.B[0] != 1:
                raise ValueError("B must have n+1 entries with B_0 = 1")
            if sum(self.A) * sum(self.B) != self.q**self.n:
                raise ValueError("sizes of code and dual do not multiply to q^n")

    @property
    def dimension(self) -> int:
        return _log_base(sum(self.A), self.q)


def _is_power(m: int, q: int) -> bool:
    if m < 1:
        return False
    while m % q == 0:
        m //= q
    return m == 1


def _log_base(m: int, q: int) -> int:
    k = 0
    while m > 1:
        m //= q
        k += 1
    return k


def _gray_weight_counts(basis: BitMatrix, n: int) -> list[int]:
    """Weight counts of the span of `basis`, by Gray-code enumeration."""
    k = basis.rows
    counts = [0] * (n + 1)
    counts[0] = 1
    vecs = basis.bits
    cw = 0
    for s in range(1, 1 << k):
        cw ^= vecs[(s & -s).bit_length() - 1]
        counts[cw.bit_count()] += 1
    return counts


def weight_distribution(code) -> WeightDistribution:
    """Exact weight distribution of a binary code given by its parity matrix.

    Enumerates all 2^k codewords of the nullspace; guarded at k <= 28.
    """
    h = code.H
    rank_, basis = rank_and_nullspace(h)
    k = h.cols - rank_
    if k > ENUMERATION_LIMIT:
        raise EnumerationBudgetError(
            f"dimension {k} exceeds enumeration limit {ENUMERATION_LIMIT}"
        )
    counts = _gray_weight_counts(basis, h.cols)
    return WeightDistribution(n=h.cols, q=2, A=tuple(counts))


def macwilliams_vector(n: int, q: int, A: tuple[int, ...]) -> tuple[int, ...]:
    """B_j = (1/sum A) * sum_i A_i K_j(i); exact, rejects non-integer results."""
    size = sum(A)
    B = []
    for j in range(n + 1):
        s = sum(A[i] * krawtchouk(q, n, j, i) for i in range(n + 1) if A[i])
        if s < 0 or s % size:
            raise ValueError(
                f"invalid weight distribution: B_{j} = {s}/{size} is not a nonnegative integer"
            )
        B.append(s // size)
    return tuple(B)


def macwilliams_transform(dist: WeightDistribution) -> WeightDistribution:
    """Fill in the dual weight distribution of `dist` via the transform."""
    B = macwilliams_vector(dist.n, dist.q, dist.A)
    return WeightDistribution(n=dist.n, q=dist.q, A=dist.A, B=B)
