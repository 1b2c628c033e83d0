"""Small finite fields as explicit operation tables.

Elements of GF(q) with q = p^e are labelled 0..q-1; the base-p digits of a
label are the coefficients of the polynomial representation (so 0 is the
additive and 1 the multiplicative identity).  Prime-power orders up to 64
are supported through hard-coded irreducible polynomials.
"""

from __future__ import annotations

from typing import Sequence

MAX_ORDER = 64

# Monic irreducible polynomials x^e + c_{e-1} x^{e-1} + ... + c_0 over GF(p),
# stored as (c_0, ..., c_{e-1}).
_IRREDUCIBLE = {
    4: (1, 1),
    8: (1, 1, 0),
    9: (2, 2),
    16: (1, 1, 0, 0),
    25: (2, 4),
    27: (1, 2, 0),
    32: (1, 0, 1, 0, 0),
    49: (3, 6),
    64: (1, 1, 0, 1, 1, 0),
}


def prime_power(q: int) -> tuple[int, int] | None:
    """Decompose q as p^e for a prime p, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q and p != q:
            break
        if q % p:
            continue
        e = 0
        m = q
        while m % p == 0:
            m //= p
            e += 1
        return (p, e) if m == 1 else None
    return q, 1  # q prime


class FiniteField:
    """GF(q) for a prime power 2 <= q <= 64, with full add/mul tables."""

    def __init__(self, q: int):
        decomp = prime_power(q)
        if decomp is None:
            raise ValueError(f"{q} is not a prime power")
        if not 2 <= q <= MAX_ORDER:
            raise ValueError(f"field order must be in 2..{MAX_ORDER}, got {q}")
        self.q = q
        self.p, self.degree = decomp
        if self.degree > 1 and q not in _IRREDUCIBLE:
            raise ValueError(f"no irreducible polynomial on file for order {q}")
        self.add_table = tuple(
            tuple(self._add_raw(a, b) for b in range(q)) for a in range(q)
        )
        self.mul_table = tuple(
            tuple(self._mul_raw(a, b) for b in range(q)) for a in range(q)
        )
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self.mul_table[a][b] == 1:
                    inv[a] = b
                    break
            else:
                raise ValueError(f"element {a} of GF({q}) has no inverse")
        self._inv = tuple(inv)

    # -- raw polynomial arithmetic used to build the tables -------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.degree):
            out.append(a % self.p)
            a //= self.p
        return out

    def _value(self, digits: Sequence[int]) -> int:
        acc = 0
        for d in reversed(digits):
            acc = acc * self.p + d
        return acc

    def _add_raw(self, a: int, b: int) -> int:
        if self.degree == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._value([(x + y) % self.p for x, y in zip(da, db)])

    def _mul_raw(self, a: int, b: int) -> int:
        if self.degree == 1:
            return (a * b) % self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.degree - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        poly = _IRREDUCIBLE[self.q]
        for deg in range(len(prod) - 1, self.degree - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                # x^deg == -sum poly[i] x^(deg - degree + i)
                for i, ci in enumerate(poly):
                    pos = deg - self.degree + i
                    prod[pos] = (prod[pos] - c * ci) % self.p
        return self._value(prod[: self.degree])

    # -- public operations ----------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        row = self.add_table[a]
        return row.index(0)

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg(b)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        return self._inv[a]

    def matvec(self, mat: Sequence[Sequence[int]], vec: Sequence[int]) -> tuple[int, ...]:
        out = []
        for row in mat:
            acc = 0
            for a, x in zip(row, vec):
                acc = self.add(acc, self.mul(a, x))
            out.append(acc)
        return tuple(out)

    def __repr__(self) -> str:
        return f"FiniteField({self.q})"


def matrix_rank(field: FiniteField, rows: Sequence[Sequence[int]]) -> int:
    """Rank of a matrix over `field` by Gaussian elimination."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank_ = 0
    for col in range(ncols):
        piv = next((i for i in range(rank_, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rank_], work[piv] = work[piv], work[rank_]
        scale = field.inv(work[rank_][col])
        work[rank_] = [field.mul(scale, v) for v in work[rank_]]
        for i in range(len(work)):
            if i != rank_ and work[i][col]:
                factor = work[i][col]
                work[i] = [
                    field.sub(v, field.mul(factor, w))
                    for v, w in zip(work[i], work[rank_])
                ]
        rank_ += 1
        if rank_ == len(work):
            break
    return rank_
