"""Checks and exact brute-force analyses for availability parity matrices.

Coordinates and row indices in reports and traces are 1-based, matching the
convention used for partition blocks.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from .bitmatrix import BitMatrix, rank_and_nullspace, row_space_basis
from .codes import AvailabilityCode
from .weights import ENUMERATION_LIMIT, EnumerationBudgetError, _gray_weight_counts

GHW_MAX_DUAL_DIM = 16
GHW_MAX_LEVEL = 3
GHW_SUBSPACE_BUDGET = 2_000_000


@dataclass(frozen=True)
class StrictCheckReport:
    """Outcome of the strict row/column-regularity check."""

    passed: bool
    row_weight_violations: tuple[int, ...]
    column_weight_violations: tuple[int, ...]
    intersection_violations: tuple[tuple[int, int], ...]
    balance_ok: bool

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "row_weight_violations": list(self.row_weight_violations),
            "column_weight_violations": list(self.column_weight_violations),
            "intersection_violations": [list(p) for p in self.intersection_violations],
            "balance_ok": self.balance_ok,
        }


def check_strict_availability(h: BitMatrix, r: int, t: int) -> StrictCheckReport:
    """Strict availability: every row weight r+1, every column weight t,
    pairwise row supports meeting in at most one point, and m(r+1) = nt."""
    bad_rows = tuple(
        i + 1 for i in range(h.rows) if h.row_weight(i) != r + 1
    )
    bad_cols = tuple(
        j + 1 for j in range(h.cols) if h.column_weight(j) != t
    )
    bad_pairs = []
    for i, j in itertools.combinations(range(h.rows), 2):
        if (h.bits[i] & h.bits[j]).bit_count() > 1:
            bad_pairs.append((i + 1, j + 1))
    balance_ok = h.rows * (r + 1) == h.cols * t
    passed = not bad_rows and not bad_cols and not bad_pairs and balance_ok
    return StrictCheckReport(passed, bad_rows, bad_cols, tuple(bad_pairs), balance_ok)


@dataclass(frozen=True)
class AvailabilityCheckReport:
    """Per-column outcome of the general availability search."""

    passed: bool
    column_ok: tuple[bool, ...]

    @property
    def failing_columns(self) -> tuple[int, ...]:
        return tuple(j + 1 for j, ok in enumerate(self.column_ok) if not ok)

    def to_json(self) -> dict:
        return {"pass": self.passed, "failing_columns": list(self.failing_columns)}


def check_availability(h_des: BitMatrix, r: int, t: int) -> AvailabilityCheckReport:
    """For each column, search for t rows of weight <= r+1 through it whose
    supports pairwise intersect exactly in that column."""
    light_rows = [row for i, row in enumerate(h_des.bits) if row.bit_count() <= r + 1]
    column_ok = []
    for j in range(h_des.cols):
        bit = 1 << j
        cands = [row for row in light_rows if row & bit]
        column_ok.append(_find_orthogonal_subset(cands, bit, t))
    return AvailabilityCheckReport(all(column_ok), tuple(column_ok))


def _find_orthogonal_subset(cands: list[int], pivot_bit: int, t: int) -> bool:
    """Exact search for t candidate rows pairwise meeting only at pivot_bit."""

    def rec(start: int, chosen: int, union: int) -> bool:
        if chosen == t:
            return True
        for idx in range(start, len(cands)):
            if len(cands) - idx < t - chosen:
                return False
            row = cands[idx]
            if row & union == pivot_bit:
                if rec(idx + 1, chosen + 1, union | row):
                    return True
        return False

    return rec(0, 0, pivot_bit)


def min_distance_bruteforce(code: AvailabilityCode) -> int | float:
    """Exact minimum weight over nonzero codewords; math.inf for k = 0."""
    rank_, basis = rank_and_nullspace(code.H)
    k = code.n - rank_
    if k > ENUMERATION_LIMIT:
        raise EnumerationBudgetError(
            f"dimension {k} exceeds enumeration limit {ENUMERATION_LIMIT}"
        )
    if k == 0:
        return math.inf
    counts = _gray_weight_counts(basis, code.n)
    return next(w for w in range(1, code.n + 1) if counts[w])


@dataclass(frozen=True)
class GHWResult:
    """Minimum support size over `dimension`-dimensional dual subspaces."""

    dimension: int
    support: int


def gaussian_binomial(m: int, i: int) -> int:
    """Number of i-dimensional subspaces of a binary m-dimensional space."""
    if i < 0 or i > m:
        return 0
    num = den = 1
    for a in range(i):
        num *= (1 << (m - a)) - 1
        den *= (1 << (i - a)) - 1
    return num // den


def dual_ghw_bruteforce(code: AvailabilityCode, dimension: int) -> GHWResult:
    """Exact generalized Hamming weight of the dual at the given dimension.

    Enumerates the i-dimensional subspaces of the row space of H once each,
    via reduced-echelon coefficient patterns over an echelon dual basis.
    """
    basis = row_space_basis(code.H)
    rho = basis.rows
    if dimension < 1 or dimension > rho:
        raise EnumerationBudgetError(
            f"no {dimension}-dimensional subspace of a {rho}-dimensional dual"
        )
    if rho > GHW_MAX_DUAL_DIM or dimension > GHW_MAX_LEVEL:
        raise EnumerationBudgetError(
            f"dual dimension {rho} / level {dimension} outside the enumeration budget"
        )
    count = gaussian_binomial(rho, dimension)
    if count > GHW_SUBSPACE_BUDGET:
        raise EnumerationBudgetError(
            f"{count} subspaces exceed budget {GHW_SUBSPACE_BUDGET}"
        )
    vecs = basis.bits
    best = code.n + 1
    for pivots in itertools.combinations(range(rho), dimension):
        free_cols = [
            [c for c in range(p + 1, rho) if c not in pivots] for p in pivots
        ]
        nfree = sum(len(f) for f in free_cols)
        for assignment in range(1 << nfree):
            union = 0
            pos = 0
            for u in range(dimension):
                v = vecs[pivots[u]]
                for c in free_cols[u]:
                    if (assignment >> pos) & 1:
                        v ^= vecs[c]
                    pos += 1
                union |= v
            w = union.bit_count()
            if w < best:
                best = w
    return GHWResult(dimension=dimension, support=best)


@dataclass(frozen=True)
class GreedyTrace:
    """Record of the covering walk: chosen coordinates, rows gained per step,
    and the resulting dimension bound n - |S|."""

    sigma: tuple[int, ...]
    g: tuple[int, ...]
    final_bound: int
    flags: tuple[tuple[int, str], ...] = field(default=())

    @property
    def disconnected(self) -> bool:
        return any(kind == "disconnected" for _, kind in self.flags)

    @property
    def stalled(self) -> bool:
        return any(kind == "stall" for _, kind in self.flags)

    def to_json(self) -> dict:
        return {
            "sigma": list(self.sigma),
            "g": list(self.g),
            "final_bound": self.final_bound,
            "flags": [[step, kind] for step, kind in self.flags],
        }


def greedy_cover(
    code: AvailabilityCode,
    start: int = 1,
    tiebreak: str = "lowest",
    seed: int | None = None,
) -> GreedyTrace:
    """Greedy row-covering walk over the parity matrix.

    At every step past the first, the next coordinate maximizes
    |D_j| * I(|D_j| <= 2), where D_j counts already-collected rows through
    column j; coordinates whose rows are all collected score zero (for
    column weight 3 the indicator does this by itself, and the filter keeps
    every step row-gaining in general, which is what makes the final bound
    n - |S| >= k sound).  Ties go to the lowest index by default, or to a
    seeded random choice with tiebreak="random".  When every candidate
    scores zero but rows remain, the walk either continues on a partially
    covered coordinate (flagged "stall") or restarts on an untouched
    component (flagged "disconnected").
    """
    if tiebreak not in ("lowest", "random"):
        raise ValueError(f"tiebreak must be 'lowest' or 'random', got {tiebreak!r}")
    rng = random.Random(seed) if tiebreak == "random" else None
    h = code.H
    n, m = h.cols, h.rows
    if not 1 <= start <= n:
        raise ValueError(f"start coordinate {start} outside 1..{n}")
    if any(row == 0 for row in h.bits):
        raise ValueError("matrix has an all-zero row; the walk cannot cover it")
    rows_through = [[] for _ in range(n)]
    for i, row in enumerate(h.bits):
        rb = row
        while rb:
            low = rb & -rb
            rows_through[low.bit_length() - 1].append(i)
            rb ^= low
    in_p = [False] * m
    p_count = 0
    in_s = [False] * n
    sigma: list[int] = []
    gains: list[int] = []
    flags: list[tuple[int, str]] = []

    def take(j: int) -> None:
        nonlocal p_count
        in_s[j] = True
        sigma.append(j + 1)
        gained = 0
        for i in rows_through[j]:
            if not in_p[i]:
                in_p[i] = True
                gained += 1
        p_count += gained
        gains.append(gained)

    take(start - 1)
    while p_count < m:
        d = [0] * n
        for i, row in enumerate(h.bits):
            if in_p[i]:
                rb = row
                while rb:
                    low = rb & -rb
                    d[low.bit_length() - 1] += 1
                    rb ^= low
        candidates = [j for j in range(n) if not in_s[j]]
        scores = {
            j: d[j] if d[j] <= 2 and d[j] < len(rows_through[j]) else 0
            for j in candidates
        }
        best = max(scores.values())
        if best > 0:
            pool = [j for j in candidates if scores[j] == best]
        else:
            step = len(sigma) + 1
            stall_pool = [
                j
                for j in candidates
                if d[j] >= 1 and any(not in_p[i] for i in rows_through[j])
            ]
            if stall_pool:
                top = max(d[j] for j in stall_pool)
                pool = [j for j in stall_pool if d[j] == top]
                flags.append((step, "stall"))
            else:
                pool = [
                    j
                    for j in candidates
                    if d[j] == 0 and any(not in_p[i] for i in rows_through[j])
                ]
                flags.append((step, "disconnected"))
        take(min(pool) if rng is None else rng.choice(sorted(pool)))
    return GreedyTrace(
        sigma=tuple(sigma),
        g=tuple(gains),
        final_bound=n - len(sigma),
        flags=tuple(flags),
    )
