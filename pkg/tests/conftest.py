"""Shared fixtures: the catalog of constructed codes and independent oracles.

The oracles deliberately avoid the library's own code paths (dense-list
elimination, Pascal triangle, direct span enumeration) so that derived
expected values are computed twice, independently.
"""

from __future__ import annotations

import itertools

import pytest

from availcodes import (
    AvailabilityCode,
    BitMatrix,
    FiniteField,
    build_partition_family,
    functional_code,
    partition_code,
    product_code,
    projective_functionals,
)


# -- independent oracles ------------------------------------------------


def pascal_binomial(n: int, k: int) -> int:
    """Pascal-triangle evaluation, no factorials."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]
    return row[k]


def dense_rank(rows: list[list[int]]) -> int:
    """GF(2) rank by elimination on dense lists."""
    work = [r[:] for r in rows]
    ncols = len(work[0]) if work else 0
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                work[i] = [a ^ b for a, b in zip(work[i], work[rank])]
        rank += 1
    return rank


def dense_nullspace_check(rows: list[list[int]], vec: list[int]) -> bool:
    return all(sum(a * b for a, b in zip(row, vec)) % 2 == 0 for row in rows)


def span_weights(generators: list[int], n: int) -> list[int]:
    """Weight counts of the GF(2) span of bit-packed generators,
    by explicit subset enumeration (no Gray-code shortcut)."""
    seen = {0}
    for g in generators:
        seen |= {v ^ g for v in seen}
    counts = [0] * (n + 1)
    for v in seen:
        counts[v.bit_count()] += 1
    return counts


def dual_weight_counts(h: BitMatrix) -> list[int]:
    """Weight counts of the row space of H (the dual code), directly."""
    return span_weights(list(h.bits), h.cols)


def permutation_equivalent(a: BitMatrix, b: BitMatrix) -> bool:
    """Row/column-permutation equivalence by brute force (small n only)."""
    if a.rows != b.rows or a.cols != b.cols:
        return False
    target = sorted(b.bits)
    for perm in itertools.permutations(range(a.cols)):
        permuted = sorted(
            sum(((row >> j) & 1) << p for j, p in enumerate(perm)) for row in a.bits
        )
        if permuted == target:
            return True
    return False


# -- constructed-code catalog -------------------------------------------


def _catalog() -> list[AvailabilityCode]:
    codes: list[AvailabilityCode] = []
    for r, g, ts in [(1, 2, (1, 2, 3)), (1, 3, (3, 7)), (2, 2, (2, 3, 4)), (3, 2, (3,)), (4, 2, (3,))]:
        family = build_partition_family(r, g)
        for t in ts:
            codes.append(partition_code(family, t))
    for q, ts in [(2, (3,)), (3, (2, 3, 4)), (4, (3,)), (5, (3,))]:
        gf = FiniteField(q)
        for t in ts:
            codes.append(functional_code(gf, 2, 1, projective_functionals(gf, t)))
    for r, t in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (4, 2)]:
        codes.append(product_code(r, t))
    return codes


@pytest.fixture(scope="session")
def catalog() -> list[AvailabilityCode]:
    return _catalog()


@pytest.fixture(scope="session")
def k4_code() -> AvailabilityCode:
    return partition_code(build_partition_family(1, 2), 3)
