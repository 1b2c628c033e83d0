"""Constructions of strict-availability parity-check matrices.

Three families live here: the recursive partition construction driven by
mutually orthogonal Latin squares, the fiber construction from families of
full-rank linear maps, and an axis-parity product code used as a fixture.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bitmatrix import BitMatrix
from .codes import STRICT, AvailabilityCode
from .fields import FiniteField, matrix_rank, prime_power

SIZE_LIMIT = 4096  # block length cap for all constructions


@dataclass(frozen=True)
class LatinSquare:
    """An order x order grid with symbols 1..order.

    Genuine Latin squares have each symbol once per row and column.  The two
    auxiliary matrices used by the partition construction (constant rows /
    constant columns) skip that check and are flagged `auxiliary`.
    """

    order: int
    grid: tuple[tuple[int, ...], ...]
    auxiliary: bool = False

    def __post_init__(self):
        n = self.order
        if len(self.grid) != n or any(len(row) != n for row in self.grid):
            raise ValueError("grid shape does not match order")
        symbols = set(range(1, n + 1))
        if any(v not in symbols for row in self.grid for v in row):
            raise ValueError("grid entries must lie in 1..order")
        if not self.auxiliary:
            for i, row in enumerate(self.grid):
                if set(row) != symbols:
                    raise ValueError(f"row {i} is not a permutation of 1..{n}")
            for j in range(n):
                if {self.grid[i][j] for i in range(n)} != symbols:
                    raise ValueError(f"column {j} is not a permutation of 1..{n}")

    def cells_of(self, symbol: int) -> tuple[tuple[int, int], ...]:
        """0-based (row, col) cells holding `symbol`."""
        return tuple(
            (a, b)
            for a in range(self.order)
            for b in range(self.order)
            if self.grid[a][b] == symbol
        )


def orthogonal(s1: LatinSquare, s2: LatinSquare) -> bool:
    """True if superposing the two squares yields order^2 distinct pairs."""
    n = s1.order
    pairs = {
        (s1.grid[a][b], s2.grid[a][b]) for a in range(n) for b in range(n)
    }
    return len(pairs) == n * n


@dataclass(frozen=True)
class MOLSSet:
    """A family of pairwise orthogonal squares of one order.

    `squares[0]` is the constant-row auxiliary matrix, `squares[-1]` the
    constant-column one; the genuine Latin squares sit in between.  The
    partition construction consumes the last f = count(genuine) + 1 squares.
    """

    order: int
    squares: tuple[LatinSquare, ...]

    def __post_init__(self):
        for s1, s2 in itertools.combinations(self.squares, 2):
            if not orthogonal(s1, s2):
                raise ValueError(f"squares of order {self.order} are not pairwise orthogonal")

    @property
    def num_genuine(self) -> int:
        return len(self.squares) - 2

    @property
    def f(self) -> int:
        """Number of squares the refinement loop uses per parent partition."""
        return self.num_genuine + 1

    @property
    def loop_squares(self) -> tuple[LatinSquare, ...]:
        """The genuine squares followed by the constant-column matrix."""
        return self.squares[1:]


def generate_mols(q: int) -> MOLSSet:
    """q - 1 mutually orthogonal Latin squares of prime-power order q,
    via L_a(i, j) = a*i + j over GF(q), plus the two auxiliary matrices."""
    if prime_power(q) is None:
        raise ValueError(
            f"order {q} is not a prime power; no orthogonal-square family on file"
        )
    gf = FiniteField(q)
    squares = [
        LatinSquare(q, tuple(tuple(i + 1 for _ in range(q)) for i in range(q)), auxiliary=True)
    ]
    for a in range(1, q):
        grid = tuple(
            tuple(gf.add(gf.mul(a, i), j) + 1 for j in range(q)) for i in range(q)
        )
        squares.append(LatinSquare(q, grid))
    squares.append(
        LatinSquare(q, tuple(tuple(j + 1 for j in range(q)) for _ in range(q)), auxiliary=True)
    )
    return MOLSSet(q, tuple(squares))


@dataclass(frozen=True)
class PartitionFamily:
    """Resolutions of [n] into blocks of size r+1 with cross-partition
    block intersections of at most one point."""

    n: int
    block_size: int
    partitions: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        for part in self.partitions:
            seen: set[int] = set()
            for block in part:
                if len(block) != self.block_size:
                    raise ValueError("block of wrong size")
                seen.update(block)
            if seen != set(range(1, self.n + 1)):
                raise ValueError("partition does not cover the ground set")

    def __len__(self) -> int:
        return len(self.partitions)


def build_partition_family(r: int, g: int) -> PartitionFamily:
    """All (f^g - 1)/(f - 1) partitions of [(r+1)^g] from the recursive
    Latin-square refinement, natural partition first."""
    q = r + 1
    if prime_power(q) is None:
        raise ValueError(f"r+1 = {q} must be a prime power for the refinement step")
    if g < 1:
        raise ValueError(f"levels g must be >= 1, got {g}")
    n = q**g
    if n > SIZE_LIMIT:
        raise ValueError(f"ground set {n} exceeds limit {SIZE_LIMIT}")
    mols = generate_mols(q)

    def build(level: int) -> list[tuple[tuple[int, ...], ...]]:
        if level == 1:
            return [(tuple(range(1, q + 1)),)]
        prev = build(level - 1)
        n_cur = q**level
        natural = tuple(
            tuple(range(x * q + 1, (x + 1) * q)) + ((x + 1) * q,) for x in range(n_cur // q)
        )
        out = [natural]
        for parent in prev:
            for square in mols.loop_squares:
                blocks = []
                for parent_block in parent:
                    # rows of U are the natural blocks named by the parent block
                    u = [natural[s - 1] for s in parent_block]
                    for x in range(1, q + 1):
                        blocks.append(
                            tuple(sorted(u[a][b] for a, b in square.cells_of(x)))
                        )
                out.append(tuple(blocks))
        return out

    return PartitionFamily(n=n, block_size=q, partitions=tuple(build(g)))


def partition_code(
    family: PartitionFamily, t: int, choice: list[int] | None = None
) -> AvailabilityCode:
    """Parity-check matrix with one row per block of t chosen partitions.

    `choice` lists 1-based partition indices; the default is the first t
    partitions in construction order.
    """
    if choice is None:
        choice = list(range(1, t + 1))
    if len(choice) != t:
        raise ValueError(f"need exactly t={t} partition indices, got {len(choice)}")
    if t > len(family):
        raise ValueError(f"t={t} exceeds the {len(family)} available partitions")
    if any(not 1 <= c <= len(family) for c in choice):
        raise ValueError("partition index out of range")
    supports = [
        block for idx in choice for block in family.partitions[idx - 1]
    ]
    h = BitMatrix.from_supports(supports, family.n)
    return AvailabilityCode(
        H=h,
        n=family.n,
        r=family.block_size - 1,
        t=t,
        kind=STRICT,
        construction="partition",
        parameters={"g": _levels(family), "choice": choice},
    )


def _levels(family: PartitionFamily) -> int:
    g = 0
    n = family.n
    while n > 1:
        n //= family.block_size
        g += 1
    return g


def projective_functionals(gf: FiniteField, t: int) -> list[tuple[tuple[int, ...], ...]]:
    """t pairwise-independent nonzero 1x2 maps over GF(q); at most q+1 exist."""
    if t > gf.q + 1:
        raise ValueError(f"only {gf.q + 1} pairwise-independent directions exist, t={t}")
    directions = [((1, 0),), ((0, 1),)] + [((1, a),) for a in range(1, gf.q)]
    return directions[:t]


def functional_code(
    gf: FiniteField,
    n1: int,
    m1: int,
    maps: list[tuple[tuple[int, ...], ...]],
) -> AvailabilityCode:
    """Binary parity matrix whose row (i, y) marks the fiber {x : A_i x = y}.

    Each map is an m1 x n1 matrix over the field; maps must individually
    have rank m1 and pairwise stack to rank n1, which makes distinct fibers
    meet in at most one point.
    """
    if not (2 * m1 >= n1 and m1 < n1):
        raise ValueError(f"need 2*m1 >= n1 and m1 < n1, got m1={m1}, n1={n1}")
    t = len(maps)
    for i, a in enumerate(maps, start=1):
        if len(a) != m1 or any(len(row) != n1 for row in a):
            raise ValueError(f"map {i} is not {m1}x{n1}")
        if matrix_rank(gf, a) != m1:
            raise ValueError(f"map {i} does not have full rank {m1}")
    for i, j in itertools.combinations(range(1, t + 1), 2):
        stacked = list(maps[i - 1]) + list(maps[j - 1])
        if matrix_rank(gf, stacked) != n1:
            raise ValueError(f"stacked maps ({i}, {j}) do not reach rank {n1}")
    q = gf.q
    n = q**n1
    if n > SIZE_LIMIT:
        raise ValueError(f"block length {n} exceeds limit {SIZE_LIMIT}")
    l = q**m1
    rows = [0] * (t * l)
    for col in range(n):
        x = _radix_vector(col, q, n1)
        for i in range(t):
            y = gf.matvec(maps[i], x)
            rows[i * l + _radix_value(y, q)] |= 1 << col
    h = BitMatrix.from_rows(rows, n)
    return AvailabilityCode(
        H=h,
        n=n,
        r=q ** (n1 - m1) - 1,
        t=t,
        kind=STRICT,
        construction="functional",
        parameters={"q": q, "n1": n1, "m1": m1, "maps": [list(map(list, a)) for a in maps]},
    )


def _radix_vector(value: int, q: int, length: int) -> tuple[int, ...]:
    """Digits of `value` base q, most significant first."""
    digits = []
    for _ in range(length):
        digits.append(value % q)
        value //= q
    return tuple(reversed(digits))


def _radix_value(vec: tuple[int, ...], q: int) -> int:
    acc = 0
    for d in vec:
        acc = acc * q + d
    return acc


def product_code(r: int, t: int) -> AvailabilityCode:
    """t-fold single-parity product code on the (r+1)^t hypercube.

    Every coordinate lies on one axis line per dimension; the lines are the
    parity rows, so the result is strict with the declared (r, t).
    """
    q = r + 1
    n = q**t
    if n > SIZE_LIMIT:
        raise ValueError(f"block length {n} exceeds limit {SIZE_LIMIT}")
    rows = []
    for axis in range(t):
        stride = q**axis
        outer = q ** (t - axis - 1)
        for hi in range(outer):
            for lo in range(stride):
                base = hi * stride * q + lo
                acc = 0
                for v in range(q):
                    acc |= 1 << (base + v * stride)
                rows.append(acc)
    h = BitMatrix.from_rows(rows, n)
    return AvailabilityCode(
        H=h,
        n=n,
        r=r,
        t=t,
        kind=STRICT,
        construction="product",
        parameters={},
    )
