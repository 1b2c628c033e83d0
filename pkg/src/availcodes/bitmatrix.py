"""Dense matrices over GF(2) with bit-packed rows.

Each row is stored as one Python integer: bit j of ``bits[i]`` is the entry
in row i, column j.  This is the carrier for every parity-check matrix in
the package, and the home of the shared text format (``"m n"`` header
followed by m lines of '0'/'1' characters).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class MatrixFormatError(ValueError):
    """Malformed matrix text.  `line` is the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class BitMatrix:
    """An immutable rows x cols matrix over GF(2).

    Zero-row matrices are permitted so that the nullspace basis of a
    full-column-rank matrix has a natural representation.
    """

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 1:
            raise ValueError(f"bad matrix shape {self.rows}x{self.cols}")
        if len(self.bits) != self.rows:
            raise ValueError(f"expected {self.rows} packed rows, got {len(self.bits)}")
        mask = (1 << self.cols) - 1
        for i, row in enumerate(self.bits):
            if row < 0 or row & ~mask:
                raise ValueError(f"row {i} has bits outside {self.cols} columns")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[int], cols: int) -> "BitMatrix":
        bits = tuple(rows)
        return cls(len(bits), cols, bits)

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[int]]) -> "BitMatrix":
        rows = len(entries)
        if rows == 0:
            raise ValueError("from_dense needs at least one row")
        cols = len(entries[0])
        bits = []
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged dense input")
            acc = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError(f"entry {v!r} is not 0/1")
                acc |= v << j
            bits.append(acc)
        return cls(rows, cols, tuple(bits))

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]], cols: int) -> "BitMatrix":
        """Rows from 1-based coordinate sets."""
        bits = []
        for sup in supports:
            acc = 0
            for c in sup:
                if not 1 <= c <= cols:
                    raise ValueError(f"coordinate {c} outside 1..{cols}")
                acc |= 1 << (c - 1)
            bits.append(acc)
        return cls(len(bits), cols, tuple(bits))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    # -- element access ------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        return (self.bits[i] >> j) & 1

    def row_weight(self, i: int) -> int:
        return self.bits[i].bit_count()

    def column_weight(self, j: int) -> int:
        m = 1 << j
        return sum(1 for row in self.bits if row & m)

    def row_support(self, i: int) -> tuple[int, ...]:
        """1-based coordinates of the nonzero entries in row i."""
        row = self.bits[i]
        return tuple(j + 1 for j in range(self.cols) if (row >> j) & 1)

    def to_dense(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.cols)] for row in self.bits]

    # -- structure -----------------------------------------------------

    def transpose(self) -> "BitMatrix":
        if self.rows == 0:
            raise ValueError("cannot transpose a zero-row matrix")
        out = [0] * self.cols
        for i, row in enumerate(self.bits):
            while row:
                low = row & -row
                out[low.bit_length() - 1] |= 1 << i
                row ^= low
        return BitMatrix(self.cols, self.rows, tuple(out))

    def stack(self, other: "BitMatrix") -> "BitMatrix":
        if other.cols != self.cols:
            raise ValueError("column mismatch in stack")
        return BitMatrix(self.rows + other.rows, self.cols, self.bits + other.bits)

    def matvec(self, v: int) -> int:
        """M @ v over GF(2); v is a bit-packed column vector, result bit i = row i."""
        acc = 0
        for i, row in enumerate(self.bits):
            acc |= ((row & v).bit_count() & 1) << i
        return acc


def _rref(bits: Sequence[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns).

    Pivots are taken at the lowest set bit, i.e. columns are processed
    left to right with column j mapped to bit j.
    """
    echelon: list[int] = []
    pivots: list[int] = []
    for row in bits:
        for piv_row, piv_col in zip(echelon, pivots):
            if (row >> piv_col) & 1:
                row ^= piv_row
        if row == 0:
            continue
        col = (row & -row).bit_length() - 1
        pos = 0
        while pos < len(pivots) and pivots[pos] < col:
            pos += 1
        echelon.insert(pos, row)
        pivots.insert(pos, col)
        # clear the new pivot column in the rows above
        for idx in range(len(echelon)):
            if idx != pos and (echelon[idx] >> col) & 1:
                echelon[idx] ^= row
    return echelon, pivots


def rank(mat: BitMatrix) -> int:
    return len(_rref(mat.bits)[0])


def row_space_basis(mat: BitMatrix) -> BitMatrix:
    """Reduced echelon basis of the row space of `mat`."""
    echelon, _ = _rref(mat.bits)
    return BitMatrix(len(echelon), mat.cols, tuple(echelon))


def rank_and_nullspace(mat: BitMatrix) -> tuple[int, BitMatrix]:
    """Rank of `mat` and a basis of its right nullspace.

    The basis matrix has one row per free column; rank plus basis rows
    always equals `mat.cols`.  A full-column-rank input yields a basis
    with zero rows.
    """
    echelon, pivots = _rref(mat.bits)
    pivot_set = set(pivots)
    free_cols = [j for j in range(mat.cols) if j not in pivot_set]
    basis = []
    for f in free_cols:
        v = 1 << f
        for row, p in zip(echelon, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return len(pivots), BitMatrix(len(basis), mat.cols, tuple(basis))


# -- shared text format ----------------------------------------------


def parse_matrix(text: str) -> BitMatrix:
    """Parse the shared text format: `m n` header then m rows of 0/1 chars."""
    lines = text.splitlines()
    if not lines:
        raise MatrixFormatError("empty input", line=1)
    header = lines[0].split()
    if len(header) != 2:
        raise MatrixFormatError(f"header must be 'm n', got {lines[0]!r}", line=1)
    try:
        m, n = int(header[0]), int(header[1])
    except ValueError:
        raise MatrixFormatError(f"header must be two integers, got {lines[0]!r}", line=1) from None
    if m < 1 or n < 1:
        raise MatrixFormatError(f"header dimensions must be positive, got {m} {n}", line=1)
    body = lines[1:]
    if len(body) < m:
        raise MatrixFormatError(f"header declares {m} rows but only {len(body)} present", line=len(lines))
    for extra in range(m, len(body)):
        if body[extra].strip():
            raise MatrixFormatError(f"header declares {m} rows but more follow", line=extra + 2)
    bits = []
    for i in range(m):
        row = body[i]
        if len(row) != n:
            raise MatrixFormatError(f"row has {len(row)} characters, expected {n}", line=i + 2)
        acc = 0
        for j, ch in enumerate(row):
            if ch == "1":
                acc |= 1 << j
            elif ch != "0":
                raise MatrixFormatError(f"invalid character {ch!r} in row", line=i + 2)
        bits.append(acc)
    return BitMatrix(m, n, tuple(bits))


def serialize_matrix(mat: BitMatrix) -> str:
    """Inverse of parse_matrix; emits a trailing newline."""
    out = [f"{mat.rows} {mat.cols}"]
    for row in mat.bits:
        out.append("".join("1" if (row >> j) & 1 else "0" for j in range(mat.cols)))
    return "\n".join(out) + "\n"
