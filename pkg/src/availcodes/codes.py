"""Availability codes: a parity-check matrix with declared (n, r, t)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bitmatrix import BitMatrix, rank

STRICT = "strict"
GENERAL = "general"


@dataclass
class AvailabilityCode:
    """A binary code given as the nullspace of a parity-check matrix H.

    `r` (locality) and `t` (availability) are declared parameters; they may
    be None for matrices under analysis.  `kind` records whether the matrix
    is claimed to satisfy the strict row/column-regularity conditions.
    The dimension k = n - rank(H) is computed lazily.
    """

    H: BitMatrix
    n: int
    r: int | None = None
    t: int | None = None
    kind: str = GENERAL
    construction: str = ""
    parameters: dict = field(default_factory=dict)
    _k: int | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.n != self.H.cols:
            raise ValueError(f"declared n={self.n} but H has {self.H.cols} columns")
        if self.kind not in (STRICT, GENERAL):
            raise ValueError(f"kind must be strict or general, got {self.kind!r}")

    @property
    def m(self) -> int:
        return self.H.rows

    @property
    def k(self) -> int:
        if self._k is None:
            self._k = self.n - rank(self.H)
        return self._k

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    def reference_rate(self) -> Fraction | None:
        """The r/(r+t) baseline achievable rate, when (r, t) are declared."""
        if self.r is None or self.t is None:
            return None
        return Fraction(self.r, self.r + self.t)

    def sidecar(self) -> dict:
        """JSON-ready description written next to serialized matrices."""
        doc = {
            "n": self.n,
            "m": self.m,
            "r": self.r,
            "t": self.t,
            "kind": self.kind,
            "k": self.k,
            "construction": self.construction,
            "parameters": self.parameters,
        }
        ref = self.reference_rate()
        if ref is not None:
            doc["rate"] = f"{self.rate.numerator}/{self.rate.denominator}"
            doc["exceeds_reference_rate"] = self.rate > ref
        return doc
