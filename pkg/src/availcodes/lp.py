"""Linear program over weight-distribution variables and its dimension bound.

The model maximizes 1 + sum A_i over A_{t+1}..A_n subject to nonnegativity
of the code's and the dual's weight counts plus the structural rows coming
from sums of one or two parity rows.  Constraints stated on dual counts are
folded into A-space through the weight-distribution transform, so every
coefficient is an exact integer; the default solver is exact rational.

Sums of three or more parity rows would contribute further valid rows;
they are deliberately not modeled here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bounds import BoundResult
from .weights import binomial, krawtchouk

DEFAULT_PIVOT_LIMIT = 200_000
FLOAT_TOL = 1e-9

LE = "<="
GE = ">="


class PivotLimitError(RuntimeError):
    """The simplex exceeded its pivot budget (distinct from infeasibility)."""


class InfeasibleRelaxationError(ValueError):
    """The relaxation admits no point: no code exists under these constraints."""


@dataclass(frozen=True)
class LPConstraint:
    coeffs: tuple[Fraction, ...]
    sense: str
    rhs: Fraction
    label: str = ""


@dataclass(frozen=True)
class LPModel:
    """Variables are A_i for i = t+1..n; lower weights are pinned to zero
    because the minimum distance is at least t+1.  Nonnegativity of the
    variables is implicit in the solver's standard form."""

    num_vars: int
    objective_offset: Fraction
    objective: tuple[Fraction, ...]
    constraints: tuple[LPConstraint, ...]
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        for c in self.constraints:
            if len(c.coeffs) != self.num_vars:
                raise ValueError(f"constraint {c.label!r} has wrong arity")

    @property
    def weight_indices(self) -> range:
        t = self.meta["t"]
        return range(t + 1, self.meta["n"] + 1)


@dataclass(frozen=True)
class LPSolution:
    status: str  # optimal | infeasible | unbounded
    value: Fraction | float | None
    variables: dict


def build_lp(q: int, n: int, r: int, t: int, strengthen: bool = False) -> LPModel:
    """Assemble the weight-distribution LP at (q, n, r, t).

    Rows: dual-count nonnegativity for every transform degree j = 0..n, the
    two-row-sum counts at weights 2r (only for r > 2) and 2(r+1), and the
    row-count lower bound on the dual count at weight r+1.  `strengthen`
    adds the optional cap A_i <= (q-1)^i C(n, i).
    """
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
    if n < t:
        raise ValueError(f"need n >= t, got n={n}, t={t}")
    if n < r + 1:
        raise ValueError(f"need n >= r+1, got n={n}, r={r}")
    if (n * t) % (r + 1):
        raise ValueError(f"r+1 = {r + 1} must divide nt = {n * t}")
    m = n * t // (r + 1)
    idx = list(range(t + 1, n + 1))
    nv = len(idx)
    constraints: list[LPConstraint] = []

    for j in range(n + 1):
        coeffs = tuple(Fraction(krawtchouk(q, n, j, i)) for i in idx)
        rhs = Fraction(-((q - 1) ** j) * binomial(n, j))
        constraints.append(LPConstraint(coeffs, GE, rhs, label=f"dual_nonneg_{j}"))

    pair_count = n * binomial(t, 2)
    if r > 2 and 2 * r <= n:
        coeffs = tuple(
            Fraction(pair_count - krawtchouk(q, n, 2 * r, i)) for i in idx
        )
        rhs = Fraction((q - 1) ** (2 * r) * binomial(n, 2 * r) - pair_count)
        constraints.append(LPConstraint(coeffs, LE, rhs, label="pair_sum_2r"))
    if r >= 2 and 2 * (r + 1) <= n:
        # distinctness of disjoint-pair sums needs row weight >= 3: with
        # weight-2 rows two disjoint pairs can sum to the same codeword
        lower = binomial(m, 2) - pair_count
        coeffs = tuple(
            Fraction(lower - krawtchouk(q, n, 2 * (r + 1), i)) for i in idx
        )
        rhs = Fraction((q - 1) ** (2 * (r + 1)) * binomial(n, 2 * (r + 1)) - lower)
        constraints.append(LPConstraint(coeffs, LE, rhs, label="pair_sum_2r2"))

    # row-count bound on the dual count at weight r+1, folded into A-space
    coeffs = tuple(Fraction(m - krawtchouk(q, n, r + 1, i)) for i in idx)
    rhs = Fraction((q - 1) ** (r + 1) * binomial(n, r + 1) - m)
    constraints.append(LPConstraint(coeffs, LE, rhs, label="row_count"))

    if strengthen:
        for pos, i in enumerate(idx):
            coeffs = tuple(
                Fraction(1 if p == pos else 0) for p in range(nv)
            )
            rhs = Fraction((q - 1) ** i * binomial(n, i))
            constraints.append(LPConstraint(coeffs, LE, rhs, label=f"cap_{i}"))

    return LPModel(
        num_vars=nv,
        objective_offset=Fraction(1),
        objective=tuple(Fraction(1) for _ in idx),
        constraints=tuple(constraints),
        meta={"q": q, "n": n, "r": r, "t": t, "m": m, "strengthen": strengthen},
    )


def point_violations(model: LPModel, a_by_weight: dict[int, int | Fraction]) -> list[str]:
    """Labels of constraints an A-vector violates (exact arithmetic).

    `a_by_weight` maps weight i to A_i for i = t+1..n; raises if a positive
    count sits at a pinned weight 1..t.
    """
    t, n = model.meta["t"], model.meta["n"]
    for i in range(1, t + 1):
        if a_by_weight.get(i):
            raise ValueError(f"A_{i} must be zero: weights 1..{t} are pinned")
    x = [Fraction(a_by_weight.get(i, 0)) for i in model.weight_indices]
    bad = [f"nonneg_{i}" for i, v in zip(model.weight_indices, x) if v < 0]
    for c in model.constraints:
        lhs = sum(cf * v for cf, v in zip(c.coeffs, x))
        if c.sense == LE and lhs > c.rhs:
            bad.append(c.label)
        elif c.sense == GE and lhs < c.rhs:
            bad.append(c.label)
    return bad


# -- two-phase simplex --------------------------------------------------


def _simplex_max(
    obj: Sequence,
    rows: list[list],
    rhs: list,
    *,
    exact: bool,
    pivot_limit: int,
) -> tuple[str, object, list]:
    """maximize obj.x  s.t.  rows[i].x <= rhs[i], x >= 0  (rhs of any sign).

    Bland's rule on both the entering and leaving choices; two phases with
    artificial variables for rows whose right side is negative.
    """
    zero = Fraction(0) if exact else 0.0
    one = Fraction(1) if exact else 1.0
    tol = zero if exact else FLOAT_TOL
    nv = len(obj)
    m = len(rows)
    neg_rows = [i for i in range(m) if rhs[i] < -tol]
    n_art = len(neg_rows)
    total = nv + m + n_art
    tableau: list[list] = []
    basis: list[int] = []
    art_pos = {row_i: nv + m + a for a, row_i in enumerate(neg_rows)}
    for i in range(m):
        coeffs = list(rows[i])
        b = rhs[i]
        slack = one
        if i in art_pos:
            coeffs = [-c for c in coeffs]
            b = -b
            slack = -one
        row = coeffs + [zero] * (m + n_art) + [b]
        row[nv + i] = slack
        if i in art_pos:
            row[art_pos[i]] = one
            basis.append(art_pos[i])
        else:
            basis.append(nv + i)
        tableau.append(row)

    pivots_used = 0

    def pivot(pr: int, pc: int, obj_row: list) -> None:
        nonlocal pivots_used
        pivots_used += 1
        if pivots_used > pivot_limit:
            raise PivotLimitError(f"exceeded {pivot_limit} pivots")
        piv = tableau[pr][pc]
        inv = one / piv
        tableau[pr] = [v * inv for v in tableau[pr]]
        for i in range(m):
            if i != pr:
                f = tableau[i][pc]
                if f != zero:
                    tableau[i] = [
                        v - f * w for v, w in zip(tableau[i], tableau[pr])
                    ]
        f = obj_row[pc]
        if f != zero:
            obj_row[:] = [v - f * w for v, w in zip(obj_row, tableau[pr])]
        basis[pr] = pc

    def run(obj_row: list, active: int) -> str:
        while True:
            enter = next(
                (j for j in range(active) if obj_row[j] < -tol), None
            )
            if enter is None:
                return "optimal"
            leave = None
            best_ratio = None
            for i in range(m):
                a = tableau[i][enter]
                if a > tol:
                    ratio = tableau[i][-1] / a
                    if (
                        leave is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and basis[i] < basis[leave])
                    ):
                        best_ratio = ratio
                        leave = i
            if leave is None:
                return "unbounded"
            pivot(leave, enter, obj_row)

    def make_obj_row(cost: list) -> list:
        row = [-c for c in cost] + [zero]
        for i, b in enumerate(basis):
            cb = cost[b]
            if cb != zero:
                row = [v + cb * w for v, w in zip(row, tableau[i])]
        return row

    if n_art:
        cost1 = [zero] * (nv + m) + [-one] * n_art
        obj_row = make_obj_row(cost1)
        status = run(obj_row, total)
        if status == "unbounded":  # phase 1 is bounded by construction
            raise PivotLimitError("phase 1 reported unbounded")
        feas_tol = zero if exact else 1e-7
        if obj_row[-1] < -feas_tol:
            return "infeasible", None, []
        # drive leftover artificial basics out, dropping redundant rows
        for i in range(m):
            if basis[i] >= nv + m:
                enter = next(
                    (j for j in range(nv + m) if abs(tableau[i][j]) > tol), None
                )
                if enter is not None:
                    pivot(i, enter, obj_row)
                else:
                    tableau[i] = [zero] * total + [zero]
    cost2 = list(obj) + [zero] * (m + n_art)
    obj_row = make_obj_row(cost2)
    status = run(obj_row, nv + m)
    if status == "unbounded":
        return "unbounded", None, []
    x = [zero] * nv
    for i, b in enumerate(basis):
        if b < nv:
            x[b] = tableau[i][-1]
    return "optimal", obj_row[-1], x


def solve_lp(
    model: LPModel, mode: str = "exact", pivot_limit: int = DEFAULT_PIVOT_LIMIT
) -> LPSolution:
    """Solve the model; `mode` is "exact" (rational) or "float".

    Float mode normalizes each row by its largest absolute coefficient and
    works to a 1e-9 feasibility tolerance.
    """
    if mode not in ("exact", "float"):
        raise ValueError(f"mode must be 'exact' or 'float', got {mode!r}")
    exact = mode == "exact"
    rows: list[list] = []
    rhs: list = []
    for c in model.constraints:
        coeffs = list(c.coeffs)
        b = c.rhs
        if c.sense == GE:
            coeffs = [-v for v in coeffs]
            b = -b
        rows.append(coeffs)
        rhs.append(b)
    if exact:
        obj = list(model.objective)
    else:
        obj = [float(v) for v in model.objective]
        scaled_rows = []
        scaled_rhs = []
        for coeffs, b in zip(rows, rhs):
            fr = [float(v) for v in coeffs]
            fb = float(b)
            scale = max([abs(v) for v in fr] + [abs(fb), 1.0])
            scaled_rows.append([v / scale for v in fr])
            scaled_rhs.append(fb / scale)
        rows, rhs = scaled_rows, scaled_rhs
    status, value, x = _simplex_max(
        obj, rows, rhs, exact=exact, pivot_limit=pivot_limit
    )
    if status != "optimal":
        return LPSolution(status=status, value=None, variables={})
    variables = {i: v for i, v in zip(model.weight_indices, x)}
    return LPSolution(
        status="optimal", value=model.objective_offset + value, variables=variables
    )


def lp_dimension_bound(
    q: int,
    n: int,
    r: int,
    t: int,
    mode: str = "exact",
    strengthen: bool = False,
) -> BoundResult:
    """k <= log_q(M) where M is the LP optimum; the exact M rides along
    in the diagnostics.  Raises InfeasibleRelaxationError when even the
    relaxation is empty."""
    model = build_lp(q, n, r, t, strengthen=strengthen)
    sol = solve_lp(model, mode=mode)
    if sol.status == "infeasible":
        raise InfeasibleRelaxationError(
            f"no code exists under relaxation at (q={q}, n={n}, r={r}, t={t})"
        )
    if sol.status != "optimal":
        raise RuntimeError(f"unexpected LP status {sol.status}")
    m_value = sol.value
    bound = math.log(float(m_value), q) if float(m_value) > 0 else 0.0
    diagnostics = {"status": "optimal", "mode": mode}
    if isinstance(m_value, Fraction):
        diagnostics["M"] = f"{m_value.numerator}/{m_value.denominator}"
    else:
        diagnostics["M"] = repr(m_value)
    return BoundResult(
        "lp_dim",
        {"q": q, "n": n, "r": r, "t": t},
        None,
        "dimension",
        value=bound,
        diagnostics=diagnostics,
    )
