"""Rate, minimum-distance and dimension bounds for availability codes.

All arithmetic is exact rational; floats appear only in serialized output.
Floor and ceiling follow the mathematical convention (toward -inf / +inf),
including for negative arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable


class BoundNotApplicableError(ValueError):
    """The bound's parameter region is empty at the requested point."""


@dataclass(frozen=True)
class BoundResult:
    """A named bound value with exact and float forms."""

    name: str
    params: dict
    value_exact: Fraction | None
    kind: str  # rate | distance | dimension
    value: float = field(default=math.nan)
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.value_exact is not None and math.isnan(self.value):
            object.__setattr__(self, "value", float(self.value_exact))

    def to_json(self) -> dict:
        exact = None
        if self.value_exact is not None:
            exact = f"{self.value_exact.numerator}/{self.value_exact.denominator}"
        doc = {
            "name": self.name,
            "params": dict(self.params),
            "exact": exact,
            "value": self.value,
            "kind": self.kind,
        }
        if self.diagnostics:
            doc["diagnostics"] = dict(self.diagnostics)
        return doc


@dataclass(frozen=True)
class GHWBoundProfile:
    """Upper bounds e_1..e_b on the support sizes of dual subspaces."""

    n: int
    r: int
    t: int | None
    variant: str  # simple | m_delta | linear
    e: tuple[int, ...]
    params: dict = field(default_factory=dict)
    J: tuple[int, ...] | None = None

    def __post_init__(self):
        if any(b > a for a, b in zip(self.e[1:], self.e)):
            raise ValueError("profile must be nondecreasing")
        if self.e and self.e[-1] > self.n:
            raise ValueError("profile exceeds the block length")

    @property
    def b(self) -> int:
        return len(self.e)


# -- rate bounds ------------------------------------------------------


def rate_tamo_barg(r: int, t: int) -> BoundResult:
    """Product bound 1 / prod_{j=1..t} (1 + 1/(jr))."""
    if r < 1 or t < 1:
        raise ValueError(f"need r >= 1 and t >= 1, got r={r}, t={t}")
    prod = Fraction(1)
    for j in range(1, t + 1):
        prod *= 1 + Fraction(1, j * r)
    return BoundResult("tamo_barg", {"r": r, "t": t}, 1 / prod, "rate")


def rate_best_known(r: int, t: int) -> BoundResult:
    """Piecewise selector of the tightest closed-form rate bound:
    r/(r+2) at t=2, r^2/(r+1)^2 at t=3, the product bound above t=3."""
    if t < 2:
        raise ValueError(f"selector defined for t >= 2 only, got t={t}")
    if r < 1:
        raise ValueError(f"need r >= 1, got r={r}")
    if t == 2:
        value = Fraction(r, r + 2)
    elif t == 3:
        value = Fraction(r * r, (r + 1) ** 2)
    else:
        value = rate_tamo_barg(r, t).value_exact
    return BoundResult("best_known", {"r": r, "t": t}, value, "rate")


def rate_greedy_t3(n: int, r: int) -> BoundResult:
    """Rate bound for strict t=3 codes with a connected Tanner graph,
    via the covering-walk analysis; diagnostics carry m, L1', L2, L1."""
    if n < 1 or r < 1:
        raise ValueError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    if (3 * n) % (r + 1):
        raise ValueError(f"r+1 = {r + 1} must divide 3n = {3 * n}")
    m = 3 * n // (r + 1)
    l1_prime = math.ceil(Fraction((2 * r - 1) * m, 3 * (r + 2)) - Fraction(1, r + 2) - 1)
    l2 = (m - 3 - l1_prime) // 2
    l1 = m - 3 - 2 * l2
    value = 1 - Fraction(3 * (1 + l1 + l2), (r + 1) * (3 + l1 + 2 * l2))
    return BoundResult(
        "greedy_t3",
        {"n": n, "r": r, "t": 3},
        value,
        "rate",
        diagnostics={"m": m, "L1_prime": l1_prime, "L2": l2, "L1": l1},
    )


def rate_transpose_step(r: int, t: int, inner_bound: Fraction) -> Fraction:
    """One step of the transpose recursion: 1 - t/(r+1) + t/(r+1) * inner,
    where inner bounds the rate at the swapped parameters (t-1, r+1)."""
    inner = Fraction(inner_bound)
    if not 0 <= inner <= 1:
        raise ValueError(f"inner bound must lie in [0, 1], got {inner}")
    return 1 - Fraction(t, r + 1) + Fraction(t, r + 1) * inner


def rate_transpose(r: int, t: int) -> BoundResult:
    """Transpose-trick rate bound for strict codes: one recursion step with
    the product bound at the swapped parameters (t-1, r+1)."""
    if r < 1 or t < 2:
        raise ValueError(f"need r >= 1 and t >= 2, got r={r}, t={t}")
    inner = rate_tamo_barg(t - 1, r + 1).value_exact
    value = rate_transpose_step(r, t, inner)
    return BoundResult("transpose", {"r": r, "t": t}, value, "rate")


def rate_wzl_achievable(r: int, t: int) -> BoundResult:
    """Reference achievable rate r/(r+t) used as the baseline in figures."""
    return BoundResult("wzl_achievable", {"r": r, "t": t}, Fraction(r, r + t), "rate")


# -- dual-support profiles --------------------------------------------


def ghw_profile_simple(n: int, r: int, t: int) -> GHWBoundProfile:
    """Backward recursion e_{i-1} = min(e_i, e_i - ceil(2 e_i / i) + r + 1)
    from e_b = n, with b = ceil(n (1 - best-known-rate))."""
    if n < r + 1:
        raise ValueError(f"need n >= r+1, got n={n}, r={r}")
    b = math.ceil(n * (1 - rate_best_known(r, t).value_exact))
    e = [0] * (b + 1)
    e[b] = n
    for i in range(b, 1, -1):
        e[i - 1] = min(e[i], e[i] - _ceil_div(2 * e[i], i) + r + 1)
    return GHWBoundProfile(n=n, r=r, t=t, variant="simple", e=tuple(e[1:]))


def ghw_profile_m_delta(n: int, r: int, m_dim: int, delta: int) -> GHWBoundProfile:
    """Forward recursion for a code whose local parities admit a full-rank
    generator with row weights <= r+1 and column weights <= delta; m_dim is
    that generator's rank.  e values are clamped at n and kept
    nondecreasing (a guaranteed overlap larger than a row is truncated)."""
    if m_dim < 1:
        raise ValueError(f"need M >= 1, got {m_dim}")
    if delta < 0:
        raise ValueError(f"need delta >= 0, got {delta}")
    e = [r + 1]
    j_seq = [0]
    for i in range(2, m_dim + 1):
        prev = e[-1]
        remaining = m_dim - i + 1
        f_cap = n - prev
        j1 = r + 1 - (delta * (n - prev)) // remaining
        j2 = _ceil_div(2 * prev - (i - 1) - (i - 1) * (r + 1), remaining)
        wide = r + 1 - j_seq[-1] >= 2
        if f_cap >= m_dim:
            j_i = max(j1, j2, 1 if wide else 0)
        else:
            j_i = max(j1, 1 if wide else 0)
        j_seq.append(j_i)
        e.append(min(n, prev + r + 1 - min(j_i, r + 1)))
    return GHWBoundProfile(
        n=n,
        r=r,
        t=None,
        variant="m_delta",
        e=tuple(e),
        params={"M": m_dim, "delta": delta},
        J=tuple(j_seq),
    )


def ghw_profile_linear(n: int, r: int, b: int | None = None) -> GHWBoundProfile:
    """The straight-line profile e_i = i*r + 1 (valid for r >= 2, t >= 2),
    truncated so that e stays within the block length."""
    cap = (n - 1) // r if r > 0 else n
    if b is None:
        b = cap
    b = min(b, cap)
    if b < 1:
        raise ValueError("block length too small for a linear profile")
    return GHWBoundProfile(
        n=n, r=r, t=None, variant="linear", e=tuple(i * r + 1 for i in range(1, b + 1))
    )


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


# -- minimum-distance bounds ------------------------------------------


def _clamp_distance(value: int, k: int) -> int:
    # distances of nonzero codes are >= 1; extreme parameters can push the
    # closed forms nonpositive
    return max(value, 1) if k >= 1 else value


def dmin_tamo_barg(n: int, k: int, r: int, t: int) -> BoundResult:
    """n - sum_{i=0..t} floor((k-1)/r^i)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    value = n - sum((k - 1) // r**i for i in range(t + 1))
    return BoundResult(
        "tamo_barg_dmin",
        {"n": n, "k": k, "r": r, "t": t},
        Fraction(_clamp_distance(value, k)),
        "distance",
    )


def dmin_wang(n: int, k: int, r: int, t: int) -> BoundResult:
    """n - k + 2 - ceil((t(k-1)+1) / (t(r-1)+1))."""
    if r < 1 or k < 1:
        raise ValueError(f"need r >= 1 and k >= 1, got r={r}, k={k}")
    value = n - k + 2 - _ceil_div(t * (k - 1) + 1, t * (r - 1) + 1)
    return BoundResult(
        "wang_dmin",
        {"n": n, "k": k, "r": r, "t": t},
        Fraction(_clamp_distance(value, k)),
        "distance",
    )


def dmin_shortening(
    n: int,
    k: int,
    r: int,
    t: int,
    profile: GHWBoundProfile,
    inner: Callable[[int, int, int, int], BoundResult] = dmin_tamo_barg,
) -> BoundResult:
    """Shortening bound min over {i : e_i - i < k} of inner(n-e_i, k+i-e_i, r, t).

    Indices are capped at n - k (shortening cannot remove more information
    than the code carries); an empty index set yields the inner bound at
    the unshortened point.
    """
    if profile.n != n or profile.r != r:
        raise ValueError("profile parameters do not match the bound point")
    chosen = [
        (i, e) for i, e in enumerate(profile.e, start=1) if e - i < k and i <= n - k
    ]
    if not chosen:
        result = inner(n, k, r, t)
        value = int(result.value_exact)
    else:
        value = min(
            int(inner(n - e, k + i - e, r, t).value_exact) for i, e in chosen
        )
    return BoundResult(
        f"shortening_dmin[{profile.variant}]",
        {"n": n, "k": k, "r": r, "t": t, **profile.params},
        Fraction(_clamp_distance(value, k)),
        "distance",
        diagnostics={"S": [i for i, _ in chosen]},
    )


def dmin_m_delta(n: int, k: int, r: int, t: int, m_dim: int, delta: int) -> BoundResult:
    """Shortening bound driven by the (M, delta) dual-support profile."""
    profile = ghw_profile_m_delta(n, r, m_dim, delta)
    result = dmin_shortening(n, k, r, t, profile)
    return BoundResult(
        "m_delta_dmin",
        {"n": n, "k": k, "r": r, "t": t, "M": m_dim, "delta": delta},
        result.value_exact,
        "distance",
        diagnostics=result.diagnostics,
    )


def dmin_m_delta_max(n: int, k: int, r: int, t: int) -> BoundResult:
    """Parameter-free version: exhaustive maximum of the (M, delta) bound
    over ceil(n(1-best_known)) <= M <= n-k and 0 <= delta <= n-k."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    m_lo = math.ceil(n * (1 - rate_best_known(r, t).value_exact))
    m_hi = n - k
    if m_lo > m_hi:
        raise BoundNotApplicableError(
            f"no admissible M: ceil(n(1-R)) = {m_lo} exceeds n-k = {m_hi}"
        )
    best = None
    best_point = None
    for m_dim in range(m_lo, m_hi + 1):
        for delta in range(0, n - k + 1):
            value = dmin_m_delta(n, k, r, t, m_dim, delta).value_exact
            if best is None or value > best:
                best = value
                best_point = (m_dim, delta)
    return BoundResult(
        "m_delta_max_dmin",
        {"n": n, "k": k, "r": r, "t": t},
        best,
        "distance",
        diagnostics={"argmax_M": best_point[0], "argmax_delta": best_point[1]},
    )


# -- dimension bounds --------------------------------------------------


def k_opt_griesmer(q: int, n: int, d: int) -> int:
    """Largest k with sum_{i<k} ceil(d/q^i) <= n; 0 when d > n."""
    if n < 0 or d < 1:
        raise ValueError(f"need n >= 0 and d >= 1, got n={n}, d={d}")
    total = 0
    k = 0
    while True:
        total += _ceil_div(d, q**k)
        if total > n:
            return k
        k += 1


def dim_huang(
    n: int,
    d: int,
    r: int,
    t: int,
    k_opt: Callable[[int, int, int], int] = k_opt_griesmer,
    q: int = 2,
) -> BoundResult:
    """Field-size-dependent dimension bound with a pluggable best-code oracle.

    Searches downward for the largest k* satisfying
    k* <= min over {x >= 1, s in [x, tx], (r-1)s + x < k*, rs + x <= n}
    of (r-1)s + x + k_opt(q, n - rs - x, d).  The minimized expression
    depends on the multiplicity vector only through its sum s, so the
    search runs over s directly.
    """
    if d < 1:
        raise ValueError(f"need d >= 1, got d={d}")
    if r < 1 or t < 1 or n < 1:
        raise ValueError(f"need n, r, t >= 1, got n={n}, r={r}, t={t}")
    for k_star in range(n, 0, -1):
        x_max = _ceil_div(k_star - 1, (r - 1) * t + 1)
        ok = True
        for x in range(1, x_max + 1):
            for s in range(x, t * x + 1):
                a = (r - 1) * s + x
                if a >= k_star:
                    break
                residual = n - (r * s + x)
                if residual < 0:
                    break
                if a + k_opt(q, residual, d) < k_star:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return BoundResult(
                "huang_dim",
                {"n": n, "d": d, "r": r, "t": t, "q": q},
                Fraction(k_star),
                "dimension",
            )
    return BoundResult(
        "huang_dim", {"n": n, "d": d, "r": r, "t": t, "q": q}, Fraction(0), "dimension"
    )


# -- soundness helpers -------------------------------------------------


def applicable_rate_bounds(n: int, r: int, t: int) -> list[BoundResult]:
    """Every rate bound defined at (n, r, t); used by the soundness sweeps."""
    out = [rate_tamo_barg(r, t)]
    if t >= 2:
        out.append(rate_best_known(r, t))
        out.append(rate_transpose(r, t))
    if t == 3 and (3 * n) % (r + 1) == 0:
        out.append(rate_greedy_t3(n, r))
    return out


def applicable_distance_bounds(n: int, k: int, r: int, t: int) -> list[BoundResult]:
    """Every distance bound defined at (n, k, r, t)."""
    out = [dmin_tamo_barg(n, k, r, t), dmin_wang(n, k, r, t)]
    if t >= 2 and n >= r + 1:
        out.append(dmin_shortening(n, k, r, t, ghw_profile_simple(n, r, t)))
        out.append(dmin_m_delta(n, k, r, t, n - k, t))
        try:
            out.append(dmin_m_delta_max(n, k, r, t))
        except BoundNotApplicableError:
            pass
    return out
