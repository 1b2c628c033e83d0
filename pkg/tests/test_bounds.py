import itertools
import math
from fractions import Fraction

import pytest

from availcodes import (
    BoundNotApplicableError,
    binomial,
    dim_huang,
    dmin_m_delta,
    dmin_m_delta_max,
    dmin_shortening,
    dmin_tamo_barg,
    dmin_wang,
    ghw_profile_linear,
    ghw_profile_m_delta,
    ghw_profile_simple,
    k_opt_griesmer,
    rate_best_known,
    rate_greedy_t3,
    rate_tamo_barg,
    rate_transpose,
    rate_transpose_step,
    rate_wzl_achievable,
)


# -- rate bounds ---------------------------------------------------------


def test_rate_tamo_barg_values():
    assert rate_tamo_barg(5, 1).value_exact == Fraction(5, 6)
    assert rate_tamo_barg(2, 3).value_exact == Fraction(16, 35)
    assert rate_tamo_barg(3, 4).value_exact == Fraction(243, 455)


def test_rate_best_known_branches():
    assert rate_best_known(2, 2).value_exact == Fraction(1, 2)
    assert rate_best_known(3, 3).value_exact == Fraction(9, 16)
    assert rate_best_known(2, 4).value_exact == rate_tamo_barg(2, 4).value_exact
    with pytest.raises(ValueError):
        rate_best_known(2, 1)


def test_rate_greedy_t3_checkpoint():
    result = rate_greedy_t3(20, 3)
    assert result.value_exact == Fraction(11, 20)
    assert result.diagnostics == {"m": 15, "L1_prime": 4, "L2": 4, "L1": 4}


def test_rate_greedy_t3_tighter_than_product_bound():
    assert rate_greedy_t3(20, 3).value_exact < rate_tamo_barg(3, 3).value_exact


def test_rate_greedy_t3_k4_sound():
    assert rate_greedy_t3(4, 1).value_exact >= Fraction(1, 4)


def test_rate_greedy_t3_divisibility_guard():
    with pytest.raises(ValueError):
        rate_greedy_t3(20, 6)  # 7 does not divide 60


def test_rate_transpose_values():
    assert rate_transpose(4, 4).value_exact == Fraction(1093, 1820)
    assert rate_transpose(3, 4).value_exact == rate_tamo_barg(3, 4).value_exact


def test_rate_transpose_t2_specialization():
    for r in range(1, 51):
        assert rate_transpose(r, 2).value_exact == Fraction(r, r + 2)


def test_rate_transpose_tighter_for_t4():
    for r in range(3, 21):
        tr = rate_transpose(r, 4).value_exact
        tb = rate_tamo_barg(r, 4).value_exact
        assert tr <= tb
        if r >= 4:
            assert tr < tb


def test_rate_transpose_step_identities():
    assert rate_transpose_step(2, 3, Fraction(1)) == Fraction(1)
    inner = rate_tamo_barg(2, 4).value_exact  # parameters swapped: (t-1, r+1)
    assert rate_transpose_step(3, 3, inner) == rate_transpose(3, 3).value_exact
    with pytest.raises(ValueError):
        rate_transpose_step(2, 3, Fraction(3, 2))


def test_rate_transpose_step_involution():
    # (r, t) -> (t-1, r+1) is an involution, so two steps with a genuine
    # rate value in between return the starting value
    for r, t in [(2, 3), (3, 4), (5, 2)]:
        x = rate_tamo_barg(r, t).value_exact
        assert rate_transpose_step(r, t, rate_transpose_step(t - 1, r + 1, x)) == x


def test_rate_wzl_reference():
    assert rate_wzl_achievable(3, 3).value_exact == Fraction(1, 2)
    assert rate_wzl_achievable(2, 3).value_exact == Fraction(2, 5)
    for r, t in itertools.product(range(1, 12), range(1, 7)):
        line = rate_wzl_achievable(r, t).value_exact
        bound = rate_tamo_barg(r, t).value_exact
        # the achievable line meets the product bound exactly at r = 1
        # (telescoping to 1/(t+1)) and at t = 1; strictly below elsewhere
        if r >= 2 and t >= 2:
            assert line < bound
        else:
            assert line == bound


# -- dual-support profiles -------------------------------------------------


def test_profile_simple_checkpoint():
    assert ghw_profile_simple(9, 2, 2).e == (3, 5, 7, 8, 9)


def test_profile_simple_length_and_anchor():
    profile = ghw_profile_simple(2, 1, 2)
    assert profile.b == math.ceil(2 * (1 - Fraction(1, 3))) == 2
    assert profile.e == (2, 2)
    assert ghw_profile_simple(4, 1, 3).e == (2, 3, 4)


def test_profile_simple_nondecreasing_sweep():
    for t in range(2, 7):
        for r in range(1, 21):
            for n in range(r + 1, 301, 7):
                e = ghw_profile_simple(n, r, t).e
                assert all(a <= b for a, b in zip(e, e[1:])), (n, r, t)
                assert e[-1] == n


def test_profile_m_delta_checkpoint():
    profile = ghw_profile_m_delta(9, 2, 5, 2)
    assert profile.e == (3, 5, 7, 9, 9)
    assert profile.J == (0, 1, 1, 1, 3)


def test_profile_m_delta_base_only():
    assert ghw_profile_m_delta(9, 2, 1, 3).e == (3,)


def test_profile_m_delta_delta_zero_stalls():
    profile = ghw_profile_m_delta(20, 3, 10, 0)
    assert profile.e[0] == 4
    assert all(a <= b for a, b in zip(profile.e, profile.e[1:]))
    assert profile.e[-1] == 4  # no column budget, no growth


def test_profile_m_delta_nondecreasing_grid():
    for n, r in [(20, 3), (35, 4), (9, 2)]:
        for m_dim in range(1, n // 2):
            for delta in range(0, 6):
                e = ghw_profile_m_delta(n, r, m_dim, delta).e
                assert all(a <= b for a, b in zip(e, e[1:]))
                assert e[-1] <= n


def test_profile_linear():
    profile = ghw_profile_linear(20, 3, 5)
    assert profile.e == (4, 7, 10, 13, 16)
    capped = ghw_profile_linear(10, 3)
    assert capped.e[-1] <= 10


# -- minimum-distance bounds ------------------------------------------------


def test_dmin_tamo_barg_values():
    assert dmin_tamo_barg(17, 1, 3, 2).value_exact == 17
    assert dmin_tamo_barg(20, 10, 2, 2).value_exact == 5
    assert dmin_tamo_barg(9, 4, 2, 2).value_exact == 5


def test_dmin_wang_values():
    assert dmin_wang(20, 10, 2, 2).value_exact == 5
    assert dmin_wang(9, 4, 2, 2).value_exact == 4
    assert dmin_wang(12, 1, 3, 2).value_exact == 12  # k=1 collapses to n


def test_dmin_shortening_product_code_point():
    profile = ghw_profile_simple(9, 2, 2)
    result = dmin_shortening(9, 4, 2, 2, profile)
    assert result.value_exact == 4
    assert result.diagnostics["S"] == [1, 2]


def test_dmin_shortening_linear_profile_matches_substitution():
    # with e_i = i*r + 1 the selector is {i : i(r-1)+1 < k} and the inner
    # point is (n - ir - 1, k - (i(r-1)+1))
    n, k, r, t = 30, 9, 3, 2
    profile = ghw_profile_linear(n, r)
    expected = min(
        int(dmin_tamo_barg(n - i * r - 1, k - (i * (r - 1) + 1), r, t).value_exact)
        for i in range(1, profile.b + 1)
        if i * (r - 1) + 1 < k and i <= n - k
    )
    assert dmin_shortening(n, k, r, t, profile).value_exact == expected


def test_dmin_shortening_empty_selector_falls_back():
    profile = ghw_profile_simple(9, 2, 2)
    result = dmin_shortening(9, 1, 2, 2, profile)
    assert result.value_exact == dmin_tamo_barg(9, 1, 2, 2).value_exact == 9


def test_dmin_shortening_never_below_one():
    profile = ghw_profile_simple(40, 1, 2)
    assert dmin_shortening(40, 26, 1, 2, profile).value_exact >= 1


def test_dmin_m_delta_single_entry():
    # M = 1 keeps only the base entry e_1 = r+1
    result = dmin_m_delta(12, 6, 2, 2, 1, 2)
    assert result.value_exact == dmin_tamo_barg(12 - 3, 6 + 1 - 3, 2, 2).value_exact


def test_dmin_m_delta_max_examples():
    value = dmin_m_delta_max(20, 10, 3, 3).value_exact
    tb = dmin_tamo_barg(20, 10, 3, 3).value_exact
    wang = dmin_wang(20, 10, 3, 3).value_exact
    assert value <= min(tb, wang)
    # max dominates each grid point
    assert value >= dmin_m_delta(20, 10, 3, 3, 10, 3).value_exact
    assert value >= dmin_m_delta(20, 10, 3, 3, 9, 0).value_exact


def test_dmin_m_delta_max_degenerate_grid():
    # n(1 - R') = n - k makes the M-grid a single point
    n, r, t = 9, 2, 2
    m_lo = math.ceil(n * (1 - Fraction(r, r + 2)))
    k = n - m_lo
    result = dmin_m_delta_max(n, k, r, t)
    assert result.diagnostics["argmax_M"] == m_lo


def test_dmin_m_delta_max_not_applicable():
    with pytest.raises(BoundNotApplicableError):
        dmin_m_delta_max(9, 8, 2, 2)  # n-k = 1 < ceil(n(1-R'))


# -- dimension bounds ---------------------------------------------------------


def test_k_opt_griesmer_values():
    assert k_opt_griesmer(2, 7, 3) == 4
    assert k_opt_griesmer(2, 3, 3) == 1
    assert k_opt_griesmer(3, 11, 1) == 11
    assert k_opt_griesmer(2, 2, 3) == 0


def test_dim_huang_vacuous_oracle():
    assert dim_huang(15, 3, 2, 2, k_opt=lambda q, n, d: 15).value_exact == 15


def test_dim_huang_griesmer_point():
    result = dim_huang(15, 3, 2, 2)
    assert 1 <= result.value_exact <= 15
    assert result.value_exact == 8  # frozen from the collapsed-search evaluation


def test_dim_huang_matches_vector_enumeration():
    # oracle: enumerate multiplicity vectors y in [t]^x directly instead of
    # collapsing to their sum
    def direct(n, d, r, t):
        for k_star in range(n, 0, -1):
            x_max = math.ceil((k_star - 1) / ((r - 1) * t + 1))
            ok = True
            for x in range(1, x_max + 1):
                for y in itertools.product(range(1, t + 1), repeat=x):
                    a = sum((r - 1) * v for v in y) + x
                    b = sum(r * v for v in y) + x
                    if a >= k_star or n - b < 0:
                        continue
                    if a + k_opt_griesmer(2, n - b, d) < k_star:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return k_star
        return 0

    for n, d, r, t in [(15, 3, 2, 2), (12, 4, 2, 3), (16, 4, 3, 3), (10, 5, 3, 2)]:
        assert dim_huang(n, d, r, t).value_exact == direct(n, d, r, t), (n, d, r, t)


def test_float_tracks_exact_everywhere():
    results = [
        rate_tamo_barg(7, 4),
        rate_transpose(9, 5),
        rate_greedy_t3(20, 3),
        dmin_wang(30, 12, 3, 3),
    ]
    for res in results:
        assert abs(res.value - float(res.value_exact)) <= 1e-12 * abs(res.value)


def test_dim_huang_monotone_in_distance():
    values = [int(dim_huang(20, d, 2, 2).value_exact) for d in range(1, 10)]
    assert all(a >= b for a, b in zip(values, values[1:]))
    assert all(v <= 20 for v in values)
