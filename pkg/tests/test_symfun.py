from fractions import Fraction
from itertools import combinations
from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from wonderkit.symfun import (LaurentPoly, binomial_row, brute_force_scalar_match,
                              elem_sym, elementary_all, lambda2_lemma_check, newton_check,
                              power_sum, trace_identity_lemma_check, wedge2)

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def test_all_ones():
    for n in range(1, 7):
        x = [1] * n
        assert all(power_sum(x, k) == n for k in range(1, 5))
        assert [elem_sym(x, k) for k in range(n + 1)] == binomial_row(n)
        assert newton_check(x)


@given(st.lists(fracs, min_size=1, max_size=6))
def test_newton_random(x):
    assert newton_check(x)


@given(st.lists(fracs, min_size=0, max_size=6))
def test_elementary_against_combinations(x):
    # oracle: coefficients of prod(1 + x_i t) by direct subset sums
    for k in range(len(x) + 1):
        assert elem_sym(x, k) == sum((prod(c) for c in combinations(x, k)), Fraction(0))


def test_newton_over_laurent_polynomials():
    q = LaurentPoly.monomial
    x = [q(1), q(-1), q(2) + 1, LaurentPoly(3)]
    assert newton_check(x)


def test_laurent_arithmetic():
    q = LaurentPoly.monomial(1)
    assert (q + 1) ** 2 == q * q + 2 * q + 1
    assert (q - q).is_zero()
    assert LaurentPoly.monomial(-1) * q == 1
    with pytest.raises(ValueError):
        q ** -1


def test_trace_lemma_examples():
    v = trace_identity_lemma_check([1, 2], [2, 4])
    assert v.hypotheses_hold and v.scalar == Fraction(1, 2) and v.conjugate
    v = trace_identity_lemma_check([3, 1, 2], [1, 2, 3])
    assert v.scalar == 1
    v = trace_identity_lemma_check([1, 2], [1, 3])
    assert not v.hypotheses_hold and v.failing_e <= 2


def test_trace_lemma_rejects_degenerate():
    with pytest.raises(ValueError):
        trace_identity_lemma_check([1, -1], [1, 2])
    with pytest.raises(ValueError):
        trace_identity_lemma_check([0, 0], [1, 2])


@given(st.lists(fracs, min_size=1, max_size=5), fracs.filter(bool), st.randoms())
def test_trace_lemma_equivalent_to_brute_force(a1, t, rnd):
    if sum(a1) == 0:
        return
    a2 = [x * t for x in a1]
    rnd.shuffle(a2)
    v = trace_identity_lemma_check(a1, a2)
    assert v.hypotheses_hold and v.conjugate
    assert v.scalar == brute_force_scalar_match(a1, a2) == 1 / t


@given(st.lists(fracs, min_size=1, max_size=5), st.lists(fracs, min_size=1, max_size=5))
def test_trace_lemma_random_pairs(a1, a2):
    if len(a1) != len(a2) or sum(a1) == 0 or not any(a2):
        return
    v = trace_identity_lemma_check(a1, a2)
    assert v.hypotheses_hold == (brute_force_scalar_match(a1, a2) is not None)


def test_lambda2_example():
    v = lambda2_lemma_check([1, -1, 2, -2], [2, -2, 1, -1])
    assert v.hypotheses_hold and v.conclusion_holds and v.steps_hold


def test_lambda2_hypothesis_failure_reported():
    v = lambda2_lemma_check([1, 2], [2, 1])
    assert not v.hypotheses_hold and "odd" in v.hypothesis_failure
    v = lambda2_lemma_check([1, -1, 2, -2], [1, -1, 3, -3])
    assert not v.hypotheses_hold and v.conclusion_holds is None


def test_lambda2_step_identity_has_factor_two():
    # p_{2m}(x) = p_m(x)^2 - 2 p_m(wedge^2 x) on a concrete vector
    x = [Fraction(1), Fraction(-1), Fraction(3), Fraction(-3)]
    for m in (1, 2):
        assert power_sum(x, 2 * m) == power_sum(x, m) ** 2 - 2 * power_sum(wedge2(x), m)
        assert power_sum(x, 2 * m) != power_sum(x, m) ** 2 - power_sum(wedge2(x), m)


def test_elementary_all_length():
    assert elementary_all([1, 2, 3]) == [1, 6, 11, 6]
    assert elementary_all([1, 2, 3], 1) == [1, 6]
    assert binomial_row(4) == [comb(4, k) for k in range(5)]
