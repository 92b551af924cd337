import pytest
from hypothesis import given, strategies as st

from rrlab.arith import Residue
from rrlab.powersum import cong_sum_holds, power_sum, power_sum_mod, summation_mod_p_holds


@pytest.mark.parametrize("m,n,expected", [(1, 5, 10), (3, 5, 100), (4, 1, 0), (2, 2, 1)])
def test_power_sum(m, n, expected):
    assert power_sum(m, n) == expected


@pytest.mark.parametrize("m,n,M,expected", [(3, 5, 7, 2), (5, 1, 9, 0), (2, 3, 3, 2)])
def test_power_sum_mod(m, n, M, expected):
    assert power_sum_mod(m, n, M) == Residue(expected, M)


def test_rejects_bad_query():
    with pytest.raises(ValueError):
        power_sum(0, 3)
    with pytest.raises(ValueError):
        power_sum(2, 0)


@given(st.integers(1, 12), st.integers(1, 300), st.integers(1, 10**6))
def test_modular_matches_exact(m, n, M):
    assert power_sum_mod(m, n, M).value == power_sum(m, n) % M


@given(st.integers(1, 15), st.integers(1, 200))
def test_faulhaber_cross_check(m, n):
    # S_m(n) = (B_{m+1}(n) - B_{m+1}(0)) / (m+1), with B_1 = -1/2 for the polynomial
    from fractions import Fraction
    from math import comb
    from rrlab.bernoulli import bernoulli

    def b(j):
        if j == 0:
            return Fraction(1)
        if j == 1:
            return Fraction(-1, 2)
        return Fraction(0) if j % 2 else bernoulli(j // 2)

    poly = sum(comb(m + 1, j) * b(j) * Fraction(n) ** (m + 1 - j) for j in range(m + 1))
    assert poly / (m + 1) == power_sum(m, n)


@given(st.integers(1, 8), st.integers(1, 400))
def test_cong_sum(m, n):
    assert cong_sum_holds(m, n) == (True, True)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("b", [1, 2, 3])
@pytest.mark.parametrize("l", range(1, 9))
def test_summation_mod_p(p, b, l):
    assert summation_mod_p_holds(p, b, l)
