from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from rrlab.fpd import (
    BoundError,
    CoprimalityError,
    DivisibilityError,
    FixedPointData,
    FixedPointDataError,
    IntegralityError,
    RiemannHurwitzError,
    branch_lcm,
    delta,
    enumerate_fpd,
    format_fpd,
    invert,
    lambda_value,
    multiplicities,
    multiplicities_fk,
    orbit_grouping,
    validate,
)


def brute_force_data(g, n):
    """All (h, branch) by scanning every multiset of beta/alpha pairs up to the q bound."""
    pairs = [(b, a) for a in range(2, n + 1) if n % a == 0 for b in range(1, a) if gcd(a, b) == 1]
    qmax = (4 * g - 4) // n + 4
    found = set()
    for q in range(qmax + 1):
        for combo in combinations_with_replacement(pairs, q):
            if sum(Fraction(b, a) for b, a in combo).denominator != 1:
                continue
            # 2g - 2 = n(2h - 2) + n * sum(1 - 1/a)
            rest = Fraction(2 * g - 2) - n * sum((1 - Fraction(1, a) for _, a in combo), Fraction(0))
            two_h = rest / n + 2
            if two_h >= 0 and two_h.denominator == 1 and two_h.numerator % 2 == 0:
                found.add((two_h.numerator // 2, tuple(sorted(combo, key=lambda x: (x[1], x[0])))))
    return found


def test_validate_examples():
    d = validate(2, 2, [(1, 2)] * 6)
    assert (d.h, d.q) == (0, 6)
    d = validate(3, 2, [])
    assert (d.h, d.q) == (2, 0)
    d = validate(2, 5, [(3, 5), (1, 5), (6, 5)])
    assert d.branch == ((1, 5), (1, 5), (3, 5))


@pytest.mark.parametrize("args,error", [
    ((2, 4, [(1, 2), (1, 4)]), IntegralityError),
    ((2, 4, [(1, 3), (2, 3)]), DivisibilityError),
    ((2, 4, [(2, 4), (2, 4)]), CoprimalityError),
    ((2, 3, [(1, 3), (2, 3)]), RiemannHurwitzError),
    ((2, 2, [(1, 2)] * 8), RiemannHurwitzError),
    ((1, 2, []), FixedPointDataError),
    ((2, 2, [(0, 1)]), FixedPointDataError),
])
def test_validate_errors(args, error):
    with pytest.raises(error):
        validate(*args)


def test_enumerate_examples():
    data = enumerate_fpd(2, 2)
    assert [format_fpd(d) for d in data] == ["2,2;1/2,1/2,1/2,1/2,1/2,1/2", "2,2;1/2,1/2"]
    assert [(d.h, d.q) for d in data] == [(0, 6), (1, 2)]
    assert enumerate_fpd(2, 7) == []
    five = enumerate_fpd(2, 5)
    assert sorted(tuple(b for b, _ in d.branch) for d in five) == [(1, 1, 3), (1, 2, 2), (2, 4, 4), (3, 3, 4)]
    assert all(d.h == 0 and d.q == 3 for d in five)


def test_enumerate_trivial_order():
    assert enumerate_fpd(4, 1) == [FixedPointData(4, 1, (), 4)]


def test_enumerate_bound():
    with pytest.raises(BoundError):
        enumerate_fpd(2, 1000)
    assert enumerate_fpd(2, 1000, max_order=1000) == []


@pytest.mark.parametrize("g", [2, 3, 4])
@pytest.mark.parametrize("n", range(1, 13))
def test_enumerate_matches_brute_force(g, n):
    data = enumerate_fpd(g, n)
    assert {(d.h, d.branch) for d in data} == brute_force_data(g, n)
    assert len(data) == len({(d.h, d.branch) for d in data})
    assert data == sorted(data, key=lambda d: (d.h, d.q, [(a, b) for b, a in d.branch]))


def test_enumerate_closed_under_inverse():
    for g in range(2, 6):
        for n in range(1, 25):
            data = enumerate_fpd(g, n)
            assert {invert(d) for d in data} == set(data)


def test_invert_examples():
    d = validate(2, 2, [(1, 2)] * 6)
    assert invert(d) == d
    assert format_fpd(invert(validate(2, 5, [(1, 5), (1, 5), (3, 5)]))) == "2,5;2/5,4/5,4/5"


def test_delta():
    assert delta(Fraction(4, 2)) == 1
    assert delta(Fraction(3, 2)) == 0
    assert delta(Fraction(0)) == 1


@pytest.mark.parametrize("text,expected", [
    ("2,5;1/5,1/5,3/5", [0, 1, 1, 0, 0]),
    ("2,2;1/2,1/2,1/2,1/2,1/2,1/2", [0, 2]),
    ("3,2;", [2, 1]),
])
def test_multiplicity_examples(text, expected):
    from rrlab.cli import parse_fpd
    d = parse_fpd(text)
    assert list(multiplicities(d)) == expected
    assert list(multiplicities_fk(d)) == expected


def test_orbit_grouping_counts():
    d = validate(2, 4, [(1, 2), (1, 2), (1, 4), (3, 4)])
    assert d.h == 0
    grouping = orbit_grouping(d)
    assert grouping.y == {1: 2, 2: 2}
    assert grouping.orbit_index == (2, 2, 1, 1)


@given(st.integers(1, 60), st.integers(2, 60), st.integers(1, 59))
def test_lambda_meets_defining_condition(j, a, b):
    b = b % a or 1
    lam = lambda_value(j, b, a)
    # the unique lambda in [1, a] congruent to j*b mod a, found by search
    assert lam == next(x for x in range(1, a + 1) if (x - j * b) % a == 0)


POOL = [d for g in range(2, 6) for n in range(1, 25) for d in enumerate_fpd(g, n)]


@settings(max_examples=300)
@given(st.sampled_from(POOL))
def test_multiplicity_properties(d):
    m = multiplicities(d)
    assert m[0] == d.h
    assert sum(m) == d.g
    assert list(m) == list(multiplicities_fk(d))
    assert all(x >= d.h - 1 for x in m)
    if d.h >= 1 or branch_lcm(d) == d.n:
        assert all(x >= 0 for x in m)


@settings(max_examples=300)
@given(st.sampled_from(POOL))
def test_inverse_reindexes_characters(d):
    m, mi = multiplicities(d), multiplicities(invert(d))
    assert mi[0] == m[0]
    assert all(mi[j] == m[(d.n - j) % d.n] for j in range(1, d.n))
    assert invert(invert(d)) == d


def test_inner_sum_integral_everywhere():
    # multiplicities raises if the exact inner sum ever has a denominator
    for d in POOL:
        multiplicities(d)
        multiplicities_fk(d)
