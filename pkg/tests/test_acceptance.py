"""Exit criteria. Each test records a PASS/FAIL line shown in the terminal summary."""

import time
from fractions import Fraction

import pytest

from rrlab.arith import primes_up_to
from rrlab.bernoulli import BernoulliTable, rr_constants, von_staudt_clausen_denominator
from rrlab.fpd import enumerate_fpd, multiplicities, multiplicities_fk
from rrlab.powersum import cong_sum_holds, summation_mod_p_holds
from rrlab.verify import POR1, POR2, sweep_main, sweep_porubsky, sweep_proof_identities, sweep_reduction, sweep_voronoi

GENERA = range(2, 9)
PRIME_POWER_ORDERS = range(1, 65)
VORONOI_PRIMES = [2, 3, 5, 7, 11, 13]


def _failure_note(report):
    bad = report.failures
    return f"{report.total} cases, {len(bad)} failures" + (f"; first: {bad[0].witness}" if bad else "")


def test_c1_bernoulli_fidelity(criterion):
    start = time.perf_counter()
    table = BernoulliTable()
    values = [table[k] for k in range(1, 6)]
    elapsed = time.perf_counter() - start
    expected = [Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30), Fraction(5, 66)]
    ok = values == expected and elapsed < 1
    criterion(1, "Bernoulli fidelity", ok, f"{[str(v) for v in values]} in {elapsed:.3f}s")
    assert values == expected
    assert elapsed < 1


def test_c2_main_theorem_k1(criterion):
    rep = sweep_main(GENERA, PRIME_POWER_ORDERS, [1], prime_powers_only=True)
    ok = rep.total > 0 and rep.ok and rep.elapsed < 30
    criterion(2, "k = 1 sanity", ok, f"{_failure_note(rep)} in {rep.elapsed:.2f}s")
    assert rep.total > 0 and not rep.failures
    assert rep.elapsed < 30


def test_c3_main_theorem(criterion):
    rep = sweep_main(GENERA, PRIME_POWER_ORDERS, range(1, 7), prime_powers_only=True)
    ok = rep.total > 0 and rep.ok and rep.elapsed < 120
    criterion(3, "main theorem, g <= 8, prime-power n <= 64, k <= 6", ok, f"{_failure_note(rep)} in {rep.elapsed:.2f}s")
    assert rep.total > 0 and not rep.failures
    assert rep.elapsed < 120


def test_c4_generalized_voronoi(criterion):
    rep = sweep_voronoi(VORONOI_PRIMES, 4, range(1, 21), range(1, 9))
    two = [r for r in rep.results if r.witness.startswith("p=2 a=1 ")]
    ok = rep.total > 0 and rep.ok and bool(two) and rep.elapsed < 300
    criterion(4, "generalized Voronoi", ok, f"{_failure_note(rep)} ({len(two)} with p^a = 2) in {rep.elapsed:.2f}s")
    assert two and all(r.holds for r in two)
    assert not rep.failures
    assert rep.elapsed < 300


def test_c5_porubsky(criterion):
    start = time.perf_counter()
    odd = sweep_porubsky(range(1, 100, 2), range(1, 13), range(1, 6), POR2)
    even = sweep_porubsky(range(2, 65, 2), range(1, 13), range(1, 6), POR2)
    first = sweep_porubsky(range(1, 100), range(1, 13), range(1, 6), POR1)
    elapsed = time.perf_counter() - start
    reports = (odd, even, first)
    bad = [r for rep in reports for r in rep.failures]
    detail = (f"por2 odd N: {_failure_note(odd)}; por2 even N: {_failure_note(even)}; "
              f"por1: {_failure_note(first)}, {len(first.undefined)} undefined; {elapsed:.2f}s")
    criterion(5, "Porubsky", not bad and elapsed < 300, detail)
    if bad:
        pytest.fail(detail)
    assert elapsed < 300


def test_c6_denominator_lemma(criterion):
    start = time.perf_counter()
    primes = primes_up_to(500)
    problems = []
    for k in range(1, 61):
        c = rr_constants(k)
        for p in primes:
            if (c.d2k % p == 0) != (2 * k % (p - 1) == 0):
                problems.append(f"k={k} p={p}: membership")
            if c.d2k % (p * p) == 0:
                problems.append(f"k={k} p={p}: square")
        if c.d2k % 6 or c.d2k_prime % 4 or c.d2k_prime % c.d2k:
            problems.append(f"k={k}: 6 | D, 4 | D', D | D'")
        if (2 * k) % (c.d2k_prime // c.d2k):
            problems.append(f"k={k}: D'/D does not divide 2k")
        if von_staudt_clausen_denominator(k) != c.d2k:
            problems.append(f"k={k}: von Staudt-Clausen")
    elapsed = time.perf_counter() - start
    criterion(6, "denominator lemma", not problems and elapsed < 10, f"{len(problems)} violations in {elapsed:.2f}s")
    assert not problems, problems[:5]
    assert elapsed < 10


def test_c7_power_sum_lemmas(criterion):
    start = time.perf_counter()
    problems = [(m, n) for n in range(1, 501) for m in range(1, 9) if cong_sum_holds(m, n) != (True, True)]
    problems += [(p, b, l) for p in primes_up_to(13) for b in range(1, 5) for l in range(1, 13)
                 if not summation_mod_p_holds(p, b, l)]
    elapsed = time.perf_counter() - start
    criterion(7, "power-sum lemmas", not problems and elapsed < 30, f"{len(problems)} violations in {elapsed:.2f}s")
    assert not problems
    assert elapsed < 30


def test_c8_multiplicity_routes(criterion):
    start = time.perf_counter()
    count, problems = 0, []
    for g in GENERA:
        for n in range(1, 37):
            for d in enumerate_fpd(g, n):
                count += 1
                m = multiplicities(d)
                if list(m) != list(multiplicities_fk(d)) or sum(m) != g:
                    problems.append(str(d))
    elapsed = time.perf_counter() - start
    criterion(8, "multiplicity route equivalence", not problems and elapsed < 30,
              f"{count} data, {len(problems)} mismatches in {elapsed:.2f}s")
    assert count > 0 and not problems
    assert elapsed < 30


def test_c9_proof_internal_identities(criterion):
    grid = sweep_proof_identities(VORONOI_PRIMES, 4, range(1, 21), range(1, 9))
    data = sweep_reduction(GENERA, PRIME_POWER_ORDERS, range(1, 7))
    elapsed = grid.elapsed + data.elapsed
    ok = grid.total > 0 and data.total > 0 and grid.ok and data.ok and elapsed < 300
    criterion(9, "proof-internal identities", ok,
              f"grid: {_failure_note(grid)}; data: {_failure_note(data)}; {elapsed:.2f}s")
    assert grid.total > 0 and data.total > 0
    assert not grid.failures and not data.failures
    assert elapsed < 300
