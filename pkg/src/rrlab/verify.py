"""Executable congruence checks and deterministic sweeps over parameter grids."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from rrlab.arith import (
    LocalizationError,
    Residue,
    congruent_localized,
    in_localization,
    is_prime,
    mod_inverse,
    prime_power,
    rational_to_residue,
)
from rrlab.bernoulli import bernoulli, rr_constants
from rrlab.classes import morita_mumford_class, newton_class
from rrlab.fpd import MAX_ORDER, BoundError, FixedPointData, enumerate_fpd, format_fpd, multiplicities

POR1 = "por1"
POR2 = "por2"


class SideConditionError(ValueError):
    """eq-por2 requested where N is even and N(c - 1) is not divisible by 8."""


@dataclass(frozen=True)
class VerificationResult:
    check: str
    holds: bool
    lhs: Residue
    rhs: Residue
    modulus: int
    witness: str
    parts: tuple["VerificationResult", ...] = ()

    def to_dict(self) -> dict:
        out = {
            "check": self.check,
            "witness": self.witness,
            "modulus": self.modulus,
            "lhs": self.lhs.value,
            "rhs": self.rhs.value,
            "holds": self.holds,
        }
        if self.parts:
            out["parts"] = [p.to_dict() for p in self.parts]
        return out


def _result(check: str, lhs: int, rhs: int, modulus: int, witness: str, parts=()) -> VerificationResult:
    left, right = Residue.of(lhs, modulus), Residue.of(rhs, modulus)
    holds = left == right and all(p.holds for p in parts)
    return VerificationResult(check, holds, left, right, modulus, witness, tuple(parts))


@dataclass
class SweepReport:
    check: str
    ranges: dict
    results: list[VerificationResult] = field(default_factory=list)
    undefined: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def failures(self) -> list[VerificationResult]:
        return [r for r in self.results if not r.holds]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {
            "check": self.check,
            "summary": True,
            "ranges": self.ranges,
            "total": self.total,
            "failures": len(self.failures),
            "undefined": len(self.undefined),
        }


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def _check_prime_and_unit(p: int, c: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if c % p == 0:
        raise ValueError(f"c = {c} is divisible by p = {p}")


@lru_cache(maxsize=128)
def _power_table(M: int, e: int) -> tuple[int, ...]:
    return tuple(pow(s, e, M) for s in range(M))


# -- main theorem ---------------------------------------------------------


def verify_main(data: FixedPointData, k: int) -> VerificationResult:
    """N'_2k e_{2k-1}(gamma) = D'_2k s_{2k-1}(gamma) in Z/n."""
    _check_k(k)
    const = rr_constants(k)
    e = morita_mumford_class(data, 2 * k - 1).coeff.value
    s = newton_class(data, 2 * k - 1).coeff.value
    return _result("main", const.n2k_prime * e, const.d2k_prime * s, data.n, f"data={format_fpd(data)} k={k}")


def verify_newton_reduction(data: FixedPointData, k: int) -> VerificationResult:
    """-D' sum_j n_j j^(2k-1) = -D' sum_i sum_j j^(2k-1) [j b_i/a_i]  (mod n)."""
    _check_k(k)
    n, e = data.n, 2 * k - 1
    d = rr_constants(k).d2k_prime
    mults = multiplicities(data)
    lhs = -d * sum(nj * pow(j, e, n) for j, nj in enumerate(mults) if j)
    rhs = -d * sum(pow(j, e, n) * (j * b // a) for b, a in data.branch for j in range(1, n))
    return _result("newton2", lhs, rhs, n, f"data={format_fpd(data)} k={k}")


def verify_pre_sum(p: int, a: int, b: int, c: int, k: int) -> VerificationResult:
    """N' p^b ((c*)^(2k-1) - c) = -D' sum_{j<p^(a+b)} j^(2k-1) [jc/p^a]  (mod p^(a+b)), c* = c^-1."""
    _check_k(k)
    _check_prime_and_unit(p, c)
    M, pa, e = p ** (a + b), p**a, 2 * k - 1
    const = rr_constants(k)
    cstar = mod_inverse(c, M)
    pw = _power_table(M, e)
    lhs = const.n2k_prime * p**b * (pow(cstar, e, M) - c)
    rhs = -const.d2k_prime * sum(pw[j] * (j * c // pa) for j in range(1, M))
    return _result("pre-sum", lhs, rhs, M, f"p={p} a={a} b={b} c={c} k={k}")


def verify_branch_congruences(data: FixedPointData, k: int) -> list[VerificationResult]:
    """The pre-sum congruence for every branch point of a datum of prime-power order."""
    pe = prime_power(data.n)
    if pe is None:
        raise ValueError(f"order {data.n} is not a prime power")
    p, n_exp = pe
    out = []
    for beta, alpha in data.branch:
        a = prime_power(alpha)[1]
        r = verify_pre_sum(p, a, n_exp - a, beta, k)
        out.append(VerificationResult(r.check, r.holds, r.lhs, r.rhs, r.modulus,
                                      f"data={format_fpd(data)} branch={beta}/{alpha} k={k}"))
    return out


# -- generalized Voronoi ---------------------------------------------------


def verify_voronoi(p: int, a: int, b: int, c: int, k: int) -> VerificationResult:
    """N' p^b (c^2k - 1) = D' c^(2k-1) sum_{s<p^(a+b)} s^(2k-1) [sc/p^a]  (mod p^(a+b))."""
    _check_k(k)
    _check_prime_and_unit(p, c)
    if a < 0 or b < 0:
        raise ValueError("a and b must be non-negative")
    M, pa = p ** (a + b), p**a
    const = rr_constants(k)
    pw = _power_table(M, 2 * k - 1)
    lhs = const.n2k_prime * p**b * (pow(c, 2 * k, M) - 1)
    total = sum(pw[s] * (s * c // pa) for s in range(M))
    rhs = const.d2k_prime * pow(c, 2 * k - 1, M) * total
    return _result("voronoi", lhs, rhs, M, f"p={p} a={a} b={b} c={c} k={k}")


def verify_vanishing_lemmas(p: int, a: int, b: int, c: int, k: int) -> VerificationResult:
    """Both vanishing lemmas and the intermediate congruence, by direct double sums.

    The returned result carries the three sub-checks in ``parts``; its own
    lhs/rhs are those of the intermediate congruence

        D' p^b sum_{s<p^a} s^(2k-1)[sc/p^a] = D' sum_{s<p^(a+b)} s^(2k-1)[sc/p^a].
    """
    _check_k(k)
    _check_prime_and_unit(p, c)
    if a < 1 or b < 0:
        raise ValueError("need a >= 1 and b >= 0")
    pa, pb = p**a, p**b
    M = pa * pb
    d = rr_constants(k).d2k_prime
    pw = _power_table(M, 2 * k - 1)
    floors = [s * c // pa for s in range(pa)]
    witness = f"p={p} a={a} b={b} c={c} k={k}"

    v1 = sum(j * pw[s + j * pa] for j in range(pb) for s in range(pa))
    vanish1 = _result("vanish1", d * v1, 0, M, witness)

    v2 = sum(pw[s + j * pa] * floors[s] for j in range(pb) for s in range(pa))
    short = sum(pw[s] * floors[s] for s in range(pa))
    vanish2 = _result("vanish2", d * v2, d * pb * short, M, witness)

    full = sum(pw[s] * (s * c // pa) for s in range(M))
    inter = _result("intermediate", d * pb * short, d * full, M, witness)
    return _result("vanishing", inter.lhs.value, inter.rhs.value, M, witness, (vanish1, vanish2, inter))


# -- Porubsky --------------------------------------------------------------


def porubsky_terms(N: int, c: int, k: int) -> tuple[Fraction, Fraction, int]:
    """(leading term, correction term, right-hand side) of eq-por1 as exact values.

    The correction term uses B_0 = 1 when k = 1.
    """
    b_prev = Fraction(1) if k == 1 else bernoulli(k - 1)
    lead = (c ** (2 * k) - 1) * bernoulli(k) / (2 * k)
    corr = Fraction(c ** (2 * k) - c ** (2 * k - 1), 2) * Fraction(2 * k - 1, 2) * b_prev * N * N
    rhs = c ** (2 * k - 1) * sum(x ** (2 * k - 1) * (c * x // N) for x in range(1, N))
    return lead, corr, rhs


def porubsky_side_condition(N: int, c: int) -> bool:
    return N % 2 == 1 or N * (c - 1) % 8 == 0


def verify_porubsky(N: int, c: int, k: int, which: str = POR2) -> VerificationResult:
    """Porubsky's congruence in Z_(N).

    Raises LocalizationError when some term is not in Z_(N); that means the
    congruence is undefined, which is different from it failing.
    """
    _check_k(k)
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if gcd(c, N) != 1:
        raise ValueError(f"c = {c} is not prime to N = {N}")
    if which not in (POR1, POR2):
        raise ValueError(f"unknown Porubsky variant {which!r}")
    if which == POR2 and not porubsky_side_condition(N, c):
        raise SideConditionError(f"eq-por2 needs N odd or N(c-1) = 0 mod 8; got N={N}, c={c}")
    lead, corr, rhs = porubsky_terms(N, c, k)
    terms = [lead, corr] if which == POR1 else [lead]
    for t in terms:
        if not in_localization(t, N):
            raise LocalizationError(t, N)
    lhs = sum(terms, Fraction(0))
    holds = congruent_localized(lhs, rhs, N)
    left, right = rational_to_residue(lhs, N), rational_to_residue(rhs, N)
    return VerificationResult(which, holds, left, right, N, f"N={N} c={c} k={k}")


# -- sweeps ------------------------------------------------------------------


def _fan_out(fn, cells, jobs: int):
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if jobs == 1 or len(cells) < 2:
        return [fn(cell) for cell in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, cells))


def _main_cell(cell):
    g, n, ks, max_order = cell
    data = enumerate_fpd(g, n, max_order)
    return [verify_main(d, k) for d in data for k in ks]


def sweep_main(g_range, n_range, k_range, prime_powers_only: bool = False, jobs: int = 1,
               max_order: int = MAX_ORDER) -> SweepReport:
    """verify_main over every enumerated datum in the (g, n) grid and every k."""
    start = time.perf_counter()
    gs, ns, ks = list(g_range), list(n_range), list(k_range)
    if prime_powers_only:
        ns = [n for n in ns if prime_power(n)]
    for n in ns:
        if n > max_order:
            raise BoundError(f"order {n} exceeds the sweep limit {max_order}")
    if ks:
        bernoulli(max(ks))
    cells = [(g, n, tuple(ks), max_order) for g in gs for n in ns]
    report = SweepReport("main", {"g": gs, "n": ns, "k": ks, "prime_powers_only": prime_powers_only})
    for chunk in _fan_out(_main_cell, cells, jobs):
        report.results.extend(chunk)
    report.elapsed = time.perf_counter() - start
    return report


def _reduction_cell(cell):
    g, n, ks = cell
    out = []
    for d in enumerate_fpd(g, n):
        for k in ks:
            out.append(verify_newton_reduction(d, k))
            out.extend(verify_branch_congruences(d, k))
    return out


def sweep_reduction(g_range, n_range, k_range, jobs: int = 1) -> SweepReport:
    """Newton-class reduction and per-branch-point congruences over prime-power orders."""
    start = time.perf_counter()
    gs, ks = list(g_range), list(k_range)
    ns = [n for n in n_range if prime_power(n)]
    if ks:
        bernoulli(max(ks))
    cells = [(g, n, tuple(ks)) for g in gs for n in ns]
    report = SweepReport("reduction", {"g": gs, "n": ns, "k": ks})
    for chunk in _fan_out(_reduction_cell, cells, jobs):
        report.results.extend(chunk)
    report.elapsed = time.perf_counter() - start
    return report


def _ab_pairs(ab_max: int, min_a: int = 0):
    return [(a, t - a) for t in range(ab_max + 1) for a in range(min_a, t + 1)]


def _voronoi_cell(cell):
    p, a, b, cs, ks = cell
    return [verify_voronoi(p, a, b, c, k) for k in ks for c in cs]


def _identity_cell(cell):
    p, a, b, cs, ks = cell
    out = []
    for k in ks:
        for c in cs:
            out.append(verify_pre_sum(p, a, b, c, k))
            out.append(verify_vanishing_lemmas(p, a, b, c, k))
    return out


def _grid(p_range, ab_max, c_range, k_range, min_a):
    ps = [p for p in p_range if is_prime(p)]
    cs_all, ks = list(c_range), list(k_range)
    if ks:
        bernoulli(max(ks))
    cells = []
    for p in ps:
        cs = tuple(c for c in cs_all if c % p)
        for a, b in _ab_pairs(ab_max, min_a):
            cells.append((p, a, b, cs, tuple(ks)))
    return ps, cs_all, ks, cells


def sweep_voronoi(p_range, ab_max: int, c_range, k_range, jobs: int = 1) -> SweepReport:
    start = time.perf_counter()
    ps, cs, ks, cells = _grid(p_range, ab_max, c_range, k_range, 0)
    report = SweepReport("voronoi", {"p": ps, "ab_max": ab_max, "c": cs, "k": ks})
    for chunk in _fan_out(_voronoi_cell, cells, jobs):
        report.results.extend(chunk)
    report.elapsed = time.perf_counter() - start
    return report


def sweep_proof_identities(p_range, ab_max: int, c_range, k_range, jobs: int = 1) -> SweepReport:
    """Pre-sum congruence, vanishing lemmas and the intermediate congruence for a >= 1."""
    start = time.perf_counter()
    ps, cs, ks, cells = _grid(p_range, ab_max, c_range, k_range, 1)
    report = SweepReport("identities", {"p": ps, "ab_max": ab_max, "c": cs, "k": ks, "a_min": 1})
    for chunk in _fan_out(_identity_cell, cells, jobs):
        report.results.extend(chunk)
    report.elapsed = time.perf_counter() - start
    return report


def _porubsky_cell(cell):
    N, cs, ks, which = cell
    results, undefined = [], []
    for k in ks:
        for c in cs:
            if gcd(c, N) != 1:
                continue
            if which == POR2 and not porubsky_side_condition(N, c):
                continue
            try:
                results.append(verify_porubsky(N, c, k, which))
            except LocalizationError as exc:
                undefined.append(f"{which} N={N} c={c} k={k}: {exc}")
    return results, undefined


def sweep_porubsky(N_range, c_range, k_range, which: str = POR2, jobs: int = 1) -> SweepReport:
    """Porubsky's congruence over a grid.

    Pairs (N, c) that are not coprime, or that violate the eq-por2 side
    condition, are skipped. Cases with a term outside Z_(N) are listed in
    ``undefined`` and are not counted as failures.
    """
    start = time.perf_counter()
    Ns, cs, ks = list(N_range), list(c_range), list(k_range)
    if ks:
        bernoulli(max(ks))
    cells = [(N, tuple(cs), tuple(ks), which) for N in Ns]
    report = SweepReport(which, {"N": Ns, "c": cs, "k": ks})
    for results, undefined in _fan_out(_porubsky_cell, cells, jobs):
        report.results.extend(results)
        report.undefined.extend(undefined)
    report.elapsed = time.perf_counter() - start
    return report
