"""Fixed point data <g, n | b1/a1, ..., bq/aq> of a finite-order mapping class.

Branch entries are (beta, alpha) pairs, matching the written form beta/alpha.
A datum is stored canonically: beta reduced into [1, alpha), entries sorted by
(alpha, beta). The orbit genus h is always derived from Riemann-Hurwitz.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import floor, gcd, lcm

from rrlab.arith import divisors

MAX_ORDER = 512

Branch = tuple[tuple[int, int], ...]


class FixedPointDataError(ValueError):
    pass


class DivisibilityError(FixedPointDataError):
    """An isotropy order alpha_i does not divide n."""


class CoprimalityError(FixedPointDataError):
    """Some beta_i is not prime to alpha_i."""


class IntegralityError(FixedPointDataError):
    """sum beta_i/alpha_i is not an integer."""


class RiemannHurwitzError(FixedPointDataError):
    """Riemann-Hurwitz gives no non-negative integral orbit genus."""


class BoundError(ValueError):
    pass


@dataclass(frozen=True)
class FixedPointData:
    g: int
    n: int
    branch: Branch
    h: int

    @property
    def q(self) -> int:
        return len(self.branch)

    def __str__(self):
        return format_fpd(self)


def format_fpd(data: FixedPointData) -> str:
    """Datum in the ASCII grammar ``g,n;b1/a1,b2/a2,...``."""
    return f"{data.g},{data.n};" + ",".join(f"{b}/{a}" for b, a in data.branch)


def _canonical(branch) -> Branch:
    return tuple(sorted(((b % a, a) for b, a in branch), key=lambda ba: (ba[1], ba[0])))


def validate(g: int, n: int, branch=()) -> FixedPointData:
    """Check a candidate datum and return it in canonical form with h attached."""
    if g < 2:
        raise FixedPointDataError(f"genus must be >= 2, got {g}")
    if n < 1:
        raise FixedPointDataError(f"order must be >= 1, got {n}")
    branch = list(branch)
    for b, a in branch:
        if a < 2:
            raise FixedPointDataError(f"isotropy order must be >= 2, got {b}/{a}")
        if n % a:
            raise DivisibilityError(f"isotropy order {a} does not divide n = {n}")
        if gcd(b, a) != 1:
            raise CoprimalityError(f"beta = {b} is not prime to alpha = {a}")
    branch = _canonical(branch)
    total = sum((Fraction(b, a) for b, a in branch), Fraction(0))
    if total.denominator != 1:
        raise IntegralityError(f"sum of beta_i/alpha_i = {total} is not an integer (fpd1)")
    # 2g - 2 = n(2h - 2) + n * sum(1 - 1/alpha_i)
    twice_h = Fraction(2 * g - 2, n) - sum((1 - Fraction(1, a) for _, a in branch), Fraction(0)) + 2
    h = twice_h / 2
    if h.denominator != 1 or h < 0:
        raise RiemannHurwitzError(f"Riemann-Hurwitz gives orbit genus h = {h} for g = {g}, n = {n}")
    return FixedPointData(g, n, branch, int(h))


def _alpha_multisets(weights: list[tuple[int, int]], target: int, start: int = 0):
    """Multisets of divisors (non-decreasing) whose weights sum to target."""
    if target == 0:
        yield ()
        return
    for i in range(start, len(weights)):
        a, w = weights[i]
        if w > target:
            break
        for rest in _alpha_multisets(weights, target - w, i):
            yield (a,) + rest


def enumerate_fpd(g: int, n: int, max_order: int = MAX_ORDER) -> list[FixedPointData]:
    """Every datum of genus g and order n satisfying fpd1 and Riemann-Hurwitz.

    Includes tuples that no actual surface automorphism realizes. The result is
    sorted by (h, branch) and contains each canonical datum once.
    """
    if g < 2:
        raise FixedPointDataError(f"genus must be >= 2, got {g}")
    if n < 1:
        raise FixedPointDataError(f"order must be >= 1, got {n}")
    if n > max_order:
        raise BoundError(f"order {n} exceeds the sweep limit {max_order}")
    # weight of an orbit with isotropy alpha: n(1 - 1/alpha); all weights >= n/2
    weights = sorted((n - n // a, a) for a in divisors(n) if a > 1)
    weights = [(a, w) for w, a in weights]
    out = []
    h = 0
    while True:
        target = 2 * g - 2 - n * (2 * h - 2)
        if target < 0:
            break
        for alphas in _alpha_multisets(weights, target):
            counts = sorted(Counter(alphas).items())
            choices = []
            for a, cnt in counts:
                units = [b for b in range(1, a) if gcd(b, a) == 1]
                choices.append([(a, combo) for combo in combinations_with_replacement(units, cnt)])
            for pick in product(*choices):
                if sum(sum(bs) * (n // a) for a, bs in pick) % n:
                    continue
                branch = tuple((b, a) for a, bs in pick for b in bs)
                out.append(validate(g, n, branch))
        h += 1
    out.sort(key=lambda d: (d.h, d.q, [(a, b) for b, a in d.branch]))
    return out


def invert(data: FixedPointData) -> FixedPointData:
    """Datum of the inverse mapping class: beta_i -> alpha_i - beta_i."""
    return FixedPointData(data.g, data.n, _canonical((a - b, a) for b, a in data.branch), data.h)


def delta(r: Fraction) -> int:
    return 1 if Fraction(r).denominator == 1 else 0


@dataclass(frozen=True)
class MultiplicityVector:
    n: int
    values: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        return self.values[j]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def _branch_term(j: int, b: int, a: int) -> Fraction:
    r = Fraction(j * b, a)
    return r - floor(r) + delta(r)


def multiplicities(data: FixedPointData) -> MultiplicityVector:
    """n_0 = h and, for 1 <= j < n,

        n_j = h - 1 + q - sum_i { j b_i/a_i - [j b_i/a_i] + delta(j b_i/a_i) }.
    """
    values = [data.h]
    for j in range(1, data.n):
        inner = sum((_branch_term(j, b, a) for b, a in data.branch), Fraction(0))
        if inner.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity sum {inner} at j={j} for {data}")
        values.append(data.h - 1 + data.q - int(inner))
    return MultiplicityVector(data.n, tuple(values))


@dataclass(frozen=True)
class OrbitGrouping:
    """Branch points grouped by stabilizer index l = n/alpha.

    ``y`` maps every divisor l < n to the number of branch orbits with
    alpha = n/l. ``lam[i][j-1]`` is lambda for branch point i and 1 <= j < n.
    """

    n: int
    y: dict[int, int]
    orbit_index: tuple[int, ...]
    lam: tuple[tuple[int, ...], ...]


def lambda_value(j: int, b: int, a: int) -> int:
    r = Fraction(j * b, a)
    return j * b - a * floor(r) + a * delta(r)


def orbit_grouping(data: FixedPointData) -> OrbitGrouping:
    n = data.n
    y = {l: 0 for l in divisors(n) if l < n}
    index = []
    for _, a in data.branch:
        l = n // a
        y[l] += 1
        index.append(l)
    lam = tuple(tuple(lambda_value(j, b, a) for j in range(1, n)) for b, a in data.branch)
    return OrbitGrouping(n, y, tuple(index), lam)


def multiplicities_fk(data: FixedPointData) -> MultiplicityVector:
    """n_j from the orbit grouping: h - 1 + sum_l y_l - (1/n) sum_{l,m} l * lambda."""
    grouping = orbit_grouping(data)
    n = data.n
    orbits = sum(grouping.y.values())
    values = [data.h]
    for j in range(1, n):
        weighted = sum(l * lam[j - 1] for l, lam in zip(grouping.orbit_index, grouping.lam))
        nj = data.h - 1 + orbits - Fraction(weighted, n)
        if nj.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {nj} at j={j} for {data}")
        values.append(int(nj))
    return MultiplicityVector(n, tuple(values))


def branch_lcm(data: FixedPointData) -> int:
    return lcm(*(a for _, a in data.branch)) if data.branch else 1
