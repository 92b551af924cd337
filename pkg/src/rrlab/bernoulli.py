"""Bernoulli numbers B_2k and the reduced constants N_2k/D_2k and N'_2k/D'_2k.

B_2k is the coefficient in z/(e^z - 1) + z/2 = 1 + sum_k B_2k z^2k / (2k)!, so
B_2 = 1/6, B_4 = -1/30. Only even indices are exposed.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from rrlab.arith import divisors, is_prime


class CacheError(ValueError):
    """A cache file that is malformed or disagrees with the recurrence."""


class BernoulliTable:
    """Append-only memo of Bernoulli numbers built from the recurrence

        sum_{j=0}^{m} binom(m+1, j) B_j = 0,   B_0 = 1.

    The odd entry B_1 is kept internally (its sign does not affect even
    indices) but never returned.
    """

    def __init__(self):
        self._b: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    @property
    def max_k(self) -> int:
        return (len(self._b) - 1) // 2

    def _next(self) -> Fraction:
        m = len(self._b)
        b = self._b
        return -sum(comb(m + 1, j) * b[j] for j in range(m) if b[j]) / (m + 1)

    def extend(self, k: int) -> None:
        if k <= self.max_k:
            return
        with self._lock:
            while len(self._b) <= 2 * k:
                m = len(self._b)
                if m == 1:
                    self._b.append(Fraction(-1, 2))
                elif m % 2 == 1:
                    self._b.append(Fraction(0))
                else:
                    self._b.append(self._next())

    def __getitem__(self, k: int) -> Fraction:
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        self.extend(k)
        return self._b[2 * k]

    def entries(self) -> list[Fraction]:
        """B_2, B_4, ..., B_2K for everything computed so far."""
        return self._b[2::2]

    # cache file: one line per entry, "2k<TAB>N_2k<TAB>D_2k"

    def dump(self, path) -> None:
        tmp = f"{path}.tmp"
        with open(tmp, "w", encoding="ascii") as fh:
            for k, b in enumerate(self.entries(), start=1):
                fh.write(f"{2 * k}\t{b.numerator}\t{b.denominator}\n")
        os.replace(tmp, path)

    def load(self, path) -> int:
        """Merge entries from a cache file, revalidating each one.

        Entries must be contiguous from 2k = 2. Every entry is checked against
        the recurrence before it is accepted; a mismatch raises CacheError and
        leaves the table unchanged. Returns the number of entries read.
        """
        rows = []
        with open(path, encoding="ascii") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line:
                    continue
                parts = line.split("\t")
                if len(parts) != 3:
                    raise CacheError(f"{path}:{lineno}: expected 3 tab-separated fields")
                try:
                    idx, num, den = (int(x) for x in parts)
                except ValueError:
                    raise CacheError(f"{path}:{lineno}: non-integer field") from None
                if idx != 2 * (len(rows) + 1):
                    raise CacheError(f"{path}:{lineno}: expected index {2 * (len(rows) + 1)}, got {idx}")
                if den <= 0:
                    raise CacheError(f"{path}:{lineno}: denominator must be positive")
                rows.append(Fraction(num, den))
        check = BernoulliTable()
        for k, value in enumerate(rows, start=1):
            if check[k] != value:
                raise CacheError(f"{path}: entry B_{2 * k} = {value} fails the recurrence (expected {check[k]})")
        if check.max_k > self.max_k:
            with self._lock:
                self._b = check._b
        return len(rows)


_TABLE = BernoulliTable()


def default_table() -> BernoulliTable:
    return _TABLE


def bernoulli(k: int) -> Fraction:
    """B_2k, exactly."""
    return _TABLE[k]


@dataclass(frozen=True)
class RRConstants:
    k: int
    n2k: int
    d2k: int
    n2k_prime: int
    d2k_prime: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n2k, self.d2k, self.n2k_prime, self.d2k_prime)


def rr_constants(k: int) -> RRConstants:
    """B_2k = N/D and B_2k/2k = N'/D', both reduced with positive denominators."""
    b = bernoulli(k)
    bp = b / (2 * k)
    return RRConstants(k, b.numerator, b.denominator, bp.numerator, bp.denominator)


def von_staudt_clausen_denominator(k: int) -> int:
    """Product of the primes p with (p - 1) | 2k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return prod(d + 1 for d in divisors(2 * k) if is_prime(d + 1))
