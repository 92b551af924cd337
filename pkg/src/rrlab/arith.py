"""Exact integer/rational arithmetic and congruences in the localization Z_(N).

Rationals are :class:`fractions.Fraction`, which is always stored reduced with a
positive denominator. Python integers are arbitrary precision, so nothing here
ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

Rational = Fraction


class NonInvertibleError(ValueError):
    """Raised when an integer has no inverse modulo m."""

    def __init__(self, a: int, m: int):
        super().__init__(f"{a} is not invertible modulo {m} (gcd = {gcd(a, m)})")
        self.a = a
        self.m = m


class LocalizationError(ValueError):
    """A rational whose denominator shares a factor with N is not in Z_(N)."""

    def __init__(self, r: Fraction, N: int):
        super().__init__(f"{r} is not in Z_({N}): denominator {r.denominator} shares a factor with {N}")
        self.value = r
        self.N = N


@dataclass(frozen=True, order=True)
class Residue:
    """A canonical residue 0 <= value < modulus."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"value {self.value} not in [0, {self.modulus})")

    @classmethod
    def of(cls, x: int, modulus: int) -> "Residue":
        return cls(x % modulus, modulus)

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"


def mod_inverse(a: int, m: int) -> int:
    """Return the unique b in [0, m) with a*b = 1 (mod m)."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 0
    if gcd(a, m) != 1:
        raise NonInvertibleError(a, m)
    return pow(a, -1, m)


def mod_pow(a: int, e: int, m: int) -> int:
    if e < 0:
        raise ValueError("exponent must be non-negative")
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    return pow(a, e, m)


def in_localization(r: Fraction, N: int) -> bool:
    return gcd(Fraction(r).denominator, N) == 1


def congruent_localized(r, s, N: int) -> bool:
    """Decide r = s (mod N) for r, s in Z_(N).

    The difference is taken exactly; the congruence holds iff N divides its
    reduced numerator. Inputs outside Z_(N) raise :class:`LocalizationError`.
    """
    if N < 1:
        raise ValueError(f"modulus must be >= 1, got {N}")
    r, s = Fraction(r), Fraction(s)
    for x in (r, s):
        if not in_localization(x, N):
            raise LocalizationError(x, N)
    return (r - s).numerator % N == 0


def rational_to_residue(r, N: int) -> Residue:
    r = Fraction(r)
    try:
        inv = mod_inverse(r.denominator, N)
    except NonInvertibleError:
        raise LocalizationError(r, N) from None
    return Residue.of(r.numerator * inv, N)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, e) with n == p**e and e >= 1, or None if n is not a prime power."""
    if n < 2:
        return None
    p = next(d for d in divisors(n) if d > 1)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return (p, e) if n == 1 else None
