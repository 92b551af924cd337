"""Power sums S_m(n) = 1^m + 2^m + ... + (n-1)^m and their congruences."""

from __future__ import annotations

from dataclasses import dataclass

from rrlab.arith import Residue
from rrlab.bernoulli import rr_constants


@dataclass(frozen=True)
class PowerSumQuery:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"power sum needs m >= 1 and n >= 1, got m={self.m}, n={self.n}")


def power_sum(m: int, n: int) -> int:
    PowerSumQuery(m, n)
    return sum(i**m for i in range(1, n))


def power_sum_mod(m: int, n: int, M: int) -> Residue:
    PowerSumQuery(m, n)
    if M < 1:
        raise ValueError(f"modulus must be >= 1, got {M}")
    total = 0
    for i in range(1, n):
        total = (total + pow(i, m, M)) % M
    return Residue(total, M)


def cong_sum_holds(m: int, n: int) -> tuple[bool, bool]:
    """(2 S_{2m-1}(n) = 0, D_2m S_2m(n) = 0) modulo n."""
    odd = 2 * power_sum_mod(2 * m - 1, n, n).value % n == 0
    even = rr_constants(m).d2k * power_sum_mod(2 * m, n, n).value % n == 0
    return odd, even


def summation_mod_p_holds(p: int, b: int, l: int) -> bool:
    """2 S_l(p^b) = 0 (l odd) or p S_l(p^b) = 0 (l even), modulo p^b."""
    q = p**b
    factor = 2 if l % 2 else p
    return factor * power_sum_mod(l, q, q).value % q == 0
