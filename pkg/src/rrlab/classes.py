"""Restrictions of e_k and s_k to a cyclic subgroup <gamma> of order n.

H*(<gamma>; Z) = Z[u]/(n u), so a degree-2k class is c * u^k with c read mod n.
"""

from __future__ import annotations

from dataclasses import dataclass

from rrlab.arith import Residue, mod_inverse
from rrlab.fpd import FixedPointData, MultiplicityVector, multiplicities


@dataclass(frozen=True)
class CohomologyClass:
    k: int
    coeff: Residue

    @property
    def degree(self) -> int:
        return 2 * self.k

    def __str__(self):
        return f"{self.coeff.value} u^{self.k} (mod {self.coeff.modulus})"


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def morita_mumford_class(data: FixedPointData, k: int) -> CohomologyClass:
    """e_k(gamma) = sum_i (n/alpha_i) (beta_i^*)^k u^k, beta_i^* the inverse of beta_i mod alpha_i."""
    _check_k(k)
    n = data.n
    total = sum((n // a) * pow(mod_inverse(b, a), k, n) for b, a in data.branch)
    return CohomologyClass(k, Residue.of(total, n))


def newton_class(data: FixedPointData, k: int, mults: MultiplicityVector | None = None) -> CohomologyClass:
    """s_k(gamma) = (-1)^k sum_{j=1}^{n-1} n_j j^k u^k.

    ``mults`` defaults to :func:`multiplicities` of ``data``; pass another
    vector (e.g. from the orbit-grouping route) to evaluate the same formula.
    """
    _check_k(k)
    n = data.n
    if mults is None:
        mults = multiplicities(data)
    total = sum(nj * pow(-j, k, n) for j, nj in enumerate(mults) if j)
    return CohomologyClass(k, Residue.of(total, n))
