"""Exact verification of integral Riemann-Roch congruences for cyclic subgroups of mapping class groups."""

from rrlab.arith import (
    LocalizationError,
    NonInvertibleError,
    Residue,
    congruent_localized,
    mod_inverse,
    mod_pow,
    rational_to_residue,
)
from rrlab.bernoulli import RRConstants, bernoulli, rr_constants, von_staudt_clausen_denominator
from rrlab.classes import CohomologyClass, morita_mumford_class, newton_class
from rrlab.fpd import (
    FixedPointData,
    enumerate_fpd,
    format_fpd,
    invert,
    multiplicities,
    multiplicities_fk,
    validate,
)
from rrlab.powersum import power_sum, power_sum_mod
from rrlab.verify import (
    SweepReport,
    VerificationResult,
    sweep_main,
    sweep_porubsky,
    sweep_voronoi,
    verify_main,
    verify_porubsky,
    verify_vanishing_lemmas,
    verify_voronoi,
)

__version__ = "0.1.0"
