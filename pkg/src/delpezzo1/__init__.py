"""Exact branch-curve models for blown-up octic seeds, with verification.

From a normalized degree-8 rational polynomial the package constructs, in
exact arithmetic, the degree-9 plane model of the associated genus-4
branch curve, decides general position of the eight base points, certifies
large Galois groups from Frobenius cycle types, and checks the E8-lattice
and mod-2 facts the construction rests on.
"""

from .curve import (
    CurveBundle,
    SeedError,
    SeedPoly,
    U_FORM,
    amap,
    build_bundle,
    build_q,
    build_v,
    build_w,
    cubic_space,
    genus_of_model,
    multiplicity_report,
    perfect_power_dichotomy,
    sextic_space,
    validate_seed,
    verify_bundle,
)
from .finitefield import CycleType, PrimeSkip, ddf_degree_multiset
from .galois import GaloisCertificate, certify_galois
from .lattice import (
    F2Space,
    IntLattice,
    build_hyperbolic,
    enumerate_short_vectors,
    f8s_iso_check,
    linalg_lemma_check,
    mod2_quadratic_census,
    orth_complement,
    perm_isometry,
    picard_model_check,
    standard_space,
)
from .linalg import frac_is_square, int_is_square
from .position import (
    PositionReport,
    check_singular_cubic,
    check_six_conic,
    check_three_collinear,
    position_report,
)
from .quotient import NotInvertible, QuotElem, qr_inverse, qr_reduce, tri_eval_param
from .tripoly import TriPoly
from .unipoly import UniPoly, from_power_sums, power_sums, root_sum_poly

__version__ = "0.1.0"
