"""Exact commutative algebra engine for canonical-module questions."""

from .core import GF, QQ, MonomialOrder, Poly, PolyRing, compare_monomials, leading_data, poly_ring_arith
from .errors import CanmodError, ParseError, PreconditionError, ResourceExceeded, RingMismatchError
from .groebner import FreeModuleOrder, GroebnerBasis, buchberger, normal_form
from .ideal import (
    Ideal,
    eliminate,
    ideal,
    ideal_colon,
    ideal_intersection,
    ideal_membership,
    krull_dimension,
    radical_membership,
)
from .matrix import Matrix, PresentationMatrix, minors
from .modules import (
    FPModule,
    QuotientRing,
    annihilator,
    double_dual_with_map,
    dual,
    fitting_ideal,
    is_zero_module,
    module_dimension,
    prune,
    syzygy_matrix,
)
from .homological import (
    FreeResolution,
    auslander_transpose,
    canonical_module,
    depth_and_pd,
    ext_module,
    free_resolution,
)
from .classifier import (
    PrimeCandidate,
    canonical_ideal_colon_test,
    classify,
    cm_gorenstein_report,
    gn_on_canonical_support,
    is_associated_prime,
    main_theorem_crosscheck,
    noncm_locus,
    q_gorenstein_level,
    reflexivity_theorem_crosscheck,
    serre_Sn,
    torsionfree_level,
    unmixed_component,
)
