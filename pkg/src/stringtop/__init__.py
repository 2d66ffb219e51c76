"""Exact rational engine for Frobenius and BV structures on quotient families."""

from .core import (
    BasisMismatch,
    CheckReport,
    FrobeniusData,
    GradedBasis,
    GradedElement,
    LinearMap,
    PreconditionError,
    Scalar,
    TensorElement,
    UnsupportedStructure,
    apply_coproduct,
    apply_product,
    basis_vector,
    check_associativity,
    check_bv,
    check_coassociativity,
    check_cocommutativity,
    check_cocycle,
    check_frobenius,
    check_graded_commutativity,
    check_morphism,
    check_snake,
    linear_combine,
    twist_product,
)
from .groups import (
    ConjugacyPartition,
    FiniteGroupTable,
    GroupTableError,
    builtin_group,
    builtin_group_names,
    commuting_tuple_count,
    conjugacy_classes,
    conjugation_action,
    coinvariant_projection,
    dw_algebra,
    group_from_permutations,
    group_from_table,
    transfer,
)
from .tqft import SurfaceSignature, TensorPower, closed_invariant, handle_operator, surface_operation
from .sphere import (
    excess_rank,
    face_product_oracle,
    phi_map,
    sphere_loop_algebra,
    sphere_string_algebra,
)
from .liegroup import (
    ExponentProfile,
    builtin_profile,
    delta_star,
    dual_coproduct,
    dual_string_product,
    m_shriek,
    monomial,
    monomial_basis,
    pair_element,
    profile_from_exponents,
    unit_monomial,
)
from .grading import (
    EigenData,
    SectorInconsistency,
    SectorRecord,
    age,
    check_age_dimension,
    check_pairing_degree,
    double_sector_dimension,
    eigen_from_action,
    inverse_eigen,
    obstruction_rank,
    orbifold_degree,
    sector_dimension,
    sector_record,
)
from .serialize import FormatError, dumps_algebra, dumps_tensor_terms, loads_algebra

__version__ = "0.1.0"
