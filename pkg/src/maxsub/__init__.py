"""Exact counts of maximal subbundles of stable bundles on curves, and the
twisted Gromov invariants they reduce to, computed as root-of-unity sums
in cyclotomic fields.

All results are exact rationals (integers in the geometric regime); a
compiled kernel accelerates the subset enumeration when available, with a
pure-Python twin selected automatically otherwise.
"""

from ._backend import backend_name, get_kernel
from .bkm import BQuery, b_direct, b_recursive, m_rank2
from .counts import (
    CountQuery,
    CountResult,
    closed_form_k2_g2,
    closed_form_rank1,
    count,
    count_direct,
    count_via_reduction,
    zero_dim_condition,
)
from .errors import (
    ConditionViolatedError,
    DegreeMismatchError,
    GeometricRangeWarning,
    InternalConsistencyError,
    InvalidInputError,
    InvalidRankError,
    MaxsubError,
    NonIntegralExponentError,
    NotApplicableError,
    NotHomogeneousError,
    NotRationalError,
    PathMismatchError,
    PolyParseError,
    ZeroPolynomialError,
)
from .exact import (
    BigRational,
    CycNumber,
    CycPolynomial,
    cyclotomic_polynomial,
    from_rational,
    make_root,
)
from .polynomials import Monomial, Polynomial, weighted_degree
from .schubert import Partition, classical_intersection, pieri_vertical
from .twisted import (
    GromovQuery,
    SInvariants,
    decompose_degree,
    recursion_shift,
    reduce_to_grassmannian,
    s_invariants,
    tensor_shift,
    twisted_invariant,
)
from .vi import RootSubset, elementary_symmetric, vi_sum, vi_sum_numeric, vi_summand

__version__ = "0.1.0"

__all__ = [
    "BQuery",
    "BigRational",
    "ConditionViolatedError",
    "CountQuery",
    "CountResult",
    "CycNumber",
    "CycPolynomial",
    "DegreeMismatchError",
    "GeometricRangeWarning",
    "GromovQuery",
    "InternalConsistencyError",
    "InvalidInputError",
    "InvalidRankError",
    "MaxsubError",
    "Monomial",
    "NonIntegralExponentError",
    "NotApplicableError",
    "NotHomogeneousError",
    "NotRationalError",
    "Partition",
    "PathMismatchError",
    "PolyParseError",
    "Polynomial",
    "RootSubset",
    "SInvariants",
    "ZeroPolynomialError",
    "b_direct",
    "b_recursive",
    "backend_name",
    "classical_intersection",
    "closed_form_k2_g2",
    "closed_form_rank1",
    "count",
    "count_direct",
    "count_via_reduction",
    "cyclotomic_polynomial",
    "decompose_degree",
    "elementary_symmetric",
    "from_rational",
    "get_kernel",
    "m_rank2",
    "make_root",
    "pieri_vertical",
    "recursion_shift",
    "reduce_to_grassmannian",
    "s_invariants",
    "tensor_shift",
    "twisted_invariant",
    "vi_sum",
    "vi_sum_numeric",
    "vi_summand",
    "weighted_degree",
    "zero_dim_condition",
]
