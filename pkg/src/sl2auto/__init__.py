"""Finite-order inner automorphisms of SL(2,k): orders, isomorphy, class counts, and a brute-force oracle."""

from .exactfield import *  # noqa: F401,F403
from .exactfield import __all__ as _field_all
from .sl2core import (
    Eigenpair,
    InnerOrder,
    InvariantViolation,
    Mat2,
    Sl2Rep,
    canonical_form,
    eigenpair_of,
    inner_order,
    is_exceptional,
    normalize,
    parse_matrix,
    reference_trace,
    trace_power,
)
from .classify import (
    ClassCount,
    IsomorphyClass,
    NotIsomorphic,
    NotRealizable,
    UnboundedResult,
    conjugating_matrix,
    count_classes,
    eigenpairs_up_to_sign,
    is_isomorphic,
    m_valid_eigenpairs,
    negate_eigenpair,
    realizable_classes,
    representative,
)
from .oracle import (
    EnumerationDomain,
    OrbitPartition,
    VerifyReport,
    enumerate_finite_order,
    orbit_partition,
    verify_eigenpair_count,
    verify_report,
    verify_trace_criterion,
)

__version__ = "0.1.0"

__all__ = list(_field_all) + [
    "ClassCount", "Eigenpair", "EnumerationDomain", "InnerOrder", "InvariantViolation",
    "IsomorphyClass", "Mat2", "NotIsomorphic", "NotRealizable", "OrbitPartition", "Sl2Rep",
    "UnboundedResult", "VerifyReport", "canonical_form", "conjugating_matrix", "count_classes",
    "eigenpair_of", "eigenpairs_up_to_sign", "enumerate_finite_order", "inner_order",
    "is_exceptional", "is_isomorphic", "m_valid_eigenpairs", "negate_eigenpair", "normalize",
    "orbit_partition", "parse_matrix", "realizable_classes", "reference_trace", "representative",
    "trace_power", "verify_eigenpair_count", "verify_report", "verify_trace_criterion",
]
