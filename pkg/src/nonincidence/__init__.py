"""Steiner triple systems and their largest nonincident point/block sets."""

from .bounds import (
    CurveData,
    EqualityFamilyRecord,
    classify_equality_order,
    disjoint_block_bound,
    disjoint_block_bound_divmod,
    enumerate_equality_orders,
    intersection_curve_data,
    nonincidence_upper_bound,
    subsystem_complement_count,
)
from .constructions import (
    BudgetExhausted,
    EmbeddedDesign,
    OneFactorization,
    bose,
    build_sts,
    doubling,
    embed_subsystem,
    one_factorization,
    subsystem_complement_certificate,
)
from .design import (
    CoverageProfile,
    Design,
    DesignError,
    DigestMismatchError,
    NonincidenceCertificate,
    ValidityReport,
    certificate_violations,
    coverage_profile,
    disjoint_block_count,
    is_maximal_arc,
    is_subsystem,
    validate_design,
    verify_certificate,
)
from .search import (
    SearchReport,
    brute_force_oracle,
    exact_max_nonincident,
    greedy_max_nonincident,
)

__all__ = [
    "BudgetExhausted",
    "CoverageProfile",
    "CurveData",
    "Design",
    "DesignError",
    "DigestMismatchError",
    "EmbeddedDesign",
    "EqualityFamilyRecord",
    "NonincidenceCertificate",
    "OneFactorization",
    "SearchReport",
    "ValidityReport",
    "bose",
    "brute_force_oracle",
    "build_sts",
    "certificate_violations",
    "classify_equality_order",
    "coverage_profile",
    "disjoint_block_bound",
    "disjoint_block_bound_divmod",
    "disjoint_block_count",
    "doubling",
    "embed_subsystem",
    "enumerate_equality_orders",
    "exact_max_nonincident",
    "greedy_max_nonincident",
    "intersection_curve_data",
    "is_maximal_arc",
    "is_subsystem",
    "nonincidence_upper_bound",
    "one_factorization",
    "subsystem_complement_certificate",
    "subsystem_complement_count",
    "validate_design",
    "verify_certificate",
]
