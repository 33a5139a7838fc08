"""Exact verification toolkit for two-term symmetric-mean inequalities.

Everything computes over arbitrary-precision rationals; randomized
searches re-verify any candidate exactly before reporting it.
"""

__version__ = "0.1.0"

from .core import (
    NAIVE_LIMIT,
    SymProfile,
    as_point,
    as_rational,
    as_triple,
    binomial,
    e_all,
    format_point,
    format_rational,
    garding_membership,
    parse_point,
    sigma_all,
    sigma_naive,
)
from .gaps import (
    ChainResult,
    EndpointWitness,
    EqualityCase,
    GapReport,
    PreconditionError,
    Relation,
    gen_maclaurin_chain,
    gen_nm_gap,
    linear_combo_gap,
    liu_ren_gap,
    maclaurin_chain_check,
    newton_gap,
    quantitative_gap,
    remark_violation,
)
from .certificate import (
    BinomQuad,
    CertConstants,
    FScanRow,
    Lemma31Report,
    Lemma32Report,
    SpecialCase,
    binom_quad,
    cert_constants,
    decomposition_coefficient_match,
    decomposition_residual,
    f_scan,
    l_value,
    lemma31_check,
    lemma32_check,
    special_case_gap,
    theta_for,
    v_value,
    w_value,
)
from .reduction import (
    Branch,
    CascadeResult,
    Cubic,
    RootTriple,
    associated_cubic,
    cubic_discriminant,
    degenerate_direct_gap,
    derivative_cascade,
    gap_from_moments,
    lemma21_identity_residual,
    real_cubic_roots,
    reduce_to_three,
)
from .search import (
    AllSamplesDegenerate,
    CertificateViolation,
    ScanGrid,
    ScanReport,
    ThetaSummary,
    Witness,
    empirical_theta,
    find_counterexample_15,
    structured_scan,
)
from .cli import report_bundle, run

__all__ = [
    "__version__",
    "NAIVE_LIMIT",
    "SymProfile",
    "as_point",
    "as_rational",
    "as_triple",
    "binomial",
    "e_all",
    "format_point",
    "format_rational",
    "garding_membership",
    "parse_point",
    "sigma_all",
    "sigma_naive",
    "ChainResult",
    "EndpointWitness",
    "EqualityCase",
    "GapReport",
    "PreconditionError",
    "Relation",
    "gen_maclaurin_chain",
    "gen_nm_gap",
    "linear_combo_gap",
    "liu_ren_gap",
    "maclaurin_chain_check",
    "newton_gap",
    "quantitative_gap",
    "remark_violation",
    "BinomQuad",
    "CertConstants",
    "FScanRow",
    "Lemma31Report",
    "Lemma32Report",
    "SpecialCase",
    "binom_quad",
    "cert_constants",
    "decomposition_coefficient_match",
    "decomposition_residual",
    "f_scan",
    "l_value",
    "lemma31_check",
    "lemma32_check",
    "special_case_gap",
    "theta_for",
    "v_value",
    "w_value",
    "Branch",
    "CascadeResult",
    "Cubic",
    "RootTriple",
    "associated_cubic",
    "cubic_discriminant",
    "degenerate_direct_gap",
    "derivative_cascade",
    "gap_from_moments",
    "lemma21_identity_residual",
    "real_cubic_roots",
    "reduce_to_three",
    "AllSamplesDegenerate",
    "CertificateViolation",
    "ScanGrid",
    "ScanReport",
    "ThetaSummary",
    "Witness",
    "empirical_theta",
    "find_counterexample_15",
    "structured_scan",
    "report_bundle",
    "run",
]
