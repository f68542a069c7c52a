"""Exact computation with SU(3)-structures on six-dimensional Lie algebras."""

from .errors import (
    Su3Error,
    ParseError,
    DegreeError,
    NotStable,
    WrongOrientation,
    Degenerate2Form,
    NotSymmetric,
    SingularMetric,
    UnknownName,
    ParamOutOfRange,
    InexactScalars,
    NotExactSqrt,
    NotRationalizable,
    InconsistentTorsion,
    ResourceBudgetExceeded,
    ModeUnsupported,
)
from .scalars import (
    Surd,
    BigFloat,
    DEFAULT_DPS,
    ZERO_TOL,
    parse_scalar,
    format_scalar,
    scalar_is_zero,
    scalar_sqrt,
)
from .exterior import KForm, basis_words, five_form_iso, parse_form, format_form
from .liealg import (
    LieAlgebra,
    MetricMatrix,
    catalog,
    CATALOG_NAMES,
    jensen_metric,
    parse_algebra,
    format_algebra,
)
from .hitchin import SU3Structure, validate, k_endo, lambda_of, almost_complex, psi_minus
from .torsion import TorsionData, classify, torsion_forms, is_half_flat
from .groebner import (
    Budget,
    Ideal,
    MonomialOrder,
    Poly,
    buchberger,
    format_poly,
    groebner_basis,
    ideal_equal,
    ideal_quotient_principal,
    normal_form,
    parse_order,
    parse_poly,
    reduce_poly,
    saturate,
)
from .systems import (
    SystemReport,
    Verdict,
    build_system,
    generic_ansatz,
    nonexistence_pipeline,
    symbolic_h_tilde,
    symbolic_lambda,
    thm32_pipeline,
)
from .obstruction import (
    ObstructionReport,
    default_candidates,
    jtilde_pullback,
    obstruction_scan,
    obstruction_test,
)

__version__ = "0.1.0"

__all__ = [
    "Su3Error",
    "ParseError",
    "DegreeError",
    "NotStable",
    "WrongOrientation",
    "Degenerate2Form",
    "NotSymmetric",
    "SingularMetric",
    "UnknownName",
    "ParamOutOfRange",
    "InexactScalars",
    "NotExactSqrt",
    "NotRationalizable",
    "InconsistentTorsion",
    "ResourceBudgetExceeded",
    "ModeUnsupported",
    "Surd",
    "BigFloat",
    "DEFAULT_DPS",
    "ZERO_TOL",
    "parse_scalar",
    "format_scalar",
    "scalar_is_zero",
    "scalar_sqrt",
    "KForm",
    "basis_words",
    "five_form_iso",
    "parse_form",
    "format_form",
    "LieAlgebra",
    "MetricMatrix",
    "catalog",
    "CATALOG_NAMES",
    "jensen_metric",
    "parse_algebra",
    "format_algebra",
    "SU3Structure",
    "validate",
    "k_endo",
    "lambda_of",
    "almost_complex",
    "psi_minus",
    "TorsionData",
    "classify",
    "torsion_forms",
    "is_half_flat",
    "Budget",
    "Ideal",
    "MonomialOrder",
    "Poly",
    "buchberger",
    "format_poly",
    "groebner_basis",
    "ideal_equal",
    "ideal_quotient_principal",
    "normal_form",
    "parse_order",
    "parse_poly",
    "reduce_poly",
    "saturate",
    "SystemReport",
    "Verdict",
    "build_system",
    "generic_ansatz",
    "nonexistence_pipeline",
    "symbolic_h_tilde",
    "symbolic_lambda",
    "thm32_pipeline",
    "ObstructionReport",
    "default_candidates",
    "jtilde_pullback",
    "obstruction_scan",
    "obstruction_test",
]
