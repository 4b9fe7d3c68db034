"""Numerical norms of the Cesaro averaging operator on disk function spaces.

The package computes the operator's action in three equivalent forms
(coefficient averaging, a finite integral, a weighted-composition
semigroup), measures functions in four weighted sup-norm spaces, and
verifies the closed-form norm values and bounds catalogued in
theorems.THEOREM_IDS.  The cesaronorm console script exposes the same
checks from the command line.
"""

from .cesaro import (
    SemigroupKernel,
    cesaro_coeff,
    cesaro_derivative,
    cesaro_integral,
    cesaro_of_one,
    cesaro_semigroup,
    cesaro_transform,
    semigroup_transform,
    st_apply,
)
from .empirical import (
    SampleConfig,
    extremal_for,
    operator_norm_lower_bound,
    sample_unit_ball,
)
from .errors import ConvergenceError, DomainError, PreconditionError
from .functions import (
    EVAL_RADIUS_LIMIT,
    AnalyticFunction,
    ClosedForm,
    Constant,
    KorenblumExtremal,
    LogKorenblumExtremal,
    Poly,
    PowerSeries,
    derivative,
    evaluate,
    log_weight_constant,
    one_minus_sq,
    taylor_truncate,
)
from .numerics import (
    DivergenceFlag,
    QuadratureResult,
    SupEstimate,
    extrapolate_tail,
    golden_section_max,
    integrate_finite,
    integrate_halfline_exp,
    radius_grid,
    sup_over_radius,
)
from .spaces import (
    BlochAlpha,
    HardyInf,
    Korenblum,
    KorenblumLog,
    NormEstimate,
    SpaceSpec,
    bloch_growth_bound,
    radial_sup_norm,
    space_norm,
    weight_at,
)
from .theorems import (
    DEFAULT_TOLS,
    LABELS,
    THEOREM_IDS,
    TheoremVerdict,
    bloch_lower_bound,
    bloch_lower_bound_integral,
    bloch_upper_bound,
    bloch_witness_profile,
    boundary_envelope,
    constant_one_bloch_norm,
    divergence_probe,
    h_analytic,
    h_closed_form,
    h_series_coeff,
    hardy_to_bloch_bounds,
    integrand_F,
    korenblum_norm_exact,
    korenblum_slice_integral,
    korenblum_sup,
    log_denominator,
    log_ratio,
    log_to_log_norm,
    log_to_log_slice,
    log_to_plain_lower_bound,
    log_to_plain_norm,
    log_to_plain_slice,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticFunction",
    "BlochAlpha",
    "ClosedForm",
    "Constant",
    "ConvergenceError",
    "DEFAULT_TOLS",
    "DivergenceFlag",
    "DomainError",
    "EVAL_RADIUS_LIMIT",
    "HardyInf",
    "Korenblum",
    "KorenblumExtremal",
    "KorenblumLog",
    "LABELS",
    "LogKorenblumExtremal",
    "NormEstimate",
    "Poly",
    "PowerSeries",
    "PreconditionError",
    "QuadratureResult",
    "SampleConfig",
    "SemigroupKernel",
    "SpaceSpec",
    "SupEstimate",
    "THEOREM_IDS",
    "TheoremVerdict",
    "bloch_growth_bound",
    "bloch_lower_bound",
    "bloch_lower_bound_integral",
    "bloch_upper_bound",
    "bloch_witness_profile",
    "boundary_envelope",
    "cesaro_coeff",
    "cesaro_derivative",
    "cesaro_integral",
    "cesaro_of_one",
    "cesaro_semigroup",
    "cesaro_transform",
    "constant_one_bloch_norm",
    "derivative",
    "divergence_probe",
    "evaluate",
    "extrapolate_tail",
    "extremal_for",
    "golden_section_max",
    "h_analytic",
    "h_closed_form",
    "h_series_coeff",
    "hardy_to_bloch_bounds",
    "integrand_F",
    "integrate_finite",
    "integrate_halfline_exp",
    "korenblum_norm_exact",
    "korenblum_slice_integral",
    "korenblum_sup",
    "log_denominator",
    "log_ratio",
    "log_to_log_norm",
    "log_to_log_slice",
    "log_to_plain_lower_bound",
    "log_to_plain_norm",
    "log_to_plain_slice",
    "log_weight_constant",
    "one_minus_sq",
    "operator_norm_lower_bound",
    "radial_sup_norm",
    "radius_grid",
    "sample_unit_ball",
    "semigroup_transform",
    "space_norm",
    "st_apply",
    "sup_over_radius",
    "taylor_truncate",
    "verify_theorem",
    "weight_at",
]
