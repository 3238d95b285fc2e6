"""Sufficiency: verification of sufficient maps, conditional expectations,
minimal sufficient algebras and the fixed-point pipeline."""

from .verification import (
    verify_sufficient,
    sufficiency_checks,
    sufficiency_residuals,
    model_operators,
)
from .standard_maps import pinching, diagonal_pinching, trace_replacement
from .map_properties import (
    is_positive_sampled,
    is_unital,
    hermiticity_residual,
    schwarz_residual,
    jordan_ce_residuals,
    bimodule_residual,
    faithfulness_residual,
    operator_norm_sampled,
    adjoint_preservation_residual,
    support_residual,
)
from .conditional_expectations import conditional_expectation, faithful_extension
from .minimal_algebras import (
    minimal_sufficient_star,
    minimal_sufficient_jordan,
    modular_orbit_generators,
    modular_orbit_star,
    jordan_witness,
    sufficient_enlargements,
    ENLARGEMENT_KINDS,
)
from .fixed_point_pipeline import (
    fixed_point_pipeline,
    fixed_point_projection,
    power_limit,
    pipeline_prechecks,
    verify_certificate,
)
from .likelihood_checks import likelihood_in_algebra_check, likelihood_ratio_residuals
from .invariance import d_tilde_invariance, modular_equivalence_checks

__all__ = [
    "verify_sufficient",
    "sufficiency_checks",
    "sufficiency_residuals",
    "model_operators",
    "pinching",
    "diagonal_pinching",
    "trace_replacement",
    "is_positive_sampled",
    "is_unital",
    "hermiticity_residual",
    "schwarz_residual",
    "jordan_ce_residuals",
    "bimodule_residual",
    "faithfulness_residual",
    "operator_norm_sampled",
    "adjoint_preservation_residual",
    "support_residual",
    "conditional_expectation",
    "faithful_extension",
    "minimal_sufficient_star",
    "minimal_sufficient_jordan",
    "modular_orbit_generators",
    "modular_orbit_star",
    "jordan_witness",
    "sufficient_enlargements",
    "ENLARGEMENT_KINDS",
    "fixed_point_pipeline",
    "fixed_point_projection",
    "power_limit",
    "pipeline_prechecks",
    "verify_certificate",
    "likelihood_in_algebra_check",
    "likelihood_ratio_residuals",
    "d_tilde_invariance",
    "modular_equivalence_checks",
]
