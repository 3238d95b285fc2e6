from .Tolerances import Tolerances
from .SufficiencyError import SufficiencyError, ModelFileError
from .ResidualCheck import ResidualCheck, ResidualChecks

from .Model import Model, ModelElement, likelihood_ratio, sld, d_tilde

from .Superoperator import Superoperator

from .RealSubspace import (
    RealSubspace,
    generate_star,
    generate_jordan,
    commutant,
    center,
    is_modular_invariant,
    verify_predicates,
)

from .sufficiency import (
    verify_sufficient,
    sufficiency_checks,
    pinching,
    diagonal_pinching,
    trace_replacement,
    conditional_expectation,
    faithful_extension,
    minimal_sufficient_star,
    minimal_sufficient_jordan,
    modular_orbit_star,
    sufficient_enlargements,
    fixed_point_pipeline,
    verify_certificate,
    likelihood_in_algebra_check,
    modular_equivalence_checks,
)

from .SufficiencyCertificate import SufficiencyCertificate, FaithfulExtension

from .StructureDecomposition import (
    BlockDescriptor,
    StructureDecomposition,
    KIDecomposition,
    canonical_blocks,
)

from .structure import (
    identify_structure,
    canonical_star_algebra,
    canonical_jordan_algebra,
    scrambled_algebra,
    ki_decompose,
    jordan_dim,
    support_size_bound,
    classical_fisher,
    sld_fisher,
)

from .reports import Report, parse_model, parse_povm, write_model, write_report

from .verification import random_model, constructed_ki_model, verify_model, run_selftest

from .version import __version__

__all__ = [
    "Tolerances",
    "SufficiencyError",
    "ModelFileError",
    "ResidualCheck",
    "ResidualChecks",
    "Model",
    "ModelElement",
    "likelihood_ratio",
    "sld",
    "d_tilde",
    "Superoperator",
    "RealSubspace",
    "generate_star",
    "generate_jordan",
    "commutant",
    "center",
    "is_modular_invariant",
    "verify_predicates",
    "verify_sufficient",
    "sufficiency_checks",
    "pinching",
    "diagonal_pinching",
    "trace_replacement",
    "conditional_expectation",
    "faithful_extension",
    "minimal_sufficient_star",
    "minimal_sufficient_jordan",
    "modular_orbit_star",
    "sufficient_enlargements",
    "fixed_point_pipeline",
    "verify_certificate",
    "likelihood_in_algebra_check",
    "modular_equivalence_checks",
    "SufficiencyCertificate",
    "FaithfulExtension",
    "BlockDescriptor",
    "StructureDecomposition",
    "KIDecomposition",
    "canonical_blocks",
    "identify_structure",
    "canonical_star_algebra",
    "canonical_jordan_algebra",
    "scrambled_algebra",
    "ki_decompose",
    "jordan_dim",
    "support_size_bound",
    "classical_fisher",
    "sld_fisher",
    "Report",
    "parse_model",
    "parse_povm",
    "write_model",
    "write_report",
    "random_model",
    "constructed_ki_model",
    "verify_model",
    "run_selftest",
    "__version__",
]
