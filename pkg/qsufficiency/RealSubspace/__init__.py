from .RealSubspace import RealSubspace, FLAG_NAMES
from .closures import (
    generate_star,
    generate_jordan,
    commutant,
    center,
    modular_conjugation,
    modular_invariance_residuals,
    is_modular_invariant,
)
from .predicates import (
    verify_predicates,
    closure_residuals,
    real_cp_residual,
    jordan_triple_residual,
    with_verified_flags,
)

__all__ = [
    "RealSubspace",
    "FLAG_NAMES",
    "generate_star",
    "generate_jordan",
    "commutant",
    "center",
    "modular_conjugation",
    "modular_invariance_residuals",
    "is_modular_invariant",
    "verify_predicates",
    "closure_residuals",
    "real_cp_residual",
    "jordan_triple_residual",
    "with_verified_flags",
]
