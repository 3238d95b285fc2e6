"""Structure: block identification of algebras, Koashi-Imoto decompositions,
dimension formula and measurement bounds."""

from .identify import identify_structure, structure_checks
from .canonical_algebras import (
    canonical_simple_star_basis,
    canonical_simple_jordan_basis,
    canonical_star_algebra,
    canonical_jordan_algebra,
    random_blocks,
    scrambled_algebra,
)
from .ki import ki_decompose, diagonalizing_unitary
from .bounds import jordan_dim, support_size_bound, classical_fisher, sld_fisher

__all__ = [
    "identify_structure",
    "structure_checks",
    "canonical_simple_star_basis",
    "canonical_simple_jordan_basis",
    "canonical_star_algebra",
    "canonical_jordan_algebra",
    "random_blocks",
    "scrambled_algebra",
    "ki_decompose",
    "diagonalizing_unitary",
    "jordan_dim",
    "support_size_bound",
    "classical_fisher",
    "sld_fisher",
]
