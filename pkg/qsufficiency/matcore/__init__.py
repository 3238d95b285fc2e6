"""Dense complex matrix kernel: Hilbert-Schmidt geometry, spectral
functions, canonical generators, random operators and serialization."""

from .hilbert_schmidt import (
    as_operator,
    hs_inner,
    hs_norm,
    vectorize,
    devectorize,
    vectorize_all,
    operator_space_dim,
    operator_basis,
    hermitian_basis,
    hermitian_basis_matrix,
)
from .spectral import (
    is_hermitian,
    hermitize,
    hermitian_residual,
    check_hermitian,
    herm_eig,
    retained_mask,
    matfun,
    min_eigenvalue,
    check_psd,
    is_psd,
    geninv,
    psd_sqrt,
    psd_inv_sqrt,
    support_basis,
    support_proj,
    eigenprojections,
    jordan_product,
    commutator,
    is_unitary,
)
from .generators import (
    PAULI_I,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    pauli_matrices,
    quaternion_multiply,
    quaternion_conjugate,
    quaternion_matrix_product,
    quaternion_embed,
    spin_factor,
    SpinFactorGenerators,
)
from .random_operators import (
    as_generator,
    derive_seeds,
    random_complex_matrix,
    random_hermitian,
    random_psd,
    random_density_matrix,
    random_unitary,
)
from .formatting import (
    matrix_to_json,
    matrix_from_json,
    format_float,
    to_canonical_json,
    score_to_formatted_string,
)

__all__ = [
    "as_operator",
    "hs_inner",
    "hs_norm",
    "vectorize",
    "devectorize",
    "vectorize_all",
    "operator_space_dim",
    "operator_basis",
    "hermitian_basis",
    "hermitian_basis_matrix",
    "is_hermitian",
    "hermitize",
    "hermitian_residual",
    "check_hermitian",
    "herm_eig",
    "retained_mask",
    "matfun",
    "min_eigenvalue",
    "check_psd",
    "is_psd",
    "geninv",
    "psd_sqrt",
    "psd_inv_sqrt",
    "support_basis",
    "support_proj",
    "eigenprojections",
    "jordan_product",
    "commutator",
    "is_unitary",
    "PAULI_I",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "pauli_matrices",
    "quaternion_multiply",
    "quaternion_conjugate",
    "quaternion_matrix_product",
    "quaternion_embed",
    "spin_factor",
    "SpinFactorGenerators",
    "as_generator",
    "derive_seeds",
    "random_complex_matrix",
    "random_hermitian",
    "random_psd",
    "random_density_matrix",
    "random_unitary",
    "matrix_to_json",
    "matrix_from_json",
    "format_float",
    "to_canonical_json",
    "score_to_formatted_string",
]
