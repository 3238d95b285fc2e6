from .Model import Model
from .ModelElement import ModelElement, ELEMENT_KINDS
from .likelihood_ratios import sqrt_likelihood_ratio, sld, likelihood_ratio
from .superoperators import (
    modular_superop,
    jordan_superop,
    d_tilde,
    d_tilde_function,
    d_rho,
)

__all__ = [
    "Model",
    "ModelElement",
    "ELEMENT_KINDS",
    "sqrt_likelihood_ratio",
    "sld",
    "likelihood_ratio",
    "modular_superop",
    "jordan_superop",
    "d_tilde",
    "d_tilde_function",
    "d_rho",
]
