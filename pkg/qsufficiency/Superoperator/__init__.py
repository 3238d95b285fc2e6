from .Superoperator import Superoperator, complex_unit_matrix

__all__ = ["Superoperator", "complex_unit_matrix"]
