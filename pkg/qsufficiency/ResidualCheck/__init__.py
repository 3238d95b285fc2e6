from .ResidualCheck import ResidualCheck
from .ResidualChecks import ResidualChecks

__all__ = ["ResidualCheck", "ResidualChecks"]
