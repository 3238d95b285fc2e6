from .SufficiencyCertificate import SufficiencyCertificate
from .FaithfulExtension import FaithfulExtension

__all__ = ["SufficiencyCertificate", "FaithfulExtension"]
