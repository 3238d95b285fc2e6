from .BlockDescriptor import BlockDescriptor, BLOCK_KINDS, canonical_blocks
from .StructureDecomposition import StructureDecomposition
from .KIDecomposition import KIDecomposition, partial_trace_first, partial_trace_second

__all__ = [
    "BlockDescriptor",
    "BLOCK_KINDS",
    "canonical_blocks",
    "StructureDecomposition",
    "KIDecomposition",
    "partial_trace_first",
    "partial_trace_second",
]
