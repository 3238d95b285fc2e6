"""Canonical block algebras, used as targets of the structure
identification and to build round-trip examples."""

import numpy as np

from ..RealSubspace import RealSubspace
from ..StructureDecomposition import BlockDescriptor
from ..matcore import (
    as_generator,
    hermitian_basis,
    hermitize,
    quaternion_embed,
    random_unitary,
    spin_factor,
)


def _matrix_unit(n, i, j):
    unit = np.zeros((n, n), dtype=complex)
    unit[i, j] = 1
    return unit


def canonical_simple_star_basis(kind, n):
    """Spanning list of the canonical simple *-algebra M_n(C), M_n(R) or
    M_n(H) (the latter embedded in M_2n(C))."""
    units = [_matrix_unit(n, i, j) for i in range(n) for j in range(n)]
    if kind == "C":
        return units + [1j * unit for unit in units]
    if kind == "R":
        return units
    if kind == "H":
        result = []
        for i in range(n):
            for j in range(n):
                for component in range(4):
                    W = np.zeros((n, n, 4))
                    W[i, j, component] = 1
                    result.append(quaternion_embed(W))
        return result
    raise ValueError("No *-algebra of kind %s" % kind)


def canonical_simple_jordan_basis(kind, n):
    """Spanning list of the Hermitian part of a canonical simple block, or
    of the spin factor span{I, gamma_1..gamma_n}."""
    if kind == "C":
        return hermitian_basis(n)
    if kind == "Gamma":
        gammas = spin_factor(n)
        return [np.eye(gammas.dim, dtype=complex)] + list(gammas)
    return [hermitize(b) for b in canonical_simple_star_basis(kind, n)]


def _direct_sum(blocks, simple_basis):
    blocks = [BlockDescriptor.from_any(block) for block in blocks]
    total = sum(block.space_dim for block in blocks)
    operators, start = [], 0
    for block in blocks:
        identity = np.eye(block.m)
        for b in simple_basis(block.kind, block.n):
            operator = np.zeros((total, total), dtype=complex)
            stop = start + block.space_dim
            operator[start:stop, start:stop] = np.kron(b, identity)
            operators.append(operator)
        start += block.space_dim
    return operators, total


def canonical_star_algebra(blocks, label=None):
    """Return (+)_i A_i (x) I_{m_i} as a RealSubspace, for blocks of kinds
    C, R and H given as BlockDescriptors or (kind, n, m) tuples."""
    operators, total = _direct_sum(blocks, canonical_simple_star_basis)
    algebra = RealSubspace.span(operators, dim=total, label=label)
    algebra.flags.update(contains_identity=True, star_closed=True, mult_closed=True)
    return algebra


def canonical_jordan_algebra(blocks, label=None):
    """Return the Hermitian part of (+)_i A_i (x) I_{m_i} as a RealSubspace,
    spin factor blocks (kind "Gamma") included."""
    operators, total = _direct_sum(blocks, canonical_simple_jordan_basis)
    algebra = RealSubspace.span(operators, dim=total, label=label)
    algebra.flags.update(contains_identity=True, jordan_closed=True)
    return algebra


def random_blocks(max_dim, mode="star", seed=None, max_blocks=3):
    """Return a random list of BlockDescriptors with total space dimension
    at most ``max_dim`` (spin factors Gamma_4 and Gamma_5 can appear in
    "jordan" mode)."""
    rng = as_generator(seed)
    candidates = [
        BlockDescriptor(kind, n, m)
        for kind in ("C", "R", "H")
        for n in (1, 2, 3)
        for m in (1, 2)
    ]
    if mode == "jordan":
        candidates += [BlockDescriptor("Gamma", n, m) for n in (4, 5) for m in (1, 2)]
    blocks, remaining = [], max_dim
    for _ in range(max_blocks):
        fitting = [block for block in candidates if block.space_dim <= remaining]
        if len(fitting) == 0:
            break
        block = fitting[int(rng.integers(len(fitting)))]
        blocks.append(block)
        remaining -= block.space_dim
        if rng.random() < 0.3:
            break
    return blocks


def scrambled_algebra(blocks, mode="star", seed=None):
    """Return (algebra, U): the canonical algebra of the blocks conjugated
    by a Haar-random unitary U, i.e. the span of U b U*."""
    build = canonical_star_algebra if mode == "star" else canonical_jordan_algebra
    canonical = build(blocks)
    U = random_unitary(canonical.dim, seed=seed)
    algebra = canonical.conjugated(U.conj().T)
    return algebra, U
