"""Implements the BlockDescriptor class."""

BLOCK_KINDS = ("C", "R", "H", "Gamma")


class BlockDescriptor:
    """Describe one simple block of a real *-algebra or Jordan algebra.

    A block of kind ``kind`` and size ``n`` is represented on C^rep_dim,
    with multiplicity ``m``: the block acts as a (x) I_m on
    C^rep_dim (x) C^m.

    Examples
    --------

    >>> block = BlockDescriptor("H", n=2, m=1)
    >>> block.rep_dim, block.jordan_dimension, block.star_dimension
    (4, 6, 16)

    Parameters
    ----------

    kind
      "C" (complex matrices), "R" (real matrices), "H" (quaternion matrices
      embedded as 2n x 2n complex matrices) or "Gamma" (spin factor with n
      generators, Jordan algebras only).

    n
      Block size (number of generators for spin factors).

    m
      Multiplicity.
    """

    def __init__(self, kind, n, m=1):
        """Initialize."""
        if kind not in BLOCK_KINDS:
            raise ValueError("Unknown block kind %s (use one of %s)" % (kind, BLOCK_KINDS))
        if int(n) != n or n < 1 or int(m) != m or m < 1:
            raise ValueError("Block sizes must be positive integers, got n=%s, m=%s" % (n, m))
        if kind == "Gamma" and n < 2:
            raise ValueError("Gamma_1 is not simple: use two (R, 1) blocks")
        self.kind = kind
        self.n = int(n)
        self.m = int(m)

    @property
    def jordan_dimension(self):
        """Real dimension of the Hermitian part of the block."""
        n = self.n
        return {
            "C": n * n,
            "R": n * (n + 1) // 2,
            "H": 2 * n * n - n,
            "Gamma": n + 1,
        }[self.kind]

    @property
    def star_dimension(self):
        """Real dimension of the block as a *-algebra."""
        if self.kind == "Gamma":
            raise ValueError("Spin factors are Jordan algebras only")
        return {"C": 2, "R": 1, "H": 4}[self.kind] * self.n * self.n

    @property
    def rep_dim(self):
        """Dimension of the space the block acts on (multiplicity aside)."""
        if self.kind == "H":
            return 2 * self.n
        if self.kind == "Gamma":
            return 2 ** (self.n // 2)
        return self.n

    @property
    def space_dim(self):
        return self.rep_dim * self.m

    def canonical(self, mode="jordan"):
        """Return the list of descriptors this block is reported as by the
        structure identification in the given mode.

        In "jordan" mode, low-index spin factors are identified with
        matrix algebras (Gamma_2 -> (R, 2), Gamma_3 -> (C, 2),
        Gamma_5 -> (H, 2)) and the Hermitian part of a size-1 block is
        the scalars (C,1,m) -> (R,1,m), (H,1,m) -> (R,1,2m).
        """
        if mode == "star":
            return [self]
        if self.kind == "Gamma":
            kind_and_size = {2: ("R", 2), 3: ("C", 2), 5: ("H", 2)}.get(self.n)
            if kind_and_size is not None:
                return [BlockDescriptor(kind_and_size[0], kind_and_size[1], self.m)]
        if self.n == 1 and self.kind in ("C", "H"):
            return [BlockDescriptor("R", 1, self.space_dim)]
        return [self]

    def key(self):
        return (BLOCK_KINDS.index(self.kind), self.n, self.m)

    def to_tuple(self):
        return (self.kind, self.n, self.m)

    def to_dict(self):
        return {"kind": self.kind, "n": self.n, "m": self.m}

    @staticmethod
    def from_any(block):
        """Build a descriptor from a BlockDescriptor, a (kind, n[, m])
        tuple or a {kind, n, m} dict."""
        if isinstance(block, BlockDescriptor):
            return block
        if isinstance(block, dict):
            return BlockDescriptor(block["kind"], block["n"], block.get("m", 1))
        return BlockDescriptor(*block)

    def __eq__(self, other):
        return isinstance(other, BlockDescriptor) and self.to_tuple() == other.to_tuple()

    def __hash__(self):
        return hash(self.to_tuple())

    def __repr__(self):
        return "(%s,%d,%d)" % self.to_tuple()


def canonical_blocks(blocks, mode="jordan"):
    """Return the sorted list of canonical descriptors of a list of blocks
    (see ``BlockDescriptor.canonical``)."""
    result = []
    for block in blocks:
        result.extend(BlockDescriptor.from_any(block).canonical(mode=mode))
    return sorted(result, key=BlockDescriptor.key)
