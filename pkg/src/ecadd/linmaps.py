"""F2-linear maps on F2^n as n x n bit matrices.

A matrix is stored as a tuple of n row bitmasks: bit i of ``rows[j]`` is
the entry in row j, column i.  Vectors are packed integers (bit i =
coordinate i) and act as columns, so ``apply`` computes output bit j as
the parity of ``rows[j] & v``.

Builders are provided for the three linear maps used by field-operation
synthesis: multiplication by a nonzero constant, squaring (the Frobenius
map), and square root (its inverse).
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2field import FieldElem, IrreduciblePoly, poly_mod, poly_mul


class SingularMatrixError(ValueError):
    """Matrix (or requested map) is not invertible."""


@dataclass(frozen=True)
class BinMatrix:
    """A square bit matrix over GF(2) with packed integer rows."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("matrix dimension must be >= 1")
        if len(self.rows) != self.n:
            raise ValueError("row count does not match dimension")
        mask = (1 << self.n) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the matrix width")

    @classmethod
    def identity(cls, n: int) -> "BinMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_lists(cls, entries) -> "BinMatrix":
        """Build from a list of rows, each a list of 0/1 entries."""
        n = len(entries)
        rows = []
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix must be square")
            rows.append(sum((1 if b else 0) << i for i, b in enumerate(row)))
        return cls(n, tuple(rows))

    def entry(self, j: int, i: int) -> int:
        return self.rows[j] >> i & 1

    @property
    def weight(self) -> int:
        """Total number of nonzero entries."""
        return sum(r.bit_count() for r in self.rows)

    @property
    def row_weights(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    @property
    def col_weights(self) -> tuple[int, ...]:
        return self.transpose().row_weights

    @property
    def max_degree(self) -> int:
        """Largest row or column weight (the CNOT-depth of the map)."""
        if self.weight == 0:
            return 0
        return max(max(self.row_weights), max(self.col_weights))

    def transpose(self) -> "BinMatrix":
        cols = [0] * self.n
        for j, r in enumerate(self.rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << j
                r ^= low
        return BinMatrix(self.n, tuple(cols))

    def apply(self, v: int) -> int:
        """Matrix-vector product on a packed vector."""
        out = 0
        for j, r in enumerate(self.rows):
            out |= ((r & v).bit_count() & 1) << j
        return out

    def __matmul__(self, other: "BinMatrix") -> "BinMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        # Row j of the product is the XOR of other's rows selected by
        # the bits of self's row j.
        rows = []
        for r in self.rows:
            acc = 0
            while r:
                low = r & -r
                acc ^= other.rows[low.bit_length() - 1]
                r ^= low
            rows.append(acc)
        return BinMatrix(self.n, tuple(rows))

    def invert(self) -> "BinMatrix":
        """Inverse over GF(2) via Gauss-Jordan elimination."""
        n = self.n
        # Augmented rows: low n bits = self, high n bits = identity.
        aug = [self.rows[j] | (1 << (n + j)) for j in range(n)]
        for col in range(n):
            pivot = None
            for j in range(col, n):
                if aug[j] >> col & 1:
                    pivot = j
                    break
            if pivot is None:
                raise SingularMatrixError("matrix is singular over GF(2)")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            prow = aug[col]
            for j in range(n):
                if j != col and aug[j] >> col & 1:
                    aug[j] ^= prow
        return BinMatrix(n, tuple(r >> n for r in aug))

    def is_invertible(self) -> bool:
        try:
            self.invert()
            return True
        except SingularMatrixError:
            return False


# ----------------------------------------------------------------------
# Field-map builders
# ----------------------------------------------------------------------

def _matrix_from_columns(n: int, cols) -> BinMatrix:
    rows = [0] * n
    for i, c in enumerate(cols):
        while c:
            low = c & -c
            rows[low.bit_length() - 1] |= 1 << i
            c ^= low
    return BinMatrix(n, tuple(rows))


def matrix_of_const_mul(c: FieldElem) -> BinMatrix:
    """Matrix of multiplication by a nonzero constant c in F2^n."""
    if c.value == 0:
        raise SingularMatrixError("multiplication by zero is singular")
    p = c.field.poly.bits
    n = c.field.n
    cols = []
    cur = c.value
    for _ in range(n):
        cols.append(cur)
        cur = poly_mod(cur << 1, p)
    return _matrix_from_columns(n, cols)


def matrix_of_squaring(field: IrreduciblePoly) -> BinMatrix:
    """Matrix of the Frobenius map a -> a^2; column i is x^(2i) mod p."""
    p = field.poly.bits
    n = field.n
    cols = []
    cur = 1
    for _ in range(n):
        cols.append(cur)
        cur = poly_mod(cur << 2, p)
    return _matrix_from_columns(n, cols)


def matrix_of_sqrt(field: IrreduciblePoly) -> BinMatrix:
    """Matrix of the inverse Frobenius map a -> sqrt(a)."""
    return matrix_of_squaring(field).invert()


def random_invertible(n: int, rng) -> BinMatrix:
    """A uniformly random invertible n x n bit matrix (rejection sampling)."""
    while True:
        m = BinMatrix(n, tuple(rng.getrandbits(n) for _ in range(n)))
        if m.is_invertible():
            return m
