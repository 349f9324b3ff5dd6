"""Dense matrices over a finite field.

Entries are canonical integers of the owning field (srlab.field encoding),
stored row-major as tuples.  Elimination uses deterministic pivoting (first
nonzero entry scanning columns left to right, rows top to bottom), so the
reduced row-echelon form is identical across runs and platforms.  Canonical
code equality is defined through that rref.
"""

from __future__ import annotations

from .errors import DimensionMismatch

__all__ = ["MatrixGF"]


class MatrixGF:
    """Immutable matrix; `field` supplies integer arithmetic."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, ncols=None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise DimensionMismatch("ragged rows")
        elif ncols is None:
            raise DimensionMismatch("empty matrix needs an explicit column count")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixGF is immutable")

    @classmethod
    def identity(cls, field, n: int) -> "MatrixGF":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field, r: int, c: int) -> "MatrixGF":
        return cls(field, [[0] * c for _ in range(r)], c)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __eq__(self, other):
        return (
            isinstance(other, MatrixGF)
            and self.field is other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((id(self.field), self.shape, self.rows))

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def is_zero(self) -> bool:
        return all(all(e == 0 for e in row) for row in self.rows)

    # -- elimination ---------------------------------------------------

    def _echelon(self):
        """Return (rref rows as lists, pivot column list)."""
        f = self.field
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            sel = None
            for i in range(r, len(rows)):
                if rows[i][c] != 0:
                    sel = i
                    break
            if sel is None:
                continue
            rows[r], rows[sel] = rows[sel], rows[r]
            inv = f.inv(rows[r][c])
            if inv != 1:
                rows[r] = [f.mul(inv, e) for e in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c] != 0:
                    factor = rows[i][c]
                    ri, rr = rows[i], rows[r]
                    rows[i] = [f.sub(ri[j], f.mul(factor, rr[j])) for j in range(self.ncols)]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return rows[:r], pivots

    def rref(self) -> "MatrixGF":
        """Reduced row-echelon form with zero rows dropped."""
        rows, _ = self._echelon()
        return MatrixGF(self.field, rows, self.ncols)

    def rank(self) -> int:
        return len(self._echelon()[0])

    def kernel_basis(self) -> "MatrixGF":
        """Rows span {x : M x^T = 0}; always cols - rank of them."""
        f = self.field
        rows, pivots = self._echelon()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [0] * self.ncols
            v[fc] = 1
            for i, pc in enumerate(pivots):
                v[pc] = f.neg(rows[i][fc])
            basis.append(v)
        return MatrixGF(f, basis, self.ncols)

    # -- arithmetic ----------------------------------------------------

    def transpose(self) -> "MatrixGF":
        return MatrixGF(
            self.field,
            [[self.rows[r][c] for r in range(self.nrows)] for c in range(self.ncols)],
            self.nrows,
        )

    def mat_mul(self, other: "MatrixGF") -> "MatrixGF":
        if self.field is not other.field:
            raise DimensionMismatch("fields differ")
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        f = self.field
        ocols = other.ncols
        orows = other.rows
        out = []
        for arow in self.rows:
            acc = [0] * ocols
            for k, a in enumerate(arow):
                if a == 0:
                    continue
                brow = orows[k]
                if a == 1:
                    for j in range(ocols):
                        if brow[j]:
                            acc[j] = f.add(acc[j], brow[j])
                else:
                    for j in range(ocols):
                        if brow[j]:
                            acc[j] = f.add(acc[j], f.mul(a, brow[j]))
            out.append(acc)
        return MatrixGF(f, out, ocols)

    def __matmul__(self, other):
        return self.mat_mul(other)

    def gram(self) -> "MatrixGF":
        """G G^T, the matrix of pairwise row inner products."""
        return self.mat_mul(self.transpose())

    def invert(self) -> "MatrixGF":
        if self.nrows != self.ncols:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.nrows
        aug = MatrixGF(
            self.field,
            [list(self.rows[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)],
            2 * n,
        )
        rows, pivots = aug._echelon()
        if pivots != list(range(n)):
            raise DimensionMismatch("matrix is singular")
        return MatrixGF(self.field, [r[n:] for r in rows], n)

    # -- row-space helpers ----------------------------------------------

    def reduce_vector(self, vec):
        """Reduce `vec` against these rows (assumed rref). Returns the residue."""
        f = self.field
        v = list(vec)
        for row in self.rows:
            p = next((j for j, e in enumerate(row) if e != 0), None)
            if p is None or v[p] == 0:
                continue
            factor = f.mul(v[p], f.inv(row[p]))
            v = [f.sub(v[j], f.mul(factor, row[j])) for j in range(len(v))]
        return v

    def row_space_contains(self, vec) -> bool:
        if len(vec) != self.ncols:
            raise DimensionMismatch("vector length mismatch")
        return all(e == 0 for e in self.reduce_vector(vec))

    def __repr__(self):
        return f"MatrixGF({self.nrows}x{self.ncols} over GF({self.field.order}))"
