"""Dense exact linear algebra over GF(q).

Gaussian elimination with first-nonzero pivoting; no floating point, no
sparsity.  Matrices hold FieldElement entries and are plain values: every
operation returns a new matrix.
"""

from __future__ import annotations

import json

from .errors import DuplicateIndexError, MixedContextsError
from .gf import FieldCtx, FieldElement, parse_field_spec


class MatrixGF:
    __slots__ = ("ctx", "rows", "cols", "data")

    def __init__(self, ctx: FieldCtx, data, cols: int | None = None):
        self.ctx = ctx
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else (cols or 0)
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
            for e in row:
                if not isinstance(e, FieldElement) or e.ctx != ctx:
                    raise MixedContextsError("entry from a different field")

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows) -> "MatrixGF":
        """Build from rows of ints / lists / elements, coerced into ctx."""
        return cls(ctx, [[ctx.element(e) for e in row] for row in rows])

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "MatrixGF":
        z = ctx.zero()
        return cls(ctx, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "MatrixGF":
        z, o = ctx.zero(), ctx.one()
        return cls(ctx, [[o if i == j else z for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> list[FieldElement]:
        return list(self.data[i])

    # -- elimination ---------------------------------------------------------

    def rref(self) -> tuple["MatrixGF", int, list[int]]:
        """Reduced row echelon form; returns (R, rank, pivot columns)."""
        data = [list(row) for row in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, self.rows) if data[i][c]), None)
            if pr is None:
                continue
            data[r], data[pr] = data[pr], data[r]
            inv = data[r][c].inverse()
            data[r] = [e * inv for e in data[r]]
            for i in range(self.rows):
                if i != r and data[i][c]:
                    f = data[i][c]
                    data[i] = [a - f * b for a, b in zip(data[i], data[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return MatrixGF(self.ctx, data), r, pivots

    def rank(self) -> int:
        return self.rref()[1]

    def nonzero_rows(self) -> "MatrixGF":
        kept = [row for row in self.data if any(row)]
        return MatrixGF(self.ctx, kept, cols=self.cols)

    def kernel_basis(self) -> "MatrixGF":
        """Basis of the right null space {v : M v^T = 0}, one row per free column.

        Emitted in RREF form: the submatrix on free columns is the identity.
        """
        R, rank, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        z, o = self.ctx.zero(), self.ctx.one()
        rows = []
        for f in free:
            v = [z] * self.cols
            v[f] = o
            for i, pc in enumerate(pivots):
                v[pc] = -R.data[i][f]
            rows.append(v)
        return MatrixGF(self.ctx, rows, cols=self.cols)

    def columns_rank(self, cols) -> int:
        """Rank of the selected column submatrix, without materializing it.

        Incrementally reduces each selected column against the pivot columns
        accumulated so far (a different code path from rref, usable as a
        cross-check).
        """
        cols = list(cols)
        seen = set()
        for c in cols:
            if not isinstance(c, int) or not 0 <= c < self.cols:
                raise IndexError(f"column index {c} out of range")
            if c in seen:
                raise DuplicateIndexError(f"duplicate column index {c}")
            seen.add(c)
        pivots: list[tuple[int, list[FieldElement]]] = []
        for c in cols:
            v = [self.data[i][c] for i in range(self.rows)]
            for lead, pvec in pivots:
                f = v[lead]
                if f:
                    v = [a - f * b for a, b in zip(v, pvec)]
            lead = next((i for i in range(self.rows) if v[i]), None)
            if lead is not None:
                inv = v[lead].inverse()
                pivots.append((lead, [e * inv for e in v]))
        return len(pivots)

    # -- shaping and products --------------------------------------------------

    def submatrix_columns(self, cols) -> "MatrixGF":
        cols = list(cols)
        return MatrixGF(
            self.ctx, [[row[c] for c in cols] for row in self.data], cols=len(cols)
        )

    def transpose(self) -> "MatrixGF":
        return MatrixGF(
            self.ctx,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        if self.ctx != other.ctx:
            raise MixedContextsError("matrix product across fields")
        if self.cols != other.rows:
            raise ValueError("inner dimensions differ")
        z = self.ctx.zero()
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = self.data[i][k]
                    if a:
                        acc = acc + a * other.data[k][j]
                row.append(acc)
            out.append(row)
        return MatrixGF(self.ctx, out)

    def mul_vector(self, vec) -> list[FieldElement]:
        if len(vec) != self.cols:
            raise ValueError("vector length differs from column count")
        z = self.ctx.zero()
        out = []
        for i in range(self.rows):
            acc = z
            for a, x in zip(self.data[i], vec):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return out

    def vstack(self, other: "MatrixGF") -> "MatrixGF":
        if self.ctx != other.ctx or self.cols != other.cols:
            raise ValueError("stack shape/field mismatch")
        return MatrixGF(self.ctx, self.data + other.data)

    def inverse(self) -> "MatrixGF":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        aug = MatrixGF(
            self.ctx,
            [row + idr for row, idr in zip(self.data, MatrixGF.identity(self.ctx, self.rows).data)],
        )
        R, _, pivots = aug.rref()
        if pivots[: self.rows] != list(range(self.rows)):
            raise ValueError("matrix is singular")
        return MatrixGF(self.ctx, [row[self.rows:] for row in R.data])

    # -- row-space queries ------------------------------------------------------

    def reduce_vector(self, vec) -> list[FieldElement]:
        """Residual of vec after elimination against this matrix's rows.

        Rows are used with their leading entries as pivots, so the result is
        the zero vector iff vec lies in the row space when self is in RREF.
        """
        v = [self.ctx.element(e) for e in vec]
        if len(v) != self.cols:
            raise ValueError("vector length differs from column count")
        for row in self.data:
            lead = next((j for j in range(self.cols) if row[j]), None)
            if lead is None or not v[lead]:
                continue
            f = v[lead] / row[lead]
            v = [a - f * b for a, b in zip(v, row)]
        return v

    def row_space_contains(self, vec) -> bool:
        return not any(self.reduce_vector(vec))

    # -- value semantics and encoding -------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def text(self) -> str:
        cells = [[e.text() for e in row] for row in self.data]
        widths = [
            max((len(cells[i][j]) for i in range(self.rows)), default=1)
            for j in range(self.cols)
        ]
        lines = [
            " ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells
        ]
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "field": self.ctx.spec(),
            "entries": [[e.to_list() for e in row] for row in self.data],
        }

    @classmethod
    def from_json(cls, doc: dict, ctx: FieldCtx | None = None) -> "MatrixGF":
        if ctx is None:
            ctx = parse_field_spec(doc["field"])
        entries = doc["entries"]
        if len(entries) != doc["rows"] or any(len(r) != doc["cols"] for r in entries):
            raise ValueError("matrix JSON shape mismatch")
        if doc["rows"] == 0:
            return cls.zeros(ctx, 0, doc["cols"])
        return cls.from_rows(ctx, entries)

    def __repr__(self):
        return f"MatrixGF({self.rows}x{self.cols} over GF({self.ctx.q}))\n{self.text()}"


def dumps_matrix(m: MatrixGF) -> str:
    return json.dumps(m.to_json(), separators=(",", ":"))
