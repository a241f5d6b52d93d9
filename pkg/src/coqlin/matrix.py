"""Dense coquaternion matrices and the row/column surgery the solvers need.

Public indices are 1-based throughout (``a[1, 1]`` is the top-left
entry); this keeps the cofactor index bookkeeping identical to the usual
mathematical convention and the error messages unambiguous.  Matrices
are immutable values: every operation returns a fresh matrix.
"""

from __future__ import annotations

from .coquaternion import Coquaternion, same_backend
from .errors import BackendMismatchError, DimensionError, IndexRangeError


class CoqMatrix:
    """An immutable, row-major, m x n matrix of coquaternions."""

    __slots__ = ("rows", "cols", "_entries", "backend")

    def __init__(self, rows_of_entries):
        grid = [tuple(row) for row in rows_of_entries]
        if not grid or not grid[0]:
            raise DimensionError("matrix must have at least one row and one column")
        m, n = len(grid), len(grid[0])
        for row in grid:
            if len(row) != n:
                raise DimensionError("ragged rows: expected %d columns" % n)
        entries = tuple(e for row in grid for e in row)
        backend = entries[0].backend
        for e in entries:
            if not isinstance(e, Coquaternion):
                raise TypeError("matrix entries must be Coquaternion, got %s"
                                % type(e).__name__)
            if e.backend is not backend and e.backend != backend:
                raise BackendMismatchError("matrix entries mix scalar backends")
        object.__setattr__(self, "rows", m)
        object.__setattr__(self, "cols", n)
        object.__setattr__(self, "_entries", entries)
        object.__setattr__(self, "backend", backend)

    def __setattr__(self, name, value):
        raise AttributeError("CoqMatrix is immutable")

    @classmethod
    def _raw(cls, m, n, entries, backend):
        self = object.__new__(cls)
        object.__setattr__(self, "rows", m)
        object.__setattr__(self, "cols", n)
        object.__setattr__(self, "_entries", entries)
        object.__setattr__(self, "backend", backend)
        return self

    @classmethod
    def identity(cls, n, backend=None):
        from .coquaternion import EXACT, one, zero

        backend = backend or EXACT
        o, z = one(backend), zero(backend)
        return cls._raw(
            n, n,
            tuple(o if r == c else z for r in range(n) for c in range(n)),
            backend,
        )

    # -- access ---------------------------------------------------------

    def _check_row(self, i):
        if not 1 <= i <= self.rows:
            raise IndexRangeError("row index %d outside 1..%d" % (i, self.rows))

    def _check_col(self, j):
        if not 1 <= j <= self.cols:
            raise IndexRangeError("column index %d outside 1..%d" % (j, self.cols))

    def __getitem__(self, ij):
        """Entry at 1-based position ``(i, j)``."""
        i, j = ij
        self._check_row(i)
        self._check_col(j)
        return self._entries[(i - 1) * self.cols + (j - 1)]

    def row(self, i):
        """The ``i``-th row (1-based) as a tuple."""
        self._check_row(i)
        base = (i - 1) * self.cols
        return self._entries[base:base + self.cols]

    def col(self, j):
        """The ``j``-th column (1-based) as a tuple."""
        self._check_col(j)
        return self._entries[j - 1::self.cols]

    def to_rows(self):
        """All rows as a tuple of tuples (0-based iteration convenience)."""
        n = self.cols
        return tuple(self._entries[r * n:(r + 1) * n] for r in range(self.rows))

    @property
    def is_square(self):
        return self.rows == self.cols

    # -- ring structure ---------------------------------------------------

    def __matmul__(self, other):
        if not isinstance(other, CoqMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(
                "cannot multiply %dx%d by %dx%d"
                % (self.rows, self.cols, other.rows, other.cols)
            )
        backend = same_backend(self, other)
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            arow = a[i]
            for l in range(other.cols):
                # Factors multiply left-to-right; summation order is fixed.
                acc = arow[0] * b[0][l]
                for s in range(1, self.cols):
                    acc = acc + arow[s] * b[s][l]
                out.append(acc)
        return CoqMatrix._raw(self.rows, other.cols, tuple(out), backend)

    def __add__(self, other):
        if not isinstance(other, CoqMatrix):
            return NotImplemented
        self._require_same_shape(other)
        backend = same_backend(self, other)
        return CoqMatrix._raw(
            self.rows, self.cols,
            tuple(p + q for p, q in zip(self._entries, other._entries)),
            backend,
        )

    def __sub__(self, other):
        if not isinstance(other, CoqMatrix):
            return NotImplemented
        self._require_same_shape(other)
        backend = same_backend(self, other)
        return CoqMatrix._raw(
            self.rows, self.cols,
            tuple(p - q for p, q in zip(self._entries, other._entries)),
            backend,
        )

    def __neg__(self):
        return CoqMatrix._raw(
            self.rows, self.cols, tuple(-e for e in self._entries), self.backend
        )

    def scale(self, scalar):
        """Every entry multiplied by a central real scalar."""
        return CoqMatrix._raw(
            self.rows, self.cols,
            tuple(e * scalar for e in self._entries), self.backend,
        )

    def _require_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError(
                "shape mismatch: %dx%d vs %dx%d"
                % (self.rows, self.cols, other.rows, other.cols)
            )

    def __eq__(self, other):
        if not isinstance(other, CoqMatrix):
            return NotImplemented
        if self.rows != other.rows or self.cols != other.cols:
            return False
        return all(p == q for p, q in zip(self._entries, other._entries))

    __hash__ = None

    # -- involutions --------------------------------------------------------

    def transpose(self):
        rows = self.to_rows()
        return CoqMatrix._raw(
            self.cols, self.rows,
            tuple(rows[r][c] for c in range(self.cols) for r in range(self.rows)),
            self.backend,
        )

    def conjugate(self):
        """Entrywise conjugation."""
        return CoqMatrix._raw(
            self.rows, self.cols,
            tuple(e.conj() for e in self._entries), self.backend,
        )

    def hermitian_adjoint(self):
        """The conjugate transpose."""
        rows = self.to_rows()
        return CoqMatrix._raw(
            self.cols, self.rows,
            tuple(rows[r][c].conj() for c in range(self.cols) for r in range(self.rows)),
            self.backend,
        )

    def is_hermitian(self):
        """True iff square and equal to its conjugate transpose.

        Forces every diagonal entry to be real.
        """
        if not self.is_square:
            return False
        rows = self.to_rows()
        for r in range(self.rows):
            for c in range(r, self.cols):
                if rows[r][c] != rows[c][r].conj():
                    return False
        return True

    # -- row/column surgery ---------------------------------------------------

    def _as_entry_seq(self, v, length, what):
        if isinstance(v, CoqMatrix):
            if v.rows == 1:
                v = v.row(1)
            elif v.cols == 1:
                v = v.col(1)
            else:
                raise DimensionError("replacement %s must be a vector" % what)
        v = tuple(v)
        if len(v) != length:
            raise DimensionError(
                "replacement %s has length %d, expected %d" % (what, len(v), length)
            )
        for e in v:
            if e.backend is not self.backend and e.backend != self.backend:
                raise BackendMismatchError("replacement %s mixes backends" % what)
        return v

    def replace_row(self, t, v):
        """A copy with row ``t`` (1-based) overwritten by the vector ``v``."""
        self._check_row(t)
        v = self._as_entry_seq(v, self.cols, "row")
        base = (t - 1) * self.cols
        entries = self._entries[:base] + v + self._entries[base + self.cols:]
        return CoqMatrix._raw(self.rows, self.cols, entries, self.backend)

    def replace_col(self, t, v):
        """A copy with column ``t`` (1-based) overwritten by the vector ``v``."""
        self._check_col(t)
        v = self._as_entry_seq(v, self.rows, "column")
        entries = list(self._entries)
        for r in range(self.rows):
            entries[r * self.cols + (t - 1)] = v[r]
        return CoqMatrix._raw(self.rows, self.cols, tuple(entries), self.backend)

    def delete_row_col(self, i, j):
        """The minor matrix with row ``i`` and column ``j`` removed.

        Refuses to produce a 0x0 result: a 1x1 input is an error.
        """
        if not self.is_square:
            raise DimensionError("minors are defined for square matrices only")
        if self.rows == 1:
            raise DimensionError("cannot take a minor of a 1x1 matrix")
        self._check_row(i)
        self._check_col(j)
        rows = self.to_rows()
        entries = tuple(
            rows[r][c]
            for r in range(self.rows) if r != i - 1
            for c in range(self.cols) if c != j - 1
        )
        return CoqMatrix._raw(self.rows - 1, self.cols - 1, entries, self.backend)

    # -- conversions -------------------------------------------------------------

    def with_backend(self, backend):
        if backend == self.backend:
            return self
        return CoqMatrix._raw(
            self.rows, self.cols,
            tuple(e.with_backend(backend) for e in self._entries), backend,
        )

    def __str__(self):
        from .textio import format_matrix

        return format_matrix(self)

    def __repr__(self):
        return "CoqMatrix(%dx%d, backend=%r)" % (self.rows, self.cols, self.backend)


def from_rows(rows_of_entries):
    """Build a matrix from an iterable of rows of coquaternions."""
    return CoqMatrix(rows_of_entries)


def identity(n, backend=None):
    """The n x n identity matrix."""
    return CoqMatrix.identity(n, backend)
