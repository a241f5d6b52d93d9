"""Complex adjoint matrices and the q-determinant.

Writing a coquaternion ``q = (w + x*i) + (y + z*i)*j`` splits any
coquaternion matrix as ``A = A1 + A2*j`` with complex ``A1``, ``A2``.
The complex adjoint of an n x n matrix is the 2n x 2n block matrix

    [[ A1,        A2       ],
     [ conj(A2),  conj(A1) ]]

and the q-determinant of ``A`` is the ordinary complex determinant of
that block matrix.  The q-determinant is multiplicative and vanishes
exactly when ``A`` is not invertible, which makes it an invertibility
oracle wholly independent of the permutation-enumeration determinants:
the exact path here is fraction-free elimination, the float path a
partial-pivot factorization, and neither shares code with the
row/column determinant sweep.

No functional relation between the *value* of the q-determinant and the
Hermitian determinant is assumed anywhere; only nonzero-ness is ever
cross-checked.
"""

from __future__ import annotations

from fractions import Fraction

from .coquaternion import EXACT, Backend
from .errors import BackendMismatchError, DimensionError, IndexRangeError, SizeCapError

#: Cap on the coquaternion matrix order; generous, the cost is polynomial.
DEFAULT_MAX_N = 64


class ComplexScalar:
    """An immutable complex number over either backend's scalar type."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexScalar is immutable")

    def __add__(self, other):
        return ComplexScalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return ComplexScalar(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ComplexScalar(-self.re, -self.im)

    def __mul__(self, other):
        a, b, c, d = self.re, self.im, other.re, other.im
        return ComplexScalar(a * c - b * d, a * d + b * c)

    def __truediv__(self, other):
        a, b, c, d = self.re, self.im, other.re, other.im
        den = c * c + d * d
        re_num = a * c + b * d
        im_num = b * c - a * d
        if isinstance(den, float) or isinstance(re_num, float):
            return ComplexScalar(re_num / den, im_num / den)
        return ComplexScalar(Fraction(re_num) / den, Fraction(im_num) / den)

    def conj(self):
        return ComplexScalar(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        if isinstance(other, (int, float, Fraction)):
            other = ComplexScalar(other, 0)
        if not isinstance(other, ComplexScalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    __hash__ = None

    def __repr__(self):
        return "ComplexScalar(%r, %r)" % (self.re, self.im)


class ComplexMatrix:
    """An immutable, row-major complex matrix tagged with a backend."""

    __slots__ = ("rows", "cols", "_entries", "backend")

    def __init__(self, rows_of_entries, backend=EXACT):
        grid = [tuple(row) for row in rows_of_entries]
        if not grid or not grid[0]:
            raise DimensionError("matrix must have at least one row and one column")
        m, n = len(grid), len(grid[0])
        for row in grid:
            if len(row) != n:
                raise DimensionError("ragged rows: expected %d columns" % n)
        coerce = backend.coerce
        entries = tuple(
            ComplexScalar(coerce(e.re), coerce(e.im)) for row in grid for e in row
        )
        object.__setattr__(self, "rows", m)
        object.__setattr__(self, "cols", n)
        object.__setattr__(self, "_entries", entries)
        object.__setattr__(self, "backend", backend)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexMatrix is immutable")

    @classmethod
    def _raw(cls, m, n, entries, backend):
        self = object.__new__(cls)
        object.__setattr__(self, "rows", m)
        object.__setattr__(self, "cols", n)
        object.__setattr__(self, "_entries", entries)
        object.__setattr__(self, "backend", backend)
        return self

    @classmethod
    def identity(cls, n, backend=EXACT):
        o = ComplexScalar(backend.coerce(1), backend.coerce(0))
        z = ComplexScalar(backend.coerce(0), backend.coerce(0))
        return cls._raw(
            n, n, tuple(o if r == c else z for r in range(n) for c in range(n)),
            backend,
        )

    def __getitem__(self, ij):
        i, j = ij
        if not 1 <= i <= self.rows:
            raise IndexRangeError("row index %d outside 1..%d" % (i, self.rows))
        if not 1 <= j <= self.cols:
            raise IndexRangeError("column index %d outside 1..%d" % (j, self.cols))
        return self._entries[(i - 1) * self.cols + (j - 1)]

    def to_rows(self):
        n = self.cols
        return tuple(self._entries[r * n:(r + 1) * n] for r in range(self.rows))

    def __matmul__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(
                "cannot multiply %dx%d by %dx%d"
                % (self.rows, self.cols, other.rows, other.cols)
            )
        if self.backend != other.backend:
            raise BackendMismatchError("mixed backends in complex matmul")
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            for l in range(other.cols):
                acc = a[i][0] * b[0][l]
                for s in range(1, self.cols):
                    acc = acc + a[i][s] * b[s][l]
                out.append(acc)
        return ComplexMatrix._raw(self.rows, other.cols, tuple(out), self.backend)

    def __eq__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        if self.rows != other.rows or self.cols != other.cols:
            return False
        eq = self.backend.eq
        return all(
            eq(p.re, q.re) and eq(p.im, q.im)
            for p, q in zip(self._entries, other._entries)
        )

    __hash__ = None

    def __repr__(self):
        return "ComplexMatrix(%dx%d, backend=%r)" % (self.rows, self.cols, self.backend)


def split_complex_parts(a):
    """The pair ``(A1, A2)`` with ``A = A1 + A2*j`` entrywise.

    ``w + x*i + y*j + z*k`` maps to ``w + x*i`` in ``A1`` and
    ``y + z*i`` in ``A2`` (because ``k = i*j``).
    """
    backend = a.backend
    grid = a.to_rows()
    a1 = [[ComplexScalar(e.w, e.x) for e in row] for row in grid]
    a2 = [[ComplexScalar(e.y, e.z) for e in row] for row in grid]
    return (ComplexMatrix(a1, backend), ComplexMatrix(a2, backend))


def complex_adjoint(a):
    """The 2n x 2n complex adjoint block matrix of a square matrix."""
    if not a.is_square:
        raise DimensionError("complex adjoint needs a square matrix")
    a1, a2 = split_complex_parts(a)
    g1, g2 = a1.to_rows(), a2.to_rows()
    n = a.rows
    out = []
    for r in range(n):
        out.append(tuple(g1[r]) + tuple(g2[r]))
    for r in range(n):
        out.append(tuple(e.conj() for e in g2[r]) + tuple(e.conj() for e in g1[r]))
    return ComplexMatrix._raw(
        2 * n, 2 * n, tuple(e for row in out for e in row), a.backend
    )


def _det_exact(rows):
    """Fraction-free (Bareiss) elimination; every division is exact."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = ComplexScalar(Fraction(1), Fraction(0))
    for k in range(n - 1):
        if m[k][k].is_zero():
            for s in range(k + 1, n):
                if not m[s][k].is_zero():
                    m[k], m[s] = m[s], m[k]
                    sign = -sign
                    break
            else:
                return ComplexScalar(Fraction(0), Fraction(0))
        pivot = m[k][k]
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                m[r][c] = (m[r][c] * pivot - m[r][k] * m[k][c]) / prev
        prev = pivot
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def _det_float(rows):
    """Gaussian elimination with partial pivoting by largest modulus."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    det = ComplexScalar(1.0, 0.0)
    for k in range(n):
        p = max(range(k, n), key=lambda r: m[r][k].abs2())
        if m[p][k].abs2() == 0.0:
            return ComplexScalar(0.0, 0.0)
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        pivot = m[k][k]
        det = det * pivot
        for r in range(k + 1, n):
            f = m[r][k] / pivot
            for c in range(k + 1, n):
                m[r][c] = m[r][c] - f * m[k][c]
    return det if sign > 0 else -det


def qdet(a, max_n=DEFAULT_MAX_N):
    """The q-determinant: the complex determinant of the adjoint matrix.

    Zero is a legitimate value and certifies non-invertibility.
    """
    if not a.is_square:
        raise DimensionError("qdet needs a square matrix")
    if a.rows > max_n:
        raise SizeCapError("order %d exceeds the cap %d" % (a.rows, max_n))
    chi = complex_adjoint(a)
    rows = chi.to_rows()
    if a.backend.is_exact:
        return _det_exact(rows)
    return _det_float(rows)
