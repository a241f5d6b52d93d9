"""Hermitian inverses and Cramer-rule solvers.

For a Hermitian matrix with nonzero determinant the adjugate built from
right cofactors is a right inverse and the one built from left
cofactors a left inverse; both coincide (inverses over an associative
ring are unique), so either kind may be requested.  The solvers divide
anchored column/row determinants of modified matrices by the (real,
central) Hermitian determinant:

* ``A x = y``        ->  ``x[j] = cdet_j(A with column j := y) / det A``
* ``x A = y``        ->  ``x[i] = rdet_i(A with row i := y) / det A``
* ``A X = C``        ->  ``x[i,j] = cdet_i(A with column i := C column j) / det A``
* ``X B = C``        ->  ``x[i,j] = rdet_j(B with row j := C row i) / det B``
* ``A X B = C``      ->  two equivalent routes; both are implemented and
  the test suite cross-checks that they agree entrywise.

Every solver returns a :class:`SolveOutcome` carrying the solution, the
determinant(s) used, and a residual certificate (the largest component
magnitude of ``lhs - rhs``), which is identically zero on the exact
backend.  Each solution entry is an independent Cramer computation;
they are assembled in a fixed deterministic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coquaternion import Coquaternion
from .errors import DimensionError, NotHermitianError, SingularError
from .matrix import CoqMatrix
from .rcdet import DEFAULT_MAX_N, cdet, det_hermitian, left_cofactor, rdet, right_cofactor

RIGHT_KIND = "right"
LEFT_KIND = "left"

ROW_FIRST = "row_first"
COL_FIRST = "col_first"


@dataclass(frozen=True)
class SolveOutcome:
    """A solution together with the certificates used to produce it."""

    solution: CoqMatrix
    det_a: Optional[object] = None
    det_b: Optional[object] = None
    residual_max: object = 0


def _max_component_magnitude(a):
    return max(abs(c) for e in a._entries for c in e.components())


def _residual_max(lhs, rhs):
    diff = lhs - rhs
    return _max_component_magnitude(diff)


def _checked_det(a, name, max_n):
    """The Hermitian determinant of an operand, or the matching error."""
    try:
        d = det_hermitian(a, max_n)
    except NotHermitianError:
        raise NotHermitianError("%s is not Hermitian" % name, operand=name) from None
    backend = a.backend
    if backend.is_exact:
        singular = d == 0
    else:
        # Scale-aware guard: a determinant is an n-fold product of entries.
        scale = (1.0 + float(_max_component_magnitude(a))) ** a.rows
        singular = abs(d) <= backend.tol * scale
    if singular:
        raise SingularError("%s is singular (determinant is zero)" % name,
                            operand=name)
    return d


def inv_hermitian(a, kind=RIGHT_KIND, max_n=DEFAULT_MAX_N):
    """The inverse of a nonsingular Hermitian matrix via cofactor adjugates.

    ``kind`` picks the right- or left-cofactor representation; the two
    produce the same matrix.
    """
    if kind not in (RIGHT_KIND, LEFT_KIND):
        raise ValueError("kind must be 'right' or 'left', got %r" % (kind,))
    d = _checked_det(a, "A", max_n)
    n = a.rows
    cof = right_cofactor if kind == RIGHT_KIND else left_cofactor
    rows = []
    for i in range(1, n + 1):
        rows.append([cof(a, j, i, max_n) / d for j in range(1, n + 1)])
    return CoqMatrix(rows)


def solve_right(a, y, max_n=DEFAULT_MAX_N):
    """Solve ``A x = y`` for a column vector ``y`` (Hermitian ``A``)."""
    if y.cols != 1 or y.rows != a.rows:
        raise DimensionError(
            "right-hand side must be a %dx1 column, got %dx%d"
            % (a.rows, y.rows, y.cols)
        )
    d = _checked_det(a, "A", max_n)
    ycol = y.col(1)
    xs = [[cdet(a.replace_col(j, ycol), j, max_n) / d] for j in range(1, a.rows + 1)]
    x = CoqMatrix(xs)
    return SolveOutcome(solution=x, det_a=d, residual_max=_residual_max(a @ x, y))


def solve_left(a, y, max_n=DEFAULT_MAX_N):
    """Solve ``x A = y`` for a row vector ``y`` (Hermitian ``A``)."""
    if y.rows != 1 or y.cols != a.rows:
        raise DimensionError(
            "right-hand side must be a 1x%d row, got %dx%d"
            % (a.rows, y.rows, y.cols)
        )
    d = _checked_det(a, "A", max_n)
    yrow = y.row(1)
    xs = [rdet(a.replace_row(i, yrow), i, max_n) / d for i in range(1, a.rows + 1)]
    x = CoqMatrix([xs])
    return SolveOutcome(solution=x, det_a=d, residual_max=_residual_max(x @ a, y))


def solve_ax(a, c, max_n=DEFAULT_MAX_N):
    """Solve ``A X = C`` columnwise (Hermitian ``A``)."""
    if c.rows != a.rows:
        raise DimensionError(
            "C must have %d rows, got %dx%d" % (a.rows, c.rows, c.cols)
        )
    d = _checked_det(a, "A", max_n)
    cols = [c.col(j) for j in range(1, c.cols + 1)]
    rows = []
    for i in range(1, a.rows + 1):
        rows.append([cdet(a.replace_col(i, col), i, max_n) / d for col in cols])
    x = CoqMatrix(rows)
    return SolveOutcome(solution=x, det_a=d, residual_max=_residual_max(a @ x, c))


def solve_xb(b, c, max_n=DEFAULT_MAX_N):
    """Solve ``X B = C`` rowwise (Hermitian ``B``)."""
    if c.cols != b.rows:
        raise DimensionError(
            "C must have %d columns, got %dx%d" % (b.rows, c.rows, c.cols)
        )
    d = _checked_det(b, "B", max_n)
    rows = []
    for i in range(1, c.rows + 1):
        crow = c.row(i)
        rows.append(
            [rdet(b.replace_row(j, crow), j, max_n) / d for j in range(1, b.rows + 1)]
        )
    x = CoqMatrix(rows)
    return SolveOutcome(solution=x, det_b=d, residual_max=_residual_max(x @ b, c))


def a_row_numerators(a, c, i, max_n=DEFAULT_MAX_N):
    """Row ``i`` of the two-sided intermediate: the 1 x n vector whose
    ``l``-th entry is ``cdet_i(A with column i := C column l)``."""
    vals = [
        cdet(a.replace_col(i, c.col(l)), i, max_n) for l in range(1, c.cols + 1)
    ]
    return CoqMatrix([vals])


def b_col_numerators(b, c, j, max_n=DEFAULT_MAX_N):
    """Column ``j`` of the two-sided intermediate: the m x 1 vector whose
    ``k``-th entry is ``rdet_j(B with row j := C row k)``."""
    vals = [
        rdet(b.replace_row(j, c.row(k)), j, max_n) for k in range(1, c.rows + 1)
    ]
    return CoqMatrix([[v] for v in vals])


def solve_two_sided(a, b, c, route=ROW_FIRST, max_n=DEFAULT_MAX_N):
    """Solve ``A X B = C`` with Hermitian nonsingular ``A`` and ``B``.

    ``route='row_first'`` reduces through ``A`` first (the column
    determinants feed row determinants of modified ``B``);
    ``route='col_first'`` reduces through ``B`` first.  The two agree
    entrywise.
    """
    if route not in (ROW_FIRST, COL_FIRST):
        raise ValueError("route must be 'row_first' or 'col_first', got %r" % (route,))
    if c.rows != a.rows or c.cols != b.rows:
        raise DimensionError(
            "C must be %dx%d, got %dx%d" % (a.rows, b.rows, c.rows, c.cols)
        )
    da = _checked_det(a, "A", max_n)
    db = _checked_det(b, "B", max_n)
    den = da * db
    m, n = a.rows, b.rows
    rows = []
    if route == ROW_FIRST:
        for i in range(1, m + 1):
            ca = a_row_numerators(a, c, i, max_n).row(1)
            rows.append(
                [rdet(b.replace_row(j, ca), j, max_n) / den for j in range(1, n + 1)]
            )
    else:
        cols = [b_col_numerators(b, c, j, max_n).col(1) for j in range(1, n + 1)]
        for i in range(1, m + 1):
            rows.append(
                [cdet(a.replace_col(i, cols[j - 1]), i, max_n) / den
                 for j in range(1, n + 1)]
            )
    x = CoqMatrix(rows)
    return SolveOutcome(
        solution=x, det_a=da, det_b=db,
        residual_max=_residual_max(a @ x @ b, c),
    )
