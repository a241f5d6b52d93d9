"""Row and column determinants, cofactors, and the Hermitian determinant.

Over a noncommutative ring the order of the factors inside each
determinant monomial matters.  The row determinant anchored at row ``i``
and the column determinant anchored at column ``j`` fix that order
through a cycle decomposition of each permutation:

* every cycle contributes the factor chain ``a[c, s(c)] * a[s(c), s(s(c))]
  * ... `` walked from the cycle's distinguished element ``c`` (the
  anchor for the cycle containing it, the minimal element for every
  other cycle);
* for ``rdet`` the anchored cycle's chain is the leftmost block and the
  remaining blocks follow ordered by increasing minimal element;
* for ``cdet`` the order is mirrored: blocks ordered by decreasing
  minimal element, the anchored block rightmost.

The monomial's sign is ``(-1)**(n - r)`` with ``r`` the number of
disjoint cycles, fixed points included, which equals the ordinary
permutation parity.

Determinants enumerate all ``n!`` permutations directly; this is the
ground-truth path and is deliberately kept free of recursion.  Cofactor
expansion is provided as an independent second route and the two are
cross-checked in the test suite.  The factorial cost is inherent, so an
order cap (default 9) guards against runaway inputs.  Summation order is
fixed by the lexicographic permutation stream, which keeps float-backend
results bit-reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .coquaternion import one, zero
from .errors import DimensionError, IndexRangeError, NotHermitianError, SizeCapError

#: Default cap on the matrix order accepted by the enumeration.
DEFAULT_MAX_N = 9

# Monomial tables are memoised up to this order (7! = 5040 entries);
# larger orders stream to keep memory bounded.
_CACHE_MAX_N = 7

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class CycleForm:
    """A permutation in anchored, ordered disjoint-cycle notation.

    ``mapping[t-1]`` is the image of ``t`` (values 1-based).  ``cycles``
    is the written notation: in left ordering the cycle containing the
    anchor comes first and starts with it, the others start with their
    minimal element and ascend by those minima; in right ordering every
    non-anchored cycle ends with its minimal element, minima descend
    left to right, and the anchored cycle comes last ending with the
    anchor.  In either form the successor of an element inside its
    cycle (cyclically) is its image under the permutation.  ``r`` counts
    all cycles, fixed points included; ``sign`` is ``(-1)**(n - r)``.
    """

    n: int
    mapping: tuple
    cycles: tuple
    r: int
    sign: int
    anchor: int
    ordering: str


def _disjoint_cycles(mapping):
    """Cycles of a 1-based mapping, each starting at its minimal element,
    listed by increasing minima."""
    n = len(mapping)
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        seen[start] = True
        cyc = [start]
        nxt = mapping[start - 1]
        while nxt != start:
            seen[nxt] = True
            cyc.append(nxt)
            nxt = mapping[nxt - 1]
        cycles.append(cyc)
    return cycles


def cycle_decompose(mapping, anchor, ordering=LEFT):
    """Decompose a one-line permutation into anchored ordered cycle form.

    ``mapping`` is a sequence whose ``t``-th entry (1-based ``t``) is the
    image of ``t``; it must be a bijection on ``1..n``.
    """
    mapping = tuple(mapping)
    n = len(mapping)
    if sorted(mapping) != list(range(1, n + 1)):
        raise ValueError("mapping is not a bijection on 1..%d: %r" % (n, mapping))
    if not 1 <= anchor <= n:
        raise IndexRangeError("anchor %d outside 1..%d" % (anchor, n))
    if ordering not in (LEFT, RIGHT):
        raise ValueError("ordering must be 'left' or 'right'")

    cycles = _disjoint_cycles(mapping)
    r = len(cycles)
    anchored = next(c for c in cycles if anchor in c)
    others = [c for c in cycles if c is not anchored]
    pos = anchored.index(anchor)
    anchored = anchored[pos:] + anchored[:pos]  # starts with the anchor

    if ordering == LEFT:
        written = [tuple(anchored)] + [tuple(c) for c in others]
    else:
        # Rotate one step so the distinguished element lands last.
        written = [tuple(c[1:] + c[:1]) for c in reversed(others)]
        written.append(tuple(anchored[1:] + anchored[:1]))

    return CycleForm(
        n=n, mapping=mapping, cycles=tuple(written), r=r,
        sign=-1 if (n - r) % 2 else 1, anchor=anchor, ordering=ordering,
    )


def _chain(cycle, ordering):
    """The (row, column) factor pairs contributed by one written cycle."""
    m = len(cycle)
    if ordering == LEFT:
        return [(cycle[t], cycle[(t + 1) % m]) for t in range(m)]
    return [(cycle[(t - 1) % m], cycle[t]) for t in range(m)]


def _build_monomial(perm, n, anchor, ordering):
    form = cycle_decompose(perm, anchor, ordering)
    pairs = []
    for cyc in form.cycles:
        pairs.extend(_chain(cyc, ordering))
    # 0-based for the evaluation loop.
    return form.sign, tuple((r - 1, c - 1) for r, c in pairs)


@lru_cache(maxsize=None)
def _monomial_table(n, anchor, ordering):
    return tuple(
        _build_monomial(perm, n, anchor, ordering)
        for perm in itertools.permutations(range(1, n + 1))
    )


def _signed_monomials(n, anchor, ordering):
    if n <= _CACHE_MAX_N:
        return _monomial_table(n, anchor, ordering)
    return (
        _build_monomial(perm, n, anchor, ordering)
        for perm in itertools.permutations(range(1, n + 1))
    )


def _check_det_args(a, index, max_n, what):
    if not a.is_square:
        raise DimensionError("%s needs a square matrix, got %dx%d"
                             % (what, a.rows, a.cols))
    if a.rows > max_n:
        raise SizeCapError(
            "order %d exceeds the cap %d (raise max_n to override)"
            % (a.rows, max_n)
        )
    if not 1 <= index <= a.rows:
        raise IndexRangeError("%s index %d outside 1..%d" % (what, index, a.rows))


def _det_by_enumeration(a, anchor, ordering):
    grid = a.to_rows()
    acc = zero(a.backend)
    for sign, pairs in _signed_monomials(a.rows, anchor, ordering):
        r, c = pairs[0]
        m = grid[r][c]
        for r, c in pairs[1:]:
            m = m * grid[r][c]
        acc = acc + m if sign > 0 else acc - m
    return acc


def rdet(a, i, max_n=DEFAULT_MAX_N):
    """The row determinant of ``a`` anchored at row ``i`` (1-based)."""
    _check_det_args(a, i, max_n, "rdet")
    return _det_by_enumeration(a, i, LEFT)


def cdet(a, j, max_n=DEFAULT_MAX_N):
    """The column determinant of ``a`` anchored at column ``j`` (1-based)."""
    _check_det_args(a, j, max_n, "cdet")
    return _det_by_enumeration(a, j, RIGHT)


def right_cofactor(a, i, j, max_n=DEFAULT_MAX_N):
    """The right ``(i, j)`` cofactor: ``rdet_i(a) == sum_j a[i,j] * R[i,j]``.

    For ``i == j`` this is the row determinant of the minor without row
    and column ``i``, anchored at the minor's first row (the smallest
    surviving original index).  For ``i != j`` column ``j`` is first
    overwritten with column ``i``, the minor is taken, and the anchor is
    the replaced column's position in the minor (``j`` when ``i > j``,
    else ``j - 1``), with an overall minus sign.  A 1x1 matrix has
    cofactor 1 by convention.
    """
    if not a.is_square:
        raise DimensionError("cofactors need a square matrix")
    n = a.rows
    if not 1 <= i <= n:
        raise IndexRangeError("row index %d outside 1..%d" % (i, n))
    if not 1 <= j <= n:
        raise IndexRangeError("column index %d outside 1..%d" % (j, n))
    if n == 1:
        return one(a.backend)
    if i == j:
        return rdet(a.delete_row_col(i, i), 1, max_n)
    sub = a.replace_col(j, a.col(i)).delete_row_col(i, i)
    k = j if i > j else j - 1
    return -rdet(sub, k, max_n)


def left_cofactor(a, i, j, max_n=DEFAULT_MAX_N):
    """The left ``(i, j)`` cofactor: ``cdet_j(a) == sum_i L[i,j] * a[i,j]``.

    Mirror of :func:`right_cofactor`: for ``i != j`` row ``i`` is
    overwritten with row ``j``, the minor drops row and column ``j``,
    and the anchor is the replaced row's position (``i`` when ``j > i``,
    else ``i - 1``), negated.
    """
    if not a.is_square:
        raise DimensionError("cofactors need a square matrix")
    n = a.rows
    if not 1 <= i <= n:
        raise IndexRangeError("row index %d outside 1..%d" % (i, n))
    if not 1 <= j <= n:
        raise IndexRangeError("column index %d outside 1..%d" % (j, n))
    if n == 1:
        return one(a.backend)
    if i == j:
        return cdet(a.delete_row_col(i, i), 1, max_n)
    sub = a.replace_row(i, a.row(j)).delete_row_col(j, j)
    k = i if j > i else i - 1
    return -cdet(sub, k, max_n)


def det_hermitian(a, max_n=DEFAULT_MAX_N, verify=False):
    """The determinant of a Hermitian matrix, as a real scalar.

    All row and column determinants of a Hermitian matrix coincide and
    are real; the common value is computed as ``rdet_1``.  With
    ``verify=True`` the agreement with ``cdet_1`` is checked as well.
    The vanishing of the imaginary components is always checked (exactly
    on the exact backend, within tolerance on the float one).
    """
    if not a.is_hermitian():
        raise NotHermitianError("matrix is not Hermitian")
    d = rdet(a, 1, max_n)
    if verify and cdet(a, 1, max_n) != d:
        raise ArithmeticError("rdet_1 and cdet_1 disagree on a Hermitian matrix")
    backend = a.backend
    if backend.is_exact:
        if d.x != 0 or d.y != 0 or d.z != 0:
            raise ArithmeticError("Hermitian determinant came out non-real: %r" % (d,))
        return d.w
    thr = backend.tol * (1.0 + abs(d.w))
    if max(abs(d.x), abs(d.y), abs(d.z)) > thr:
        raise ArithmeticError("Hermitian determinant came out non-real: %r" % (d,))
    return d.w
