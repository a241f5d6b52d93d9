"""Shared fixtures: the worked-example matrices and independent oracles."""

from fractions import Fraction

import pytest

from coqlin import CoqMatrix, Coquaternion, coq

# The 3x3 Hermitian matrix whose entries are all zero divisors:
#   [[0, 1-k, 1-j], [1+k, 0, 1+j], [1+j, 1-j, 0]]
HERM3 = CoqMatrix([
    [coq(0), coq(1, 0, 0, -1), coq(1, 0, -1, 0)],
    [coq(1, 0, 0, 1), coq(0), coq(1, 0, 1, 0)],
    [coq(1, 0, 1, 0), coq(1, 0, -1, 0), coq(0)],
])

# Its inverse, (1/4) * [[0, 2-2j, 1-i+j-k], [2+2j, 0, 1-i-j+k],
#                       [1+i-j+k, 1+i+j-k, 0]].
q4 = Fraction(1, 4)
HERM3_INV = CoqMatrix([
    [coq(0) * q4, coq(2, 0, -2, 0) * q4, coq(1, -1, 1, -1) * q4],
    [coq(2, 0, 2, 0) * q4, coq(0) * q4, coq(1, -1, -1, 1) * q4],
    [coq(1, 1, -1, 1) * q4, coq(1, 1, 1, -1) * q4, coq(0) * q4],
])

# The 2x2 Hermitian matrix [[1, k], [-k, 1]] (determinant 2).
HERM2 = CoqMatrix([[coq(1), coq(0, 0, 0, 1)], [coq(0, 0, 0, -1), coq(1)]])

# The 3x2 right-hand side [[i, 1], [0, j], [k, -i]].
RHS32 = CoqMatrix([
    [coq(0, 1, 0, 0), coq(1)],
    [coq(0), coq(0, 0, 1, 0)],
    [coq(0, 0, 0, 1), coq(0, -1, 0, 0)],
])


@pytest.fixture
def herm3():
    return HERM3


@pytest.fixture
def herm3_inv():
    return HERM3_INV


@pytest.fixture
def herm2():
    return HERM2


@pytest.fixture
def rhs32():
    return RHS32


# Independent multiplication oracle: bilinear expansion over the stated
# basis table, with no shared code with Coquaternion.__mul__.
_BASIS_TABLE = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
    (1, 1): (-1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
    (1, 2): (1, 3), (2, 1): (-1, 3),
    (2, 3): (-1, 1), (3, 2): (1, 1),
    (1, 3): (-1, 2), (3, 1): (1, 2),
}


def table_mul(p, q):
    """Product computed term by term from the basis table."""
    out = [0, 0, 0, 0]
    pc, qc = p.components(), q.components()
    for a in range(4):
        if pc[a] == 0:
            continue
        for b in range(4):
            if qc[b] == 0:
                continue
            sign, unit = _BASIS_TABLE[(a, b)]
            out[unit] += sign * pc[a] * qc[b]
    return Coquaternion(*out, backend=p.backend)


def inversion_parity(mapping):
    """Permutation sign by inversion count (independent of cycle logic)."""
    inv = 0
    n = len(mapping)
    for s in range(n):
        for t in range(s + 1, n):
            if mapping[s] > mapping[t]:
                inv += 1
    return -1 if inv % 2 else 1
