"""Matrix structure, involutions, and row/column surgery."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coqlin import (
    BackendMismatchError,
    CoqMatrix,
    DimensionError,
    FLOAT,
    I,
    IndexRangeError,
    J,
    K,
    ONE,
    ZERO,
    coq,
    identity,
)
from conftest import HERM3, HERM3_INV

components = st.integers(min_value=-4, max_value=4)
coquaternions = st.builds(coq, components, components, components, components)


def square(n):
    return st.lists(
        st.lists(coquaternions, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(CoqMatrix)


class TestConstruction:
    def test_one_based_indexing(self):
        m = CoqMatrix([[ONE, I], [J, K]])
        assert m[1, 1] == ONE
        assert m[1, 2] == I
        assert m[2, 1] == J
        assert m.row(2) == (J, K)
        assert m.col(1) == (ONE, J)

    def test_empty_rejected(self):
        with pytest.raises(DimensionError):
            CoqMatrix([])
        with pytest.raises(DimensionError):
            CoqMatrix([[]])

    def test_ragged_rejected(self):
        with pytest.raises(DimensionError):
            CoqMatrix([[ONE, I], [J]])

    def test_mixed_backend_rejected(self):
        with pytest.raises(BackendMismatchError):
            CoqMatrix([[ONE, coq(1, backend=FLOAT)]])

    def test_index_range(self):
        m = identity(2)
        with pytest.raises(IndexRangeError):
            m[0, 1]
        with pytest.raises(IndexRangeError):
            m[1, 3]


class TestMatmul:
    def test_identity_neutral(self):
        assert identity(3) @ HERM3 == HERM3
        assert HERM3 @ identity(3) == HERM3

    def test_unit_product(self):
        assert CoqMatrix([[J]]) @ CoqMatrix([[K]]) == CoqMatrix([[-I]])

    def test_paper_inverse_pair(self):
        assert HERM3 @ HERM3_INV == identity(3)
        assert HERM3_INV @ HERM3 == identity(3)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            identity(2) @ identity(3)

    @settings(deadline=None, max_examples=30)
    @given(square(2), square(2))
    def test_adjoint_antihomomorphism(self, a, b):
        assert (a @ b).hermitian_adjoint() == (
            b.hermitian_adjoint() @ a.hermitian_adjoint()
        )


class TestAdjoints:
    def test_single_entry(self):
        assert CoqMatrix([[I]]).hermitian_adjoint() == CoqMatrix([[-I]])

    def test_hermitian_fixed_point(self):
        assert HERM3.hermitian_adjoint() == HERM3

    def test_involution(self):
        m = CoqMatrix([[ONE, I + J], [K, coq(2, 1, 1, 1)]])
        assert m.hermitian_adjoint().hermitian_adjoint() == m

    def test_transpose_and_conjugate_compose(self):
        m = CoqMatrix([[ONE, I], [J, K], [ONE + I, ZERO]])
        assert m.transpose().conjugate() == m.hermitian_adjoint()
        assert m.transpose().rows == 2 and m.transpose().cols == 3


class TestIsHermitian:
    def test_paper_matrix(self):
        assert HERM3.is_hermitian()

    def test_complex_style(self):
        assert CoqMatrix([[ONE, I], [-I, coq(2)]]).is_hermitian()

    def test_symmetric_zero_divisors_not_hermitian(self):
        q = ONE + K
        assert not CoqMatrix([[ZERO, q], [q, ZERO]]).is_hermitian()

    def test_non_square(self):
        assert not CoqMatrix([[ONE, I]]).is_hermitian()

    def test_hermitian_diagonal_is_real(self):
        for t in range(1, 4):
            d = HERM3[t, t]
            assert d.x == 0 and d.y == 0 and d.z == 0


class TestSurgery:
    def test_replace_row(self):
        m = identity(2).replace_row(1, (ZERO, ZERO))
        assert m == CoqMatrix([[ZERO, ZERO], [ZERO, ONE]])

    def test_identity_replacement(self):
        for j in range(1, 4):
            assert HERM3.replace_col(j, HERM3.col(j)) == HERM3

    def test_replace_col_builds_cramer_matrix(self):
        # Column 1 of the worked example's first Cramer numerator.
        m = HERM3.replace_col(1, (I, J, K))
        assert m.col(1) == (I, J, K)
        assert m.col(2) == HERM3.col(2)
        assert m.col(3) == HERM3.col(3)

    def test_no_mutation(self):
        before = HERM3.to_rows()
        HERM3.replace_row(1, (ZERO, ZERO, ZERO))
        HERM3.replace_col(2, (ZERO, ZERO, ZERO))
        assert HERM3.to_rows() == before

    def test_replace_accepts_vector_matrices(self):
        col = CoqMatrix([[I], [J], [K]])
        assert HERM3.replace_col(1, col).col(1) == (I, J, K)
        row = CoqMatrix([[I, J, K]])
        assert HERM3.replace_row(1, row).row(1) == (I, J, K)

    def test_replace_length_checked(self):
        with pytest.raises(DimensionError):
            HERM3.replace_row(1, (ZERO, ZERO))

    def test_delete_row_col(self):
        assert identity(3).delete_row_col(1, 1) == identity(2)
        sub = HERM3.delete_row_col(1, 1)
        assert sub == CoqMatrix([[ZERO, ONE + J], [ONE - J, ZERO]])

    def test_delete_degenerate(self):
        with pytest.raises(DimensionError):
            CoqMatrix([[ONE]]).delete_row_col(1, 1)

    def test_delete_requires_square(self):
        with pytest.raises(DimensionError):
            CoqMatrix([[ONE, I]]).delete_row_col(1, 1)


class TestArithmetic:
    def test_add_sub(self):
        m = CoqMatrix([[I, J], [K, ONE]])
        assert m + m == m.scale(2)
        assert m - m == identity(2).scale(0)

    def test_scale(self):
        m = identity(2).scale(3)
        assert m[1, 1] == coq(3)
        assert m[1, 2] == ZERO

    def test_with_backend(self):
        f = HERM3.with_backend(FLOAT)
        assert f.backend is FLOAT
        assert f.with_backend(HERM3.backend) == HERM3
