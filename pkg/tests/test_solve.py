"""Hermitian inverses and the Cramer solvers."""

from fractions import Fraction

import pytest

from coqlin import (
    CoqMatrix,
    DimensionError,
    FLOAT,
    GenConfig,
    I,
    J,
    K,
    NotHermitianError,
    ONE,
    SingularError,
    ZERO,
    a_row_numerators,
    b_col_numerators,
    coq,
    det_hermitian,
    identity,
    inv_hermitian,
    left_cofactor,
    qdet,
    random_hermitian,
    right_cofactor,
    solve_ax,
    solve_left,
    solve_right,
    solve_two_sided,
    solve_xb,
)
from conftest import HERM2, HERM3, HERM3_INV, RHS32

Y3 = CoqMatrix([[I], [J], [K]])


class TestInverse:
    def test_left_kind_matches_worked_example(self):
        assert inv_hermitian(HERM3, "left") == HERM3_INV

    def test_right_equals_left(self):
        assert inv_hermitian(HERM3, "right") == inv_hermitian(HERM3, "left")

    def test_identity(self):
        assert inv_hermitian(identity(3), "right") == identity(3)
        assert inv_hermitian(identity(3), "left") == identity(3)

    def test_two_sided_identity_products(self):
        inv = inv_hermitian(HERM3, "left")
        assert HERM3 @ inv == identity(3)
        assert inv @ HERM3 == identity(3)

    def test_singular_raises(self):
        with pytest.raises(SingularError) as exc:
            inv_hermitian(CoqMatrix([[ONE, ONE], [ONE, ONE]]))
        assert exc.value.operand == "A"

    def test_not_hermitian_raises(self):
        with pytest.raises(NotHermitianError):
            inv_hermitian(CoqMatrix([[ZERO, ONE + K], [ONE + K, ZERO]]))

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            inv_hermitian(HERM3, "up")

    def test_adjugate_identities(self):
        for t in range(8):
            n = 2 + t % 3
            h = random_hermitian(GenConfig(seed=1000 + t, n=n))
            d = det_hermitian(h)
            if d == 0:
                continue
            adj_r = CoqMatrix([
                [right_cofactor(h, j, i) for j in range(1, n + 1)]
                for i in range(1, n + 1)
            ])
            adj_l = CoqMatrix([
                [left_cofactor(h, j, i) for j in range(1, n + 1)]
                for i in range(1, n + 1)
            ])
            scaled_identity = identity(n).scale(d)
            assert h @ adj_r == scaled_identity
            assert adj_l @ h == scaled_identity


class TestSolveRight:
    def test_worked_example(self):
        out = solve_right(HERM3, Y3)
        expected = CoqMatrix([
            [coq("-3/4", "-1/4", "3/4", "1/4")],
            [coq("1/4", "3/4", "1/4", "-1/4")],
            [coq(0, 0, "1/2", "1/2")],
        ])
        assert out.solution == expected
        assert out.det_a == 4
        assert out.residual_max == 0
        assert HERM3 @ out.solution == Y3

    def test_identity_matrix(self):
        out = solve_right(identity(3), Y3)
        assert out.solution == Y3

    def test_scalar_case(self):
        out = solve_right(CoqMatrix([[coq(2)]]), CoqMatrix([[I]]))
        assert out.solution == CoqMatrix([[coq(0, "1/2")]])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            solve_right(HERM3, CoqMatrix([[I], [J]]))

    def test_singular(self):
        with pytest.raises(SingularError):
            solve_right(CoqMatrix([[ONE, ONE], [ONE, ONE]]), CoqMatrix([[I], [J]]))


class TestSolveLeft:
    def test_identity_matrix(self):
        y = CoqMatrix([[I, J, K]])
        assert solve_left(identity(3), y).solution == y

    def test_scalar_case(self):
        out = solve_left(CoqMatrix([[coq(2)]]), CoqMatrix([[J]]))
        assert out.solution == CoqMatrix([[coq(0, 0, "1/2")]])

    def test_residual_certified_on_worked_matrix(self):
        y = CoqMatrix([[I, J, K]])
        out = solve_left(HERM3, y)
        assert out.residual_max == 0
        assert out.solution @ HERM3 == y

    def test_row_shape_required(self):
        with pytest.raises(DimensionError):
            solve_left(HERM3, Y3)


class TestSolveTwoSided:
    def test_worked_example_intermediates(self):
        assert det_hermitian(HERM2) == 2
        cb1 = b_col_numerators(HERM2, RHS32, 1)
        assert cb1 == CoqMatrix([[I + K], [-I], [J + K]])
        cb2 = b_col_numerators(HERM2, RHS32, 2)
        assert cb2 == CoqMatrix([[ONE + J], [J], [-ONE - I]])

    def test_worked_example_solution(self):
        out_row = solve_two_sided(HERM3, HERM2, RHS32, route="row_first")
        out_col = solve_two_sided(HERM3, HERM2, RHS32, route="col_first")
        assert out_row.solution == out_col.solution
        assert out_row.det_a == 4 and out_row.det_b == 2
        assert out_row.residual_max == 0
        assert HERM3 @ out_row.solution @ HERM2 == RHS32
        e = Fraction(1, 8)
        expected = CoqMatrix([
            [coq(0, -4, 2, -2) * e, coq(-4, 0, 2, 2) * e],
            [coq(0, 2, 2, 0) * e, coq(2, 0, 4, -2) * e],
            [coq(1, 1, 1, 3) * e, coq(1, 1, 1, 3) * e],
        ])
        assert out_row.solution == expected

    def test_identity_both_sides(self):
        out = solve_two_sided(identity(3), identity(2), RHS32)
        assert out.solution == RHS32

    def test_scalar_case(self):
        out = solve_two_sided(
            CoqMatrix([[coq(2)]]), CoqMatrix([[coq(3)]]), CoqMatrix([[I]])
        )
        assert out.solution == CoqMatrix([[coq(0, "1/6")]])

    def test_reports_offending_operand(self):
        with pytest.raises(NotHermitianError) as exc:
            solve_two_sided(
                HERM3, CoqMatrix([[ZERO, ONE + K], [ONE + K, ZERO]]), RHS32
            )
        assert exc.value.operand == "B"
        with pytest.raises(SingularError) as exc:
            solve_two_sided(HERM3, CoqMatrix([[ONE, ONE], [ONE, ONE]]), RHS32)
        assert exc.value.operand == "B"

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            solve_two_sided(HERM3, HERM2, RHS32.transpose())

    def test_bad_route(self):
        with pytest.raises(ValueError):
            solve_two_sided(HERM3, HERM2, RHS32, route="diagonal")

    def test_row_numerators_shape(self):
        row = a_row_numerators(HERM3, RHS32, 1)
        assert row.rows == 1 and row.cols == 2


class TestOneSidedMatrixEquations:
    def test_ax_specialises_to_column_solve(self):
        out = solve_ax(HERM3, Y3)
        assert out.solution == solve_right(HERM3, Y3).solution
        assert out.residual_max == 0

    def test_ax_identity(self):
        assert solve_ax(identity(3), RHS32).solution == RHS32

    def test_xb_residual_certified(self):
        c = CoqMatrix([[ONE, ZERO]])
        out = solve_xb(HERM2, c)
        assert out.residual_max == 0
        assert out.solution @ HERM2 == c
        assert out.det_b == 2

    def test_consistency_with_two_sided(self):
        assert (
            solve_two_sided(HERM3, identity(2), RHS32).solution
            == solve_ax(HERM3, RHS32).solution
        )
        assert (
            solve_two_sided(identity(3), HERM2, RHS32).solution
            == solve_xb(HERM2, RHS32).solution
        )

    def test_ax_dimension_check(self):
        with pytest.raises(DimensionError):
            solve_ax(HERM2, RHS32)


class TestSingularityDetection:
    def test_exact_equivalence_with_qdet(self):
        for t in range(25):
            h = random_hermitian(GenConfig(seed=1100 + t, n=3))
            d = det_hermitian(h)
            assert (d == 0) == qdet(h).is_zero()
            if d == 0:
                with pytest.raises(SingularError):
                    inv_hermitian(h)

    def test_float_guard_flags_exactly_singular(self):
        m = CoqMatrix([[ONE, ONE], [ONE, ONE]]).with_backend(FLOAT)
        with pytest.raises(SingularError):
            inv_hermitian(m)

    def test_float_solve_matches_exact(self):
        out = solve_right(HERM3.with_backend(FLOAT), Y3.with_backend(FLOAT))
        exact = solve_right(HERM3, Y3).solution.with_backend(FLOAT)
        assert out.solution == exact
        assert out.residual_max <= 1e-12
