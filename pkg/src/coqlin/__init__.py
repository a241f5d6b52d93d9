"""coqlin: linear algebra over the split quaternions (coquaternions).

Row and column noncommutative determinants, cofactors, Hermitian
determinants and inverses, Cramer-rule solvers for right, left, and
two-sided linear systems, and an independent complex-adjoint
q-determinant oracle.  Exact rational and float64 scalar backends.
"""

from .adjoint import ComplexMatrix, ComplexScalar, complex_adjoint, qdet, split_complex_parts
from .coquaternion import (
    DEFAULT_FLOAT_TOL,
    EXACT,
    FLOAT,
    Backend,
    Coquaternion,
    I,
    J,
    K,
    ONE,
    ZERO,
    coq,
    float_backend,
    one,
    zero,
)
from .errors import (
    BackendMismatchError,
    CoqlinError,
    DimensionError,
    IndexRangeError,
    NotHermitianError,
    ParseError,
    SingularError,
    SizeCapError,
    ZeroDivisorOrZeroError,
)
from .matrix import CoqMatrix, from_rows, identity
from .oracle import GenConfig, random_coquaternion, random_hermitian, random_matrix, splitmix64
from .rcdet import (
    DEFAULT_MAX_N,
    CycleForm,
    cdet,
    cycle_decompose,
    det_hermitian,
    left_cofactor,
    rdet,
    right_cofactor,
)
from .solve import (
    SolveOutcome,
    a_row_numerators,
    b_col_numerators,
    inv_hermitian,
    solve_ax,
    solve_left,
    solve_right,
    solve_two_sided,
    solve_xb,
)
from .textio import (
    format_coquaternion,
    format_matrix,
    parse_coquaternion,
    parse_matrix,
    read_matrix,
    write_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "Backend", "EXACT", "FLOAT", "float_backend", "DEFAULT_FLOAT_TOL",
    "Coquaternion", "coq", "zero", "one", "ZERO", "ONE", "I", "J", "K",
    "CoqMatrix", "from_rows", "identity",
    "CycleForm", "cycle_decompose", "rdet", "cdet",
    "right_cofactor", "left_cofactor", "det_hermitian", "DEFAULT_MAX_N",
    "ComplexScalar", "ComplexMatrix", "split_complex_parts", "complex_adjoint", "qdet",
    "SolveOutcome", "inv_hermitian", "solve_right", "solve_left",
    "solve_ax", "solve_xb", "solve_two_sided",
    "a_row_numerators", "b_col_numerators",
    "GenConfig", "splitmix64", "random_coquaternion", "random_matrix", "random_hermitian",
    "parse_coquaternion", "format_coquaternion", "parse_matrix", "format_matrix",
    "read_matrix", "write_matrix",
    "CoqlinError", "BackendMismatchError", "ZeroDivisorOrZeroError",
    "DimensionError", "IndexRangeError", "SizeCapError",
    "NotHermitianError", "SingularError", "ParseError",
]
