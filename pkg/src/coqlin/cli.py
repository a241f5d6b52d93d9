"""File-driven command line for determinants, inverses, and solvers.

Verbs take 1-3 matrix files (see ``textio`` for the format) and print
one value or one matrix in canonical form on stdout.  Indices given on
the command line are 1-based, matching the library.  Exit codes:

    0  success
    1  singular or non-Hermitian operand (the message names which)
    2  unreadable or malformed input
    3  dimension mismatch, bad index, or size-cap violation
"""

from __future__ import annotations

import argparse
import sys

from . import adjoint, rcdet, solve
from .coquaternion import EXACT, float_backend
from .errors import (
    BackendMismatchError,
    CoqlinError,
    DimensionError,
    IndexRangeError,
    NotHermitianError,
    ParseError,
    SingularError,
    SizeCapError,
)
from .matrix import CoqMatrix
from .oracle import default_seed
from .textio import format_complex, format_coquaternion, format_matrix, read_matrix

_ARITY = {
    "det": 1, "qdet": 1, "rdet": 1, "cdet": 1, "inv": 1,
    "solve-right": 2, "solve-left": 2, "solve-ax": 2, "solve-xb": 2,
    "solve-axb": 3,
}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="coqlin",
        description="Linear algebra over the split quaternions (coquaternions).",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("exact", "float"), default="exact",
                        help="scalar backend (default: exact)")
    common.add_argument("--max-n", type=int, default=rcdet.DEFAULT_MAX_N,
                        metavar="N", help="enumeration size cap (default: 9)")
    common.add_argument("--tol", type=float, default=1e-9,
                        help="relative tolerance, float mode (default: 1e-9)")
    common.add_argument("--verbose", action="store_true",
                        help="print determinant values on stderr")
    common.add_argument("--verify", action="store_true",
                        help="run the internal cross-checks and report residuals")
    common.add_argument("--seed", type=int, default=None,
                        help="reserved for the test harness (env: COQLIN_SEED)")

    def verb(name, help_text, files):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for f in files:
            p.add_argument(f, help="matrix file (%s)" % f)
        return p

    verb("det", "Hermitian determinant of a matrix", ["matrix"])
    verb("qdet", "q-determinant (complex adjoint determinant)", ["matrix"])
    p = verb("rdet", "row determinant anchored at --row", ["matrix"])
    p.add_argument("--row", type=int, required=True, metavar="I",
                   help="anchor row (1-based)")
    p = verb("cdet", "column determinant anchored at --col", ["matrix"])
    p.add_argument("--col", type=int, required=True, metavar="J",
                   help="anchor column (1-based)")
    verb("inv", "inverse of a Hermitian matrix", ["matrix"])
    verb("solve-right", "solve A x = y (y a column)", ["A", "y"])
    verb("solve-left", "solve x A = y (y a row)", ["A", "y"])
    verb("solve-ax", "solve A X = C", ["A", "C"])
    verb("solve-xb", "solve X B = C", ["B", "C"])
    verb("solve-axb", "solve A X B = C", ["A", "B", "C"])
    return parser


def _backend_for(args):
    if args.mode == "exact":
        return EXACT
    return float_backend(args.tol)


def _note(args, text):
    if args.verbose:
        print(text, file=sys.stderr)


def _report_residual(args, residual):
    if args.verify:
        print("residual=%s" % _scalar_text(residual), file=sys.stderr)


def _scalar_text(value):
    from fractions import Fraction

    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return "%d/%d" % (value.numerator, value.denominator)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _run(args):
    backend = _backend_for(args)
    arity = _ARITY[args.verb]
    if arity == 1:
        names = ["matrix"]
    elif arity == 2:
        names = _two_names(args.verb)
    else:
        names = ["A", "B", "C"]
    mats = [read_matrix(getattr(args, name), backend) for name in names]
    max_n = args.max_n

    if args.verb == "det":
        d = rcdet.det_hermitian(mats[0], max_n, verify=args.verify)
        print(_scalar_text(d))
    elif args.verb == "qdet":
        print(format_complex(adjoint.qdet(mats[0])))
    elif args.verb == "rdet":
        print(format_coquaternion(rcdet.rdet(mats[0], args.row, max_n)))
    elif args.verb == "cdet":
        print(format_coquaternion(rcdet.cdet(mats[0], args.col, max_n)))
    elif args.verb == "inv":
        x = solve.inv_hermitian(mats[0], max_n=max_n)
        a = mats[0]
        if args.verbose:
            _note(args, "detA=%s" % _scalar_text(rcdet.det_hermitian(a, max_n)))
        if args.verify:
            ident = CoqMatrix.identity(a.rows, a.backend)
            residual = max(
                solve._residual_max(a @ x, ident),
                solve._residual_max(x @ a, ident),
            )
            _report_residual(args, residual)
        print(format_matrix(x))
    else:
        outcome = _solve_for(args.verb, mats, max_n)
        if outcome.det_a is not None:
            _note(args, "detA=%s" % _scalar_text(outcome.det_a))
        if outcome.det_b is not None:
            _note(args, "detB=%s" % _scalar_text(outcome.det_b))
        _report_residual(args, outcome.residual_max)
        print(format_matrix(outcome.solution))
    return 0


def _two_names(verb):
    return {"solve-right": ["A", "y"], "solve-left": ["A", "y"],
            "solve-ax": ["A", "C"], "solve-xb": ["B", "C"]}[verb]


def _solve_for(verb, mats, max_n):
    if verb == "solve-right":
        return solve.solve_right(mats[0], mats[1], max_n)
    if verb == "solve-left":
        return solve.solve_left(mats[0], mats[1], max_n)
    if verb == "solve-ax":
        return solve.solve_ax(mats[0], mats[1], max_n)
    if verb == "solve-xb":
        return solve.solve_xb(mats[0], mats[1], max_n)
    return solve.solve_two_sided(mats[0], mats[1], mats[2], max_n=max_n)


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.seed is None:
        args.seed = default_seed()
    try:
        return _run(args)
    except (SingularError, NotHermitianError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: cannot read input: %s" % exc, file=sys.stderr)
        return 2
    except (DimensionError, IndexRangeError, SizeCapError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except (BackendMismatchError, CoqlinError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
