"""Coquaternion (split-quaternion) arithmetic over pluggable scalar backends.

A coquaternion is ``w + x*i + y*j + z*k`` where the basis units satisfy

    i*i = -1,   j*j = k*k = +1,
    i*j = -j*i = k,   j*k = -k*j = -i,   i*k = -k*i = -j.

This ring is associative and noncommutative, and unlike Hamilton's
quaternions it contains zero divisors: a nonzero value is invertible
exactly when its norm form ``w**2 + x**2 - y**2 - z**2`` is nonzero.

Two scalar backends are available.  The exact backend keeps components
as ``int``/``Fraction`` so every algebraic identity holds literally; the
float backend keeps ``float`` components and compares through a
scale-aware relative tolerance.  Values never mix backends; binary
operations on mixed values raise :class:`BackendMismatchError`.

All values are immutable and all operations are pure, so they may be
shared freely across threads.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import BackendMismatchError, ZeroDivisorOrZeroError

#: Default relative tolerance of the float backend.
DEFAULT_FLOAT_TOL = 1e-9


class Backend:
    """Scalar backend tag: exact rationals, or float64 with a tolerance."""

    __slots__ = ("name", "tol")

    def __init__(self, name, tol=DEFAULT_FLOAT_TOL):
        if name not in ("exact", "float"):
            raise ValueError("backend name must be 'exact' or 'float', got %r" % (name,))
        self.name = name
        self.tol = float(tol)

    @property
    def is_exact(self):
        return self.name == "exact"

    def coerce(self, value):
        """Coerce a raw number (or 'p/q' string) into this backend's scalar type."""
        if self.name == "exact":
            if isinstance(value, bool):
                raise TypeError("bool is not a scalar component")
            if isinstance(value, (int, Fraction)):
                return value
            if isinstance(value, str):
                f = Fraction(value)
                return int(f) if f.denominator == 1 else f
            raise TypeError(
                "exact backend takes int, Fraction or a rational string, not %s"
                % type(value).__name__
            )
        if isinstance(value, str):
            return float(Fraction(value))
        return float(value)

    def eq(self, a, b):
        """Scalar equality; relative-tolerance based on the float backend."""
        if self.name == "exact":
            return a == b
        return abs(a - b) <= self.tol * (1.0 + abs(a) + abs(b))

    def __eq__(self, other):
        return (
            isinstance(other, Backend)
            and self.name == other.name
            and self.tol == other.tol
        )

    def __hash__(self):
        return hash((self.name, self.tol))

    def __repr__(self):
        if self.name == "exact":
            return "Backend('exact')"
        return "Backend('float', tol=%r)" % (self.tol,)


EXACT = Backend("exact")
FLOAT = Backend("float")


def float_backend(tol=DEFAULT_FLOAT_TOL):
    """A float backend with a custom relative tolerance."""
    return Backend("float", tol)


def same_backend(p, q):
    """The common backend of two values; raises on a mismatch."""
    bp, bq = p.backend, q.backend
    if bp is not bq and bp != bq:
        raise BackendMismatchError("mixed scalar backends: %r vs %r" % (bp, bq))
    return bp


class Coquaternion:
    """An immutable coquaternion ``w + x*i + y*j + z*k``.

    ``*`` is the (noncommutative) ring product; plain numbers act as
    central scalars on either side.  ``/`` divides by a central scalar
    only -- use ``p * q.inverse()`` or ``q.inverse() * p`` for ring
    division, which is side-dependent.
    """

    __slots__ = ("w", "x", "y", "z", "backend")

    def __init__(self, w=0, x=0, y=0, z=0, backend=EXACT):
        coerce = backend.coerce
        object.__setattr__(self, "w", coerce(w))
        object.__setattr__(self, "x", coerce(x))
        object.__setattr__(self, "y", coerce(y))
        object.__setattr__(self, "z", coerce(z))
        object.__setattr__(self, "backend", backend)

    def __setattr__(self, name, value):
        raise AttributeError("Coquaternion is immutable")

    @classmethod
    def _raw(cls, w, x, y, z, backend):
        # Fast path for already-coerced components.
        self = object.__new__(cls)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "backend", backend)
        return self

    # -- structure ----------------------------------------------------

    def components(self):
        return (self.w, self.x, self.y, self.z)

    def with_backend(self, backend):
        """The same value re-expressed on another backend.

        float -> exact uses the exact binary value of each component.
        """
        if backend == self.backend:
            return self
        if backend.is_exact:
            return Coquaternion._raw(
                Fraction(self.w), Fraction(self.x), Fraction(self.y),
                Fraction(self.z), backend,
            )
        return Coquaternion._raw(
            float(self.w), float(self.x), float(self.y), float(self.z), backend
        )

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Coquaternion):
            return NotImplemented
        backend = same_backend(self, other)
        return Coquaternion._raw(
            self.w + other.w, self.x + other.x,
            self.y + other.y, self.z + other.z, backend,
        )

    def __sub__(self, other):
        if not isinstance(other, Coquaternion):
            return NotImplemented
        backend = same_backend(self, other)
        return Coquaternion._raw(
            self.w - other.w, self.x - other.x,
            self.y - other.y, self.z - other.z, backend,
        )

    def __neg__(self):
        return Coquaternion._raw(-self.w, -self.x, -self.y, -self.z, self.backend)

    def __mul__(self, other):
        if isinstance(other, Coquaternion):
            backend = same_backend(self, other)
            pw, px, py, pz = self.w, self.x, self.y, self.z
            qw, qx, qy, qz = other.w, other.x, other.y, other.z
            return Coquaternion._raw(
                pw * qw - px * qx + py * qy + pz * qz,
                pw * qx + px * qw - py * qz + pz * qy,
                pw * qy + py * qw - px * qz + pz * qx,
                pw * qz + pz * qw + px * qy - py * qx,
                backend,
            )
        if isinstance(other, (int, float, Fraction)):
            s = self.backend.coerce(other)
            return Coquaternion._raw(
                self.w * s, self.x * s, self.y * s, self.z * s, self.backend
            )
        return NotImplemented

    def __rmul__(self, other):
        # Real scalars are central, so left and right scaling coincide.
        if isinstance(other, (int, float, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, scalar):
        """Division by a central real scalar (componentwise)."""
        if not isinstance(scalar, (int, float, Fraction)):
            return NotImplemented
        if self.backend.is_exact:
            s = Fraction(scalar) if not isinstance(scalar, Fraction) else scalar
        else:
            s = float(scalar)
        return Coquaternion._raw(
            self.w / s, self.x / s, self.y / s, self.z / s, self.backend
        )

    def __eq__(self, other):
        if isinstance(other, (int, float, Fraction)):
            other = Coquaternion(other, backend=self.backend)
        if not isinstance(other, Coquaternion):
            return NotImplemented
        backend = same_backend(self, other)
        eq = backend.eq
        return (
            eq(self.w, other.w) and eq(self.x, other.x)
            and eq(self.y, other.y) and eq(self.z, other.z)
        )

    __hash__ = None

    # -- involutions and scalar invariants ------------------------------

    def conj(self):
        """The conjugate ``w - x*i - y*j - z*k``."""
        return Coquaternion._raw(self.w, -self.x, -self.y, -self.z, self.backend)

    def trace(self):
        """The trace ``2*w`` (a central real scalar)."""
        return 2 * self.w

    def norm_form(self):
        """The norm form ``q * conj(q) = w**2 + x**2 - y**2 - z**2``.

        Indefinite: it can be negative or zero.
        """
        return self.w * self.w + self.x * self.x - self.y * self.y - self.z * self.z

    def norm(self):
        """Convenience ``sqrt(abs(norm_form))`` as a float."""
        return math.sqrt(abs(float(self.norm_form())))

    # -- predicates ------------------------------------------------------

    def is_zero(self):
        eq = self.backend.eq
        return eq(self.w, 0) and eq(self.x, 0) and eq(self.y, 0) and eq(self.z, 0)

    def _norm_form_vanishes(self):
        n = self.norm_form()
        if self.backend.is_exact:
            return n == 0
        # Scale-aware: compare against the squared Euclidean magnitude.
        scale = (
            self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
        )
        return abs(n) <= self.backend.tol * (1.0 + scale)

    def is_zero_divisor(self):
        """True iff nonzero with vanishing norm form (zero itself excluded)."""
        return not self.is_zero() and self._norm_form_vanishes()

    def inverse(self):
        """The multiplicative inverse ``conj(q) / norm_form(q)``."""
        if self._norm_form_vanishes():
            reason = "zero" if self.is_zero() else "zero-divisor"
            raise ZeroDivisorOrZeroError(
                "norm form vanishes, %s is not invertible (%s)" % (self, reason),
                reason,
            )
        return self.conj() / self.norm_form()

    # -- display ----------------------------------------------------------

    def __str__(self):
        from .textio import format_coquaternion

        return format_coquaternion(self)

    def __repr__(self):
        return "Coquaternion(%r, %r, %r, %r%s)" % (
            self.w, self.x, self.y, self.z,
            "" if self.backend is EXACT else ", backend=%r" % (self.backend,),
        )


def coq(w=0, x=0, y=0, z=0, backend=EXACT):
    """Shorthand constructor: ``coq(1, 0, -2)`` is ``1 - 2j``."""
    return Coquaternion(w, x, y, z, backend)


def zero(backend=EXACT):
    return Coquaternion(0, backend=backend)


def one(backend=EXACT):
    return Coquaternion(1, backend=backend)


ZERO = zero()
ONE = one()
I = coq(0, 1)  # noqa: E741 -- the basis unit really is called i
J = coq(0, 0, 1)
K = coq(0, 0, 0, 1)
