"""Deterministic random generators for the property suites.

The generator is splitmix64, written out in full so a failing case can
be replayed from its seed alone in any language:

    state <- (state + 0x9E3779B97F4A7C15) mod 2**64
    z <- state
    z <- ((z xor (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z <- ((z xor (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output <- z xor (z >> 31)

State is value-passed; there is no global generator.  Components are
drawn as exact integers, so every generated value lives on the exact
backend (convert with ``with_backend`` for float sweeps).  The same
config always yields the identical value.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .coquaternion import EXACT, Coquaternion
from .matrix import CoqMatrix

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

#: Environment variable consulted for the test-harness seed.
SEED_ENV_VAR = "COQLIN_SEED"


def splitmix64(state):
    """One generator step: ``(output, next_state)``."""
    state = (state + _GAMMA) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31), state


def default_seed():
    """The harness seed: ``$COQLIN_SEED`` if set, else 0."""
    return int(os.environ.get(SEED_ENV_VAR, "0"))


@dataclass(frozen=True)
class GenConfig:
    """Reproducible generation parameters.

    ``coefficient_range`` bounds every drawn integer component,
    inclusive on both ends.
    """

    seed: int
    n: int = 3
    coefficient_range: tuple = (-3, 3)


def _draw_int(state, lo, hi):
    value, state = splitmix64(state)
    return lo + value % (hi - lo + 1), state


def _draw_coquaternion(state, cfg):
    lo, hi = cfg.coefficient_range
    w, state = _draw_int(state, lo, hi)
    x, state = _draw_int(state, lo, hi)
    y, state = _draw_int(state, lo, hi)
    z, state = _draw_int(state, lo, hi)
    return Coquaternion(w, x, y, z, EXACT), state


def random_coquaternion(cfg):
    """A seeded coquaternion with integer components."""
    q, _ = _draw_coquaternion(cfg.seed & _MASK, cfg)
    return q


def random_matrix(cfg, m, n):
    """A seeded m x n matrix with integer-component entries."""
    state = cfg.seed & _MASK
    rows = []
    for _ in range(m):
        row = []
        for _ in range(n):
            q, state = _draw_coquaternion(state, cfg)
            row.append(q)
        rows.append(row)
    return CoqMatrix(rows)


def random_hermitian(cfg):
    """A seeded Hermitian matrix of order ``cfg.n``.

    The diagonal is drawn real, the upper triangle freely, and the lower
    triangle mirrors the conjugates, so the result is Hermitian by
    construction.
    """
    n = cfg.n
    state = cfg.seed & _MASK
    lo, hi = cfg.coefficient_range
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        d, state = _draw_int(state, lo, hi)
        rows[i][i] = Coquaternion(d, backend=EXACT)
        for j in range(i + 1, n):
            q, state = _draw_coquaternion(state, cfg)
            rows[i][j] = q
            rows[j][i] = q.conj()
    return CoqMatrix(rows)
