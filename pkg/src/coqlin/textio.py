"""Text grammar for coquaternions and the matrix file format.

Coquaternion grammar: a sum of signed terms, each a coefficient, a unit
(``i``/``j``/``k``), or both, e.g. ``1-2i+3j-0.5k``; bare units carry an
implicit coefficient 1.  On the exact backend a coefficient may also be
a rational ``p/q`` (``3/4j``).  Whitespace is insignificant.

Canonical formatting orders terms w, i, j, k, omits zero terms (a fully
zero value prints ``0``), writes no leading ``+``, and leaves the
coefficient 1 implicit on units.  ``parse(format(q)) == q`` exactly and
formatting already-canonical text reproduces it byte for byte.

Matrix files are UTF-8, one matrix per file: one row per line, entries
separated by ``;``.  Blank lines are skipped and ``#`` starts a comment
running to the end of the line.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .coquaternion import EXACT, Coquaternion
from .errors import ParseError
from .matrix import CoqMatrix

_TERM_RE = re.compile(
    r"""
    (?P<sign>[+-])? \s*
    (?P<coef>\d+/\d+ | (?:\d+\.\d+|\.\d+|\d+)(?:[eE][+-]?\d+)?)? \s*
    (?P<unit>[ijk])?
    """,
    re.VERBOSE,
)

_COMPONENT_OF = {None: 0, "i": 1, "j": 2, "k": 3}


def parse_coquaternion(text, backend=EXACT):
    """Parse coquaternion text; raises :class:`ParseError` on bad input.

    Whitespace may surround signs, coefficients, and units but cannot
    split a number.  Error positions refer to ``text``.
    """
    pos = 0
    end = len(text)
    comps = [backend.coerce(0)] * 4
    seen_term = False
    while True:
        while pos < end and text[pos].isspace():
            pos += 1
        if pos >= end:
            break
        m = _TERM_RE.match(text, pos)
        if m is None or (m["coef"] is None and m["unit"] is None):
            raise ParseError(
                "bad term at offset %d of %r" % (pos, text),
                position=pos, token=text[pos:pos + 8],
            )
        if seen_term and m["sign"] is None:
            raise ParseError(
                "missing sign before term at offset %d of %r" % (pos, text),
                position=pos, token=text[pos:pos + 8],
            )
        coef_text = m["coef"]
        if coef_text is None:
            value = backend.coerce(1)
        elif "/" in coef_text:
            if not backend.is_exact:
                raise ParseError(
                    "rational coefficient %r needs the exact backend" % coef_text,
                    position=pos, token=coef_text,
                )
            value = Fraction(coef_text)
        else:
            value = backend.coerce(coef_text)
        if m["sign"] == "-":
            value = -value
        comps[_COMPONENT_OF[m["unit"]]] += value
        pos = m.end()
        seen_term = True
    if not seen_term:
        raise ParseError("empty coquaternion text", position=0, token="")
    return Coquaternion(*comps, backend=backend)


def _format_scalar(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return "%d/%d" % (value.numerator, value.denominator)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def format_coquaternion(q):
    """Canonical text for a coquaternion (see module docstring)."""
    parts = []
    for value, unit in zip(q.components(), ("", "i", "j", "k")):
        if value == 0:
            continue
        mag = -value if value < 0 else value
        body = unit if (unit and mag == 1) else _format_scalar(mag) + unit
        if not parts:
            parts.append(("-" if value < 0 else "") + body)
        else:
            parts.append(("-" if value < 0 else "+") + body)
    return "".join(parts) if parts else "0"


def format_complex(c):
    """Canonical ``a+bi`` text for a complex scalar."""
    return format_coquaternion(Coquaternion._raw(c.re, c.im, 0, 0, EXACT))


def parse_matrix(text, backend=EXACT):
    """Parse matrix text (see module docstring for the format)."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if "#" in line:
            line = line[:line.index("#")]
        if not line.strip():
            continue
        row = []
        for field in line.split(";"):
            try:
                row.append(parse_coquaternion(field, backend))
            except ParseError as exc:
                raise ParseError(
                    "line %d: %s" % (lineno, exc),
                    position=exc.position, token=exc.token,
                ) from None
        rows.append(row)
    if not rows:
        raise ParseError("no matrix rows found", position=0, token="")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ParseError("rows have differing entry counts: %s" % sorted(widths))
    return CoqMatrix(rows)


def format_matrix(a):
    """Canonical matrix text: one row per line, entries joined by '; '."""
    lines = []
    for row in a.to_rows():
        lines.append("; ".join(format_coquaternion(e) for e in row))
    return "\n".join(lines)


def read_matrix(path, backend=EXACT):
    """Read one matrix from a UTF-8 text file."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_matrix(text, backend)


def write_matrix(path, a):
    """Write one matrix to a UTF-8 text file in canonical form."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(a) + "\n")
