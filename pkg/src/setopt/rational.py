"""Exact rational vectors and matrices.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator. Vectors are tuples of fractions and
matrices are tuples of row tuples, so every value is immutable and hashable.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import InputError

Rational = Fraction
Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]

RationalLike = Union[int, str, Fraction]

_RATIONAL_RE = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")


def parse_rational(value: RationalLike) -> Fraction:
    """Parse a JSON-style rational: an integer or a string ``"p/q"``.

    Floats are refused because they would silently introduce rounding.
    """
    if isinstance(value, bool):
        raise InputError(f"boolean {value!r} is not a rational number")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise InputError(f"cannot parse {value!r} as a rational number")
        try:
            return Fraction(value.replace(" ", ""))
        except ZeroDivisionError:
            raise InputError(f"zero denominator in {value!r}") from None
    raise InputError(f"expected an integer or a 'p/q' string, got {type(value).__name__}")


def format_rational(value: Fraction) -> Union[int, str]:
    """Inverse of :func:`parse_rational`: ints stay ints, others become ``"p/q"``."""
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def vec(values: Iterable[RationalLike]) -> Vector:
    return tuple(parse_rational(v) for v in values)


def mat(rows: Iterable[Iterable[RationalLike]]) -> Matrix:
    out = tuple(vec(r) for r in rows)
    if out and len({len(r) for r in out}) != 1:
        raise InputError("ragged matrix rows")
    return out


def zeros(n: int) -> Vector:
    return (Fraction(0),) * n


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise InputError(f"dimension mismatch in dot product: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(t: Fraction, v: Vector) -> Vector:
    return tuple(t * a for a in v)


def neg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


def matvec(m: Matrix, v: Vector) -> Vector:
    return tuple(dot(row, v) for row in m)


def transpose(m: Matrix, ncols: Optional[int] = None) -> Matrix:
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*m))


def ncols(m: Matrix, default: int = 0) -> int:
    return len(m[0]) if m else default


def rank(m: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(r) for r in m]
    if not rows:
        return 0
    r = 0
    width = len(rows[0])
    for c in range(width):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c] / p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def null_space(m: Sequence[Sequence[Fraction]], width: int) -> list[Vector]:
    """Basis of {z : m z = 0} via reduced row echelon form."""
    rows = [list(r) for r in m]
    pivots = []
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [a / p for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        z = [Fraction(0)] * width
        z[f] = Fraction(1)
        for i, c in enumerate(pivots):
            z[c] = -rows[i][f]
        basis.append(tuple(z))
    return basis


def solve_linear_system(m: Matrix, rhs: Sequence[Fraction]) -> Optional[Vector]:
    """Return one exact solution of ``m x = rhs``, or None when inconsistent.

    Works for square and rectangular systems; free variables are set to 0.
    """
    if len(m) != len(rhs):
        raise InputError(f"system has {len(m)} rows but rhs has {len(rhs)} entries")
    width = ncols(m)
    rows = [list(row) + [Fraction(b)] for row, b in zip(m, rhs)]
    pivots = []
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [a / p for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    # a row 0 = nonzero below the pivots means inconsistency
    if any(row[-1] for row in rows[r:]):
        return None
    x = [Fraction(0)] * width
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    return tuple(x)


def canonical_direction(v: Sequence[Fraction]) -> Vector:
    """Scale ``v`` by a positive rational so its entries are coprime integers.

    Two vectors are positive multiples of each other exactly when their
    canonical forms coincide. Orientation is preserved.
    """
    if not any(v):
        raise InputError("canonical_direction of the zero vector")
    den = math.lcm(*(Fraction(a).denominator for a in v))
    ints = [int(Fraction(a) * den) for a in v]
    g = math.gcd(*ints)
    return tuple(Fraction(a // g) for a in ints)
