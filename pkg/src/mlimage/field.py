"""Exact scalars: rationals and elements of a single quadratic field Q(sqrt(m)).

Rationals are plain :class:`fractions.Fraction` values.  Elements a + b*sqrt(m)
with b != 0 are :class:`QuadExt`; any arithmetic result whose irrational part
vanishes collapses back to a ``Fraction``, so every field element has exactly
one representation.
"""
from __future__ import annotations

import re
from functools import lru_cache
from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import ParseError, RadicandMismatch

_TRIAL_LIMIT = 100_000

__all__ = [
    "QuadExt",
    "FieldElement",
    "quad",
    "to_field",
    "radicand_of",
    "common_radicand",
    "inverse",
    "adjoin_sqrt",
    "sqrt_in_field",
    "is_rational_square",
    "squarefree_decompose",
    "sort_key",
    "format_scalar",
    "parse_scalar",
]


class QuadExt:
    """a + b*sqrt(m) with b != 0 and m square-free, m != 1."""

    __slots__ = ("a", "b", "m")

    def __init__(self, a, b, m: int):
        a, b = Fraction(a), Fraction(b)
        if b == 0:
            raise ValueError("QuadExt requires a nonzero irrational part; use quad()")
        if not _valid_radicand(m):
            raise ValueError(f"radicand must be square-free and not 0 or 1, got {m}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "m", int(m))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    def __repr__(self):
        return f"QuadExt({self.a!s}, {self.b!s}, {self.m})"

    def __str__(self):
        return format_scalar(self)

    def __hash__(self):
        return hash((self.a, self.b, self.m))

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.m) == (other.a, other.b, other.m)
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __bool__(self):
        return True

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.m != self.m:
                raise RadicandMismatch(
                    f"cannot combine sqrt({self.m}) and sqrt({other.m})"
                )
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return quad(self.a + c[0], self.b + c[1], self.m)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.m)

    def __pos__(self):
        return self

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return quad(self.a - c[0], self.b - c[1], self.m)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return quad(c[0] - self.a, c[1] - self.b, self.m)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        x, y = c
        return quad(self.a * x + self.m * self.b * y, self.a * y + self.b * x, self.m)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.m * self.b * self.b

    def conjugate(self) -> QuadExt:
        return QuadExt(self.a, -self.b, self.m)

    def inverse(self) -> QuadExt:
        # norm is nonzero: sqrt(m) is irrational and b != 0
        nm = self.norm()
        return QuadExt(self.a / nm, -self.b / nm, self.m)

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            self._coerce(other)
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return quad(self.a / other, self.b / other, self.m)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Fraction(1)
        base = self
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result


FieldElement = Union[Fraction, QuadExt]


@lru_cache(maxsize=256)
def _valid_radicand(m: int) -> bool:
    return m not in (0, 1) and squarefree_decompose(m)[1] == 1


def quad(a, b, m: int) -> FieldElement:
    """Canonical constructor: returns a Fraction when the sqrt part vanishes."""
    a, b = Fraction(a), Fraction(b)
    if b == 0:
        return a
    return QuadExt(a, b, m)


def to_field(x) -> FieldElement:
    if isinstance(x, QuadExt):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return Fraction(x)


def radicand_of(x) -> int | None:
    return x.m if isinstance(x, QuadExt) else None


def common_radicand(values) -> int | None:
    """The single radicand shared by ``values``; None if all are rational."""
    m = None
    for v in values:
        if isinstance(v, QuadExt):
            if m is None:
                m = v.m
            elif m != v.m:
                raise RadicandMismatch(f"mixed radicands {m} and {v.m}")
    return m


def inverse(x) -> FieldElement:
    if isinstance(x, QuadExt):
        return x.inverse()
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("zero has no inverse")
    return 1 / x


def squarefree_decompose(k: int) -> tuple[int, int]:
    """Write k = sign * r**2 * s with s square-free; return (sign * s, r)."""
    if k == 0:
        raise ValueError("zero has no square-free part")
    sign = -1 if k < 0 else 1
    k = abs(k)
    r = s = 1
    p = 2
    while p <= _TRIAL_LIMIT and p * p <= k:
        e = 0
        while k % p == 0:
            k //= p
            e += 1
        r *= p ** (e // 2)
        if e % 2:
            s *= p
        p += 1 if p == 2 else 2
    if k > 1:
        root = isqrt(k)
        if root * root == k:
            r *= root
        elif k < _TRIAL_LIMIT * _TRIAL_LIMIT:
            # every prime factor exceeds the trial limit, so k is prime
            s *= k
        else:
            from sympy import factorint

            for prime, e in factorint(k).items():
                r *= prime ** (e // 2)
                if e % 2:
                    s *= prime
    return sign * s, r


def adjoin_sqrt(d) -> tuple[int, Fraction]:
    """Return (m, s) with s**2 * m == d and m square-free.

    m == 1 means d is the square of the rational s.
    """
    d = Fraction(d)
    if d == 0:
        raise ValueError("adjoin_sqrt of zero")
    # sqrt(p/q) = sqrt(p*q)/q
    m, r = squarefree_decompose(d.numerator * d.denominator)
    return m, Fraction(r, d.denominator)


def is_rational_square(d) -> bool:
    d = Fraction(d)
    if d < 0:
        return False
    if d == 0:
        return True
    return adjoin_sqrt(d)[0] == 1


def _rational_sqrt(d: Fraction) -> Fraction | None:
    if d < 0:
        return None
    if d == 0:
        return Fraction(0)
    m, s = adjoin_sqrt(d)
    return s if m == 1 else None


def sqrt_in_field(x, m: int | None) -> FieldElement | None:
    """A square root of x inside Q (m is None) or Q(sqrt(m)); None if x is not a square there."""
    if isinstance(x, QuadExt):
        if m is not None and x.m != m:
            raise RadicandMismatch(f"element of Q(sqrt({x.m})) in Q(sqrt({m})) context")
        # (u + v sqrt(m))^2 = x  <=>  u^2 + m v^2 = a,  2uv = b
        n0 = _rational_sqrt(x.norm())
        if n0 is None:
            return None
        for cand in ((x.a + n0) / 2, (x.a - n0) / 2):
            u = _rational_sqrt(cand)
            if u:
                return quad(u, x.b / (2 * u), x.m)
        return None
    x = Fraction(x)
    root = _rational_sqrt(x)
    if root is not None:
        return root
    if m is None:
        return None
    # sqrt(x) = r sqrt(m) iff x / m is a rational square
    r = _rational_sqrt(x / m)
    if r is None:
        return None
    return QuadExt(0, r, m)


def sort_key(x) -> tuple:
    """Total order: rationals by value, then extension elements by (a, b)."""
    if isinstance(x, QuadExt):
        return (1, x.a, x.b)
    return (0, Fraction(x), Fraction(0))


def _fmt_q(q: Fraction) -> str:
    return str(q)


def format_scalar(x) -> str:
    if isinstance(x, QuadExt):
        sign = "+" if x.b > 0 else "-"
        return f"{_fmt_q(x.a)}{sign}{_fmt_q(abs(x.b))}*sqrt({x.m})"
    return _fmt_q(Fraction(x))


_RAT = r"-?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^\s*(?P<a>{_RAT})\s*(?:(?P<sign>[+-])\s*(?P<b>\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(?P<m>-?\d+)\s*\))?\s*$"
)


def parse_scalar(text: str) -> FieldElement:
    """Parse ``p``, ``p/q`` or ``p/q+r/s*sqrt(m)``."""
    match = _SCALAR_RE.match(text)
    if not match:
        raise ParseError(f"malformed scalar {text!r}")
    try:
        a = Fraction(match["a"])
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None
    if match["b"] is None:
        return a
    try:
        b = Fraction(match["b"])
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None
    if match["sign"] == "-":
        b = -b
    m = int(match["m"])
    if not _valid_radicand(m):
        raise ParseError(f"radicand {m} is not square-free")
    return quad(a, b, m)
