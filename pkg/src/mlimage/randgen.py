"""Seeded random instances: targets, conjugators and polynomials."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

from .canon import BidiagonalTarget
from .decompose import LIE4_TEXTS, PRODUCT_KEYS, hall_generators, product_text
from .freepoly import PROP1_TEXT, MultilinearPoly, poly
from .matrix import Matrix, inverse

ZERO = Fraction(0)


def _ints(rng: random.Random, k: int, lo: int, hi: int) -> list[Fraction]:
    return [Fraction(rng.randint(lo, hi)) for _ in range(k)]


def _trace_zero_diag(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> list[Fraction]:
    while True:
        head = _ints(rng, n - 1, lo, hi)
        last = -sum(head, ZERO)
        if lo <= last <= hi:
            return head + [last]


def random_matrix(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> Matrix:
    return Matrix([_ints(rng, n, lo, hi) for _ in range(n)])


def random_trace_zero(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> Matrix:
    rows = [_ints(rng, n, lo, hi) for _ in range(n)]
    for i, d in enumerate(_trace_zero_diag(rng, n, lo, hi)):
        rows[i][i] = d
    return Matrix(rows)


def random_zero_diagonal(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> Matrix:
    return Matrix([[ZERO if i == j else Fraction(rng.randint(lo, hi)) for j in range(n)] for i in range(n)])


def random_bidiagonal(rng: random.Random, n: int, orientation: str = "upper", lo: int = -9, hi: int = 9) -> BidiagonalTarget:
    return BidiagonalTarget(orientation, tuple(_trace_zero_diag(rng, n, lo, hi)), tuple(_ints(rng, n - 1, lo, hi)))


def random_unimodular(rng: random.Random, n: int, lo: int = -2, hi: int = 2) -> Matrix:
    """Integer matrix with determinant 1: unit lower times unit upper triangular."""
    lower = Matrix.from_function(n, lambda i, j: Fraction(1) if i == j else Fraction(rng.randint(lo, hi)) if i > j else ZERO)
    upper = Matrix.from_function(n, lambda i, j: Fraction(1) if i == j else Fraction(rng.randint(lo, hi)) if i < j else ZERO)
    return lower @ upper


def random_jordan(rng: random.Random, n: int, lo: int = -4, hi: int = 4) -> Matrix:
    """Trace-zero Jordan matrix with random integer eigenvalues and block sizes."""
    sizes = []
    left = n
    while left:
        s = rng.randint(1, left)
        sizes.append(s)
        left -= s
    while True:
        eig = _ints(rng, len(sizes), lo, hi)
        total = sum(e * s for e, s in zip(eig, sizes))
        # fix the trace with the last block when its size divides the excess
        e_last = eig[-1] - total / sizes[-1]
        if e_last.denominator == 1 or rng.random() < 0.5:
            eig[-1] = e_last
            break
    rows = [[ZERO] * n for _ in range(n)]
    pos = 0
    for e, s in zip(eig, sizes):
        for k in range(s):
            rows[pos + k][pos + k] = e
            if k + 1 < s:
                rows[pos + k][pos + k + 1] = Fraction(1)
        pos += s
    return Matrix(rows)


def random_split_spectrum(rng: random.Random, n: int) -> Matrix:
    """Trace-zero matrix with rational spectrum: a Jordan matrix under a random unimodular similarity."""
    j = random_jordan(rng, n)
    p = random_unimodular(rng, n)
    return inverse(p) @ j @ p


def random_quadratic_spectrum(rng: random.Random, n: int) -> tuple[Matrix, int]:
    """Trace-zero matrix whose spectrum contains +-sqrt(m) for a non-square m."""
    m = rng.choice([2, 3, 5, 6, 7, -1, -2, -3])
    rest = _trace_zero_diag(rng, n - 2, -4, 4) if n > 3 else [ZERO]
    rows = [[ZERO] * n for _ in range(n)]
    rows[0][1] = Fraction(m)
    rows[1][0] = Fraction(1)
    for k, e in enumerate(rest):
        rows[2 + k][2 + k] = e
    p = random_unimodular(rng, n)
    return inverse(p) @ Matrix(rows) @ p, m


def random_multilinear(rng: random.Random, m: int = 4, lo: int = -5, hi: int = 5, coeff_sum_zero: bool = False) -> MultilinearPoly:
    words = list(permutations(range(1, m + 1)))
    coeffs = {w: Fraction(rng.randint(lo, hi)) for w in words}
    if coeff_sum_zero:
        coeffs[words[-1]] -= sum(coeffs.values(), ZERO)
    return MultilinearPoly(m, coeffs)


def random_proper(rng: random.Random, lie_part: bool = True, lo: int = -3, hi: int = 3) -> MultilinearPoly:
    """Random combination of the nine proper generators; z-part optionally zero."""
    gens = hall_generators(4)
    coeffs = _ints(rng, 9, lo, hi)
    if not lie_part:
        coeffs[:3] = [ZERO] * 3
    if not any(coeffs):
        coeffs[3 + rng.randrange(6)] = Fraction(1)
    total = MultilinearPoly(4)
    for c, g in zip(coeffs, gens):
        if c:
            total = total + g * c
    return total


def named_polynomials() -> dict[str, MultilinearPoly]:
    named = {"central_like": poly(PROP1_TEXT)}
    for key in PRODUCT_KEYS:
        named[f"c{key}"] = poly(product_text(key))
    for i, text in enumerate(LIE4_TEXTS, start=1):
        named[f"z{i}"] = poly(text)
    return named
