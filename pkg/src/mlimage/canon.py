"""Similarity normal forms with explicit conjugators.

Every result satisfies ``conjugate(P, D) == T`` exactly, i.e. T = P D P^-1.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import NonTraceZero, SplitFailure
from .field import adjoin_sqrt, quad, sort_key
from .matrix import (
    Matrix,
    Polynomial1V,
    char_poly,
    inverse,
    is_independent,
    kernel_basis,
    poly_gcd,
    trace,
)

ZERO = Fraction(0)


@dataclass(frozen=True)
class BidiagonalTarget:
    orientation: str  # "upper" or "lower"
    diag: tuple
    off: tuple

    def __post_init__(self):
        if self.orientation not in ("upper", "lower"):
            raise ValueError(f"bad orientation {self.orientation!r}")
        if len(self.off) != len(self.diag) - 1:
            raise ValueError("need n-1 off-diagonal entries")
        object.__setattr__(self, "diag", tuple(self.diag))
        object.__setattr__(self, "off", tuple(self.off))

    @property
    def n(self) -> int:
        return len(self.diag)

    def to_matrix(self) -> Matrix:
        n = self.n
        rows = [[ZERO] * n for _ in range(n)]
        for i, d in enumerate(self.diag):
            rows[i][i] = d
        for i, s in enumerate(self.off):
            if self.orientation == "upper":
                rows[i][i + 1] = s
            else:
                rows[i + 1][i] = s
        return Matrix(rows)

    @classmethod
    def from_matrix(cls, x: Matrix, orientation: str = "upper") -> BidiagonalTarget:
        n = x.n
        for i in range(n):
            for j in range(n):
                allowed = i == j or (j == i + 1 if orientation == "upper" else i == j + 1)
                if x[i, j] and not allowed:
                    raise ValueError(f"matrix is not {orientation} bidiagonal")
        if orientation == "upper":
            off = [x[i, i + 1] for i in range(n - 1)]
        else:
            off = [x[i + 1, i] for i in range(n - 1)]
        return cls(orientation, tuple(x.diagonal()), tuple(off))

    def scaled(self, c) -> BidiagonalTarget:
        return BidiagonalTarget(
            self.orientation, tuple(c * d for d in self.diag), tuple(c * s for s in self.off)
        )


@dataclass(frozen=True)
class Canonicalization:
    P: Matrix
    T: Matrix
    orientation: str | None = None
    P_inv: Matrix = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.P_inv is None:
            object.__setattr__(self, "P_inv", inverse(self.P))

    def then(self, other: Canonicalization) -> Canonicalization:
        """Compose: apply self, then other (other acts on self.T)."""
        return Canonicalization(
            other.P @ self.P, other.T, other.orientation, self.P_inv @ other.P_inv
        )

    def pull_back(self, x: Matrix) -> Matrix:
        """P^-1 X P: carries a matrix from the canonical side to the original one."""
        return self.P_inv @ x @ self.P

    def to_json(self) -> dict:
        out = {"P": self.P.to_lists(), "T": self.T.to_lists()}
        if self.orientation is not None:
            out["orientation"] = self.orientation
        return out


def _identity_canon(d: Matrix, orientation=None) -> Canonicalization:
    ident = Matrix.identity(d.n)
    return Canonicalization(ident, d, orientation, ident)


def _block_diag_one(q: Matrix) -> Matrix:
    rows = [[Fraction(1)] + [ZERO] * q.n]
    for r in q.rows:
        rows.append([ZERO] + list(r))
    return Matrix(rows)


def _complete_basis(vectors: list, n: int) -> list:
    basis = list(vectors)
    for k in range(n):
        if len(basis) == n:
            break
        e = [Fraction(int(i == k)) for i in range(n)]
        if is_independent(basis + [e]):
            basis.append(e)
    return basis


def _start_vector(d: Matrix):
    """A vector v with v, Dv linearly independent (D non-scalar)."""
    n = d.n
    if d.is_diagonal():
        diag = d.diagonal()
        for i in range(n):
            for j in range(i + 1, n):
                if diag[i] != diag[j]:
                    return [Fraction(int(k in (i, j))) for k in range(n)]
        return None
    for j in range(n):
        if any(d[i, j] for i in range(n) if i != j):
            return [Fraction(int(k == j)) for k in range(n)]
    return None


def zero_diagonalize(d: Matrix) -> Canonicalization:
    """Similar copy of a trace-zero matrix with an all-zero diagonal."""
    if trace(d) != 0:
        raise NonTraceZero("zero-diagonal form needs a trace-zero matrix")
    if not any(d.diagonal()):
        return _identity_canon(d)
    n = d.n
    v = _start_vector(d)
    # char 0: a trace-zero scalar matrix is zero, so v exists here
    assert v is not None
    q = Matrix.from_columns(_complete_basis([v, d.apply(v)], n))
    p = inverse(q)
    m = p @ d @ q
    tail = Matrix([r[1:] for r in m.rows[1:]])
    sub = zero_diagonalize(tail)
    lift = _block_diag_one(sub.P)
    big_p = lift @ p
    t = lift @ m @ _block_diag_one(sub.P_inv)
    return Canonicalization(big_p, t, None, q @ _block_diag_one(sub.P_inv))


# -- spectra ---------------------------------------------------------------------

def _divisors(k: int) -> list[int]:
    k = abs(k)
    small, large = [], []
    i = 1
    while i * i <= k:
        if k % i == 0:
            small.append(i)
            if i * i != k:
                large.append(k // i)
        i += 1
    return small + large[::-1]


def rational_roots(p: Polynomial1V) -> Counter:
    """Rational roots with multiplicity of a polynomial with rational coefficients."""
    roots: Counter = Counter()
    if p.is_zero():
        raise ValueError("zero polynomial has every root")
    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:
        roots[Fraction(0)] += 1
        coeffs.pop(0)
    p = Polynomial1V(coeffs)
    while p.degree >= 1:
        lcm = 1
        for c in p.coeffs:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in p.coeffs]
        found = None
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if p(cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots[found] += 1
        p = p // Polynomial1V([-found, 1])
    return roots


def _deflate(p: Polynomial1V, roots: Counter) -> Polynomial1V:
    for r, k in roots.items():
        for _ in range(k):
            p = p // Polynomial1V([-r, 1])
    return p


def spectrum(d: Matrix) -> Counter:
    """Eigenvalues with algebraic multiplicity, over Q or one quadratic extension."""
    cp = char_poly(d)
    if not cp.is_rational():
        raise SplitFailure(cp, "characteristic polynomial has irrational coefficients")
    roots = rational_roots(cp)
    rest = _deflate(cp, roots)
    if rest.degree <= 0:
        return roots
    squarefree = rest // poly_gcd(rest, rest.derivative())
    if squarefree.degree != 2:
        raise SplitFailure(rest)
    c0, c1, _ = squarefree.monic().coeffs
    disc = c1 * c1 - 4 * c0
    m, s = adjoin_sqrt(disc)
    pair = (quad(-c1 / 2, s / 2, m), quad(-c1 / 2, -s / 2, m))
    mult = rest.degree // 2
    for r in pair:
        roots[r] += mult
    return roots


def jordan_chains(d: Matrix, lam, mult: int) -> list[list]:
    """Jordan chains for eigenvalue lam, longest first; each chain is ordered
    from eigenvector upwards."""
    n = d.n
    nmat = d - Matrix.identity(n).scale(lam)
    kernels = [[]]
    power = Matrix.identity(n)
    while len(kernels[-1]) < mult:
        power = power @ nmat
        kernels.append(kernel_basis(power))
        if len(kernels) > n + 1:
            raise RuntimeError("kernel filtration did not stabilise")
    tops: list[tuple[list, int]] = []
    for k in range(len(kernels) - 1, 0, -1):
        span = list(kernels[k - 1])
        for top, length in tops:
            if length > k:
                v = top
                for _ in range(length - k):
                    v = nmat.apply(v)
                span.append(v)
        for v in kernels[k]:
            if is_independent(span + [v]):
                span.append(v)
                tops.append((v, k))
    chains = []
    for top, length in sorted(tops, key=lambda t: -t[1]):
        chain = [top]
        for _ in range(length - 1):
            chain.append(nmat.apply(chain[-1]))
        chains.append(chain[::-1])
    return chains


def jordanize(d: Matrix) -> Canonicalization:
    """Upper Jordan form; raises SplitFailure when the spectrum leaves Q(sqrt(m))."""
    spec = spectrum(d)
    columns = []
    for lam in sorted(spec, key=sort_key):
        for chain in jordan_chains(d, lam, spec[lam]):
            columns.extend(chain)
    q = Matrix.from_columns(columns)
    p = inverse(q)
    return Canonicalization(p, p @ d @ q, "upper", q)


def jordan_blocks(t: Matrix) -> list[tuple[int, int]]:
    """(start, size) of each block of a bidiagonal Jordan-shaped matrix."""
    blocks = []
    start = 0
    for i in range(t.n - 1):
        if not t[i, i + 1] and not t[i + 1, i]:
            blocks.append((start, i + 1 - start))
            start = i + 1
    blocks.append((start, t.n - start))
    return blocks


def to_bidiagonal(t: Matrix, orientation: str = "upper") -> tuple[Canonicalization, BidiagonalTarget]:
    if orientation == "upper":
        return _identity_canon(t, "upper"), BidiagonalTarget.from_matrix(t, "upper")
    n = t.n
    perm = [0] * n
    for start, size in jordan_blocks(t):
        for k in range(size):
            perm[start + k] = start + size - 1 - k
    p = Matrix.from_function(n, lambda i, j: Fraction(int(perm[i] == j)))
    lower = p @ t @ p
    canon = Canonicalization(p, lower, "lower", p)
    return canon, BidiagonalTarget.from_matrix(lower, "lower")


def is_jordan_form(t: Matrix) -> bool:
    n = t.n
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if j == i + 1:
                if t[i, j] not in (0, 1) or (t[i, j] == 1 and t[i, i] != t[j, j]):
                    return False
            elif t[i, j]:
                return False
    return True
