"""Dense exact matrices over Q or Q(sqrt(m)).

Indices in the public constructors :func:`unit` follow the 1-based e_{i,j}
convention; element access ``X[i, j]`` is 0-based like any Python container.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, SingularMatrix
from .field import common_radicand, format_scalar, to_field

ZERO = Fraction(0)
ONE = Fraction(1)


class Matrix:
    """Immutable square matrix with exact entries."""

    __slots__ = ("rows", "n")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(to_field(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix must be square")
        self.rows = rows
        self.n = n

    @classmethod
    def _raw(cls, rows):
        # trusted constructor: entries already canonical
        obj = object.__new__(cls)
        obj.rows = rows
        obj.n = len(rows)
        return obj

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, n: int) -> Matrix:
        return cls._raw(tuple((ZERO,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls.diag([ONE] * n)

    @classmethod
    def diag(cls, values: Sequence) -> Matrix:
        values = [to_field(v) for v in values]
        n = len(values)
        return cls._raw(
            tuple(tuple(values[i] if i == j else ZERO for j in range(n)) for i in range(n))
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> Matrix:
        n = len(columns)
        return cls([[columns[j][i] for j in range(n)] for i in range(n)])

    @classmethod
    def from_function(cls, n: int, fn) -> Matrix:
        return cls([[fn(i, j) for j in range(n)] for i in range(n)])

    # -- basic protocol -----------------------------------------------
    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({self.to_lists()!r})"

    def __str__(self):
        cells = [[format_scalar(x) for x in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)

    def _check(self, other: Matrix):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.n != self.n:
            raise DimensionMismatch(f"dimension {self.n} vs {other.n}")

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check(other)
        return Matrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __neg__(self) -> Matrix:
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, c) -> Matrix:
        c = to_field(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self.rows))

    def __mul__(self, c) -> Matrix:
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __truediv__(self, c) -> Matrix:
        return self.scale(1 / to_field(c))

    def __matmul__(self, other: Matrix) -> Matrix:
        self._check(other)
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = ZERO
                for a, b in zip(r, col):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return Matrix._raw(tuple(out))

    def __pow__(self, k: int) -> Matrix:
        if k < 0:
            return inverse(self) ** (-k)
        result = Matrix.identity(self.n)
        for _ in range(k):
            result = result @ self
        return result

    def apply(self, v: Sequence) -> list:
        return [sum((a * b for a, b in zip(r, v) if a and b), ZERO) for r in self.rows]

    # -- queries --------------------------------------------------------
    def transpose(self) -> Matrix:
        return Matrix._raw(tuple(zip(*self.rows)))

    def diagonal(self) -> list:
        return [self.rows[i][i] for i in range(self.n)]

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def is_diagonal(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.n) for j in range(self.n) if i != j)

    @property
    def radicand(self) -> int | None:
        return common_radicand(x for r in self.rows for x in r)

    def to_lists(self) -> list[list[str]]:
        return [[format_scalar(x) for x in r] for r in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.to_lists())

    @classmethod
    def from_json(cls, text_or_data) -> Matrix:
        data = json.loads(text_or_data) if isinstance(text_or_data, str) else text_or_data
        return cls([[to_field(x if isinstance(x, str) else str(x)) for x in row] for row in data])


# -- free functions --------------------------------------------------------

def unit(n: int, i: int, j: int) -> Matrix:
    """Standard matrix unit e_{i,j} (1-based)."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"e_({i},{j}) out of range for n={n}")
    return Matrix._raw(
        tuple(
            tuple(ONE if (r == i - 1 and c == j - 1) else ZERO for c in range(n))
            for r in range(n)
        )
    )


def commutator(x: Matrix, y: Matrix) -> Matrix:
    return x @ y - y @ x


def trace(x: Matrix):
    return sum(x.diagonal(), ZERO)


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of a rectangular matrix (first-nonzero pivoting)."""
    a = [list(r) for r in rows]
    if not a:
        return a, []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank(rows) -> int:
    if isinstance(rows, Matrix):
        rows = rows.rows
    return len(rref(rows)[1])


def null_space(rows: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    """Basis of {v : rows v = 0}; one vector per free column, in index order."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][free]
        basis.append(v)
    return basis


def kernel_basis(x: Matrix) -> list[list]:
    return null_space(x.rows, x.n)


def solve_linear(rows: Sequence[Sequence], rhs: Sequence):
    """One solution of rows @ v = rhs (free variables set to 0), or None if inconsistent."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    v = [ZERO] * ncols
    for r, pc in enumerate(pivots):
        v[pc] = red[r][ncols]
    return v


def inverse(x: Matrix) -> Matrix:
    n = x.n
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(x.rows)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return Matrix._raw(tuple(tuple(r[n:]) for r in red))


def conjugate(p: Matrix, x: Matrix, p_inv: Matrix | None = None) -> Matrix:
    """P X P^-1."""
    if p_inv is None:
        p_inv = inverse(p)
    return p @ x @ p_inv


def is_independent(vectors: Sequence[Sequence]) -> bool:
    return rank(vectors) == len(vectors)


class Polynomial1V:
    """Univariate polynomial with exact coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [to_field(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, Polynomial1V):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial1V({[format_scalar(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            cs = format_scalar(c)
            if mono and c == 1:
                cs = ""
            elif mono and c == -1:
                cs = "-"
            elif mono and not isinstance(c, Fraction):
                cs = f"({cs})"
            terms.append(cs + ("*" if cs not in ("", "-") and mono else "") + mono)
        return " + ".join(terms).replace("+ -", "- ")

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Polynomial1V) -> Polynomial1V:
        a, b = self.coeffs, other.coeffs
        k = max(len(a), len(b))
        a = a + (ZERO,) * (k - len(a))
        b = b + (ZERO,) * (k - len(b))
        return Polynomial1V(x + y for x, y in zip(a, b))

    def __neg__(self):
        return Polynomial1V(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial1V) -> Polynomial1V:
        return self + (-other)

    def __mul__(self, other) -> Polynomial1V:
        if not isinstance(other, Polynomial1V):
            return Polynomial1V(c * to_field(other) for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial1V()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial1V(out)

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial1V):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quo = [ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            q = rem[k + dq] / lead
            quo[k] = q
            if q:
                for i, c in enumerate(other.coeffs):
                    rem[k + i] = rem[k + i] - q * c
        return Polynomial1V(quo), Polynomial1V(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Polynomial1V:
        if self.is_zero():
            return self
        return self * (1 / self.coeffs[-1])

    def derivative(self) -> Polynomial1V:
        return Polynomial1V(k * c for k, c in enumerate(self.coeffs) if k)

    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)


def poly_gcd(a: Polynomial1V, b: Polynomial1V) -> Polynomial1V:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def char_poly(x: Matrix) -> Polynomial1V:
    """det(tI - X) via Faddeev-LeVerrier (characteristic 0)."""
    n = x.n
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    ident = Matrix.identity(n)
    m = Matrix.zeros(n)
    for k in range(1, n + 1):
        m = x @ m + ident.scale(coeffs[n - k + 1])
        coeffs[n - k] = -trace(x @ m) / k
    return Polynomial1V(coeffs)
