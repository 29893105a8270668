"""Witness constructions: matrices X1..Xm with f(X1, ..., Xm) = D.

Throughout, ``A`` is the upper shift sum_i e_{i,i+1}.  For lower-bidiagonal B,
[A, B] is upper-bidiagonal with

    [A,B]_{ii}   = b_{i+1,i} - b_{i,i-1}
    [A,B]_{i,i+1} = b_{i+1,i+1} - b_{i,i}

which is what every solver below inverts.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import decompose as dec
from .canon import (
    BidiagonalTarget,
    Canonicalization,
    jordanize,
    to_bidiagonal,
    zero_diagonalize,
)
from .errors import (
    DimensionTooSmall,
    InternalInconsistency,
    LambdaMinusOne,
    NonTraceZero,
    NotSupported,
    RepeatedDiagonal,
    USelectionFailed,
    ZeroGamma,
    ZeroPolynomial,
    ZeroScale,
)
from .field import adjoin_sqrt, quad, sqrt_in_field
from .freepoly import MultilinearPoly, Poly, evaluate, expand
from .matrix import Matrix, inverse, trace

ZERO = Fraction(0)
ONE = Fraction(1)

# sign of the surviving term when the free slot of a left-normed bracket
# is X and every other slot is S
LIE4_SIGN = -1  # [[[X,S],S],S] = -ad_S^3(X)
LIE3_SIGN = 1  # [[X,S],S] = ad_S^2(X)

SELECT_U_POOL = tuple(v for v in range(-8, 9) if v)
SELECT_U_ATTEMPTS = 64


def _require_trace_zero(diag):
    if sum(diag, ZERO) != 0:
        raise NonTraceZero("target diagonal does not sum to zero")


def shift_matrix(n: int) -> Matrix:
    if n < 2:
        raise DimensionTooSmall("shift matrix needs n >= 2")
    return Matrix.from_function(n, lambda i, j: ONE if j == i + 1 else ZERO)


def _lower_bidiagonal(diag, sub) -> Matrix:
    return BidiagonalTarget("lower", tuple(diag), tuple(sub)).to_matrix()


def _prefix_sums(values) -> list:
    out, acc = [], ZERO
    for v in values:
        acc = acc + v
        out.append(acc)
    return out


def _as_target(t, orientation: str) -> BidiagonalTarget:
    if isinstance(t, Matrix):
        return BidiagonalTarget.from_matrix(t, orientation)
    if t.orientation != orientation:
        raise ValueError(f"expected a {orientation} bidiagonal target")
    return t


def lemma1_solve(t) -> Matrix:
    """Lower-bidiagonal B with [shift, B] equal to the upper-bidiagonal target."""
    t = _as_target(t, "upper")
    _require_trace_zero(t.diag)
    sub = _prefix_sums(t.diag[:-1])
    diag = [ZERO] + _prefix_sums(t.off)
    return _lower_bidiagonal(diag, sub)


def outer_bracket_solve(t) -> Matrix:
    """Trace-zero lower-bidiagonal D' with [shift, D'] = t."""
    b = lemma1_solve(t)
    n = b.n
    shift = trace(b) / n
    # a scalar shift leaves [shift, D'] unchanged
    return b - Matrix.identity(n).scale(shift)


def lower_shift_bracket(n: int) -> Matrix:
    """[A, C] for C = sum_{i>=3} (i-2) e_{i,i-2}."""
    sub = [ONE] * (n - 2) + [Fraction(-(n - 2))]
    return _lower_bidiagonal([ZERO] * n, sub)


def fixed_c(n: int) -> Matrix:
    return Matrix.from_function(n, lambda i, j: Fraction(i - 1) if i - j == 2 else ZERO)


def inner_product_solve(t) -> tuple[Matrix, Matrix]:
    """(B, C) with [[A,B],[A,C]] = t for a trace-zero lower-bidiagonal t."""
    t = _as_target(t, "lower")
    n = t.n
    if n < 3:
        raise DimensionTooSmall("inner product chain needs n >= 3")
    _require_trace_zero(t.diag)
    d, sub = t.diag, t.off
    # superdiagonal of [A,B]: forward recursion on the diagonal of t
    sup = [ZERO] * (n - 1)
    sup[0] = d[0]
    for i in range(1, n - 2):
        sup[i] = sup[i - 1] + d[i]
    sup[n - 2] = d[n - 1] / (n - 2)
    if -(n - 2) * sup[n - 2] - sup[n - 3] != d[n - 2]:
        raise InternalInconsistency("forward recursion inconsistent despite trace zero")
    # diagonal of [A,B]: telescoping the subdiagonal equations
    diag = [ZERO]
    for i in range(n - 2):
        diag.append(diag[-1] + sub[i])
    diag.append(diag[-1] - sub[n - 2] / (n - 2))
    mean = sum(diag, ZERO) / n
    diag = [x - mean for x in diag]
    u = BidiagonalTarget("upper", tuple(diag), tuple(sup))
    return lemma1_solve(u), fixed_c(n)


def lemma2a_construct(t) -> tuple[Matrix, Matrix, Matrix]:
    """(A, B, C) with [A,B][A,C] - [A,C][A,B] = t (t lower bidiagonal)."""
    b, c = inner_product_solve(t)
    return shift_matrix(b.n), b, c


def lemma3_construct(t) -> tuple[Matrix, Matrix, Matrix]:
    """(A, B, C) with [A,[[A,B],[A,C]]] = t (t upper bidiagonal)."""
    t = _as_target(t, "upper")
    if t.n < 3:
        raise DimensionTooSmall("needs n >= 3")
    inner = outer_bracket_solve(t)
    b, c = inner_product_solve(BidiagonalTarget.from_matrix(inner, "lower"))
    return shift_matrix(t.n), b, c


def prop1_witnesses(t, c) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """(A, A^2, B, C) evaluating c * (the central-like polynomial) to t."""
    if not c:
        raise ZeroScale("scale must be nonzero")
    t = _as_target(t, "upper")
    a, b, cc = lemma3_construct(t.scaled(1 / c))
    return a, a @ a, b, cc


# -- repaired product construction ---------------------------------------------

@dataclass(frozen=True)
class USelection:
    u: tuple
    radicand: int | None = None


def _u_valid(u, d, lam, off=None) -> bool:
    """off: superdiagonal of the target; only positions with s_i != 0 constrain u_i + lam u_{i+1}."""
    n = len(u)
    if any(not x for x in u):
        return False
    if sum(u, ZERO) != 0:
        return False
    for i in range(n - 1):
        if (off is None or off[i]) and not (u[i] + lam * u[i + 1]):
            return False
    return sum((di / ui for di, ui in zip(d, u) if di), ZERO) == 0


def fixed_u_candidates(n: int) -> list[tuple]:
    """The two fixed diagonal choices, tried before any search."""
    last_heavy = (ONE,) * (n - 1) + (Fraction(-(n - 1)),)
    two_heavy = (ONE,) * (n - 2) + (Fraction(2), Fraction(-n))
    return [last_heavy, two_heavy]


def fixed_u_consistent(d: Sequence, lam) -> bool:
    """Whether the diagonal system for [A,B] = diag(1,..,1,-(n-1)) is solvable.

    Unknowns b_1..b_n with (1+lam) b_i = d_i (i < n), -(n-1)(1+lam) b_n = d_n and
    the trace condition b_n = -(b_1 + ... + b_{n-1}).
    """
    from .matrix import rank

    n = len(d)
    lam = Fraction(lam)
    rows, rhs = [], []
    for i in range(n - 1):
        rows.append([(1 + lam) if j == i else ZERO for j in range(n)])
        rhs.append(d[i])
    rows.append([ZERO] * (n - 1) + [-(n - 1) * (1 + lam)])
    rhs.append(d[n - 1])
    rows.append([ONE] * n)
    rhs.append(ZERO)
    aug = [r + [b] for r, b in zip(rows, rhs)]
    return rank(rows) == rank(aug)


def _solve_pair(dj, dk, p, q, radicand):
    """Roots u_j of q u^2 + (dk - dj - q p) u + dj p = 0 with u_j + u_k = p.

    Returns (roots, radicand, rational) where rational tells whether no new
    square root was needed.
    """
    b = dk - dj - q * p
    c = dj * p
    if not q:
        if not b:
            return [], radicand, True
        return [-c / b], radicand, True
    disc = b * b - 4 * q * c
    root = sqrt_in_field(disc, radicand)
    if root is not None:
        return [(-b + root) / (2 * q), (-b - root) / (2 * q)], radicand, True
    if radicand is not None:
        return [], radicand, False
    m, s = adjoin_sqrt(disc)
    root = quad(0, s, m)
    return [(-b + root) / (2 * q), (-b - root) / (2 * q)], m, False


def select_u(
    d: Sequence,
    lam,
    rng: random.Random | None = None,
    radicand: int | None = None,
    off: Sequence | None = None,
) -> USelection:
    """Diagonal u for [A,B] = diag(u) making the product construction solvable.

    Without ``off`` every superdiagonal position is treated as nonzero.
    """
    n = len(d)
    if n < 3:
        raise DimensionTooSmall("needs n >= 3")
    _require_trace_zero(d)
    if lam == -1:
        raise LambdaMinusOne("lambda = -1 is handled by the commutator construction")
    rng = rng or random.Random(0)
    for u in fixed_u_candidates(n):
        if _u_valid(u, d, lam, off):
            return USelection(u, None)
    nonzero = [i for i, x in enumerate(d) if x]
    if not nonzero:
        for _ in range(SELECT_U_ATTEMPTS):
            head = [Fraction(rng.choice(SELECT_U_POOL)) for _ in range(n - 1)]
            u = tuple(head + [-sum(head, ZERO)])
            if _u_valid(u, d, lam, off):
                return USelection(u, None)
        raise USelectionFailed("no admissible u for a zero diagonal")
    j, k = nonzero[0], nonzero[1]
    others = [i for i in range(n) if i not in (j, k)]
    fallback = None
    for _ in range(SELECT_U_ATTEMPTS):
        fixed = {i: Fraction(rng.choice(SELECT_U_POOL)) for i in others}
        p = -sum(fixed.values(), ZERO)
        q = -sum((d[i] / fixed[i] for i in others), ZERO)
        roots, m, rational = _solve_pair(d[j], d[k], p, q, radicand)
        for uj in roots:
            u = [ZERO] * n
            for i, v in fixed.items():
                u[i] = v
            u[j], u[k] = uj, p - uj
            u = tuple(u)
            if _u_valid(u, d, lam, off):
                if rational:
                    return USelection(u, radicand if m is None else m)
                if fallback is None:
                    fallback = USelection(u, m)
                break
    if fallback is not None:
        return fallback
    if radicand is not None:
        raise NotSupported(
            f"product construction needs a second square root over Q(sqrt({radicand}))"
        )
    raise USelectionFailed("no admissible u within the attempt bound")


def _bidiagonal_eigenvectors(t: BidiagonalTarget) -> Matrix:
    """Upper triangular V with t V = V diag(t) (distinct diagonal entries)."""
    n, d, s = t.n, t.diag, t.off
    cols = []
    for k in range(n):
        v = [ZERO] * n
        v[k] = ONE
        for i in range(k - 1, -1, -1):
            v[i] = -s[i] * v[i + 1] / (d[i] - d[k])
        cols.append(v)
    return Matrix.from_columns(cols)


def _lemma2_direct(lam, t: BidiagonalTarget, rng, radicand):
    n = t.n
    sel = select_u(t.diag, lam, rng, radicand, t.off)
    u = sel.u
    b_diag = tuple(di / ((1 + lam) * ui) for di, ui in zip(t.diag, u))
    w = tuple(s / (u[i] + lam * u[i + 1]) if s else ZERO for i, s in enumerate(t.off))
    b = lemma1_solve(BidiagonalTarget("upper", u, (ZERO,) * (n - 1)))
    c = lemma1_solve(BidiagonalTarget("upper", b_diag, w))
    return shift_matrix(n), b, c


def lemma2_construct(lam, t, rng: random.Random | None = None, radicand: int | None = None):
    """(A, B, C) with [A,B][A,C] + lam [A,C][A,B] = t (t upper bidiagonal).

    When no diagonal [A,B] fits t (small n, special lam) and the diagonal of t
    has distinct entries, the witnesses are built for diag(t) and conjugated
    back by the eigenvector matrix.
    """
    if lam == -1:
        raise LambdaMinusOne("lambda = -1 is excluded; use lemma2a_construct")
    t = _as_target(t, "upper")
    n = t.n
    if n < 3:
        raise DimensionTooSmall("needs n >= 3")
    _require_trace_zero(t.diag)
    if radicand is None:
        radicand = t.to_matrix().radicand
    try:
        return _lemma2_direct(lam, t, rng, radicand)
    except USelectionFailed:
        if len(set(t.diag)) < n or not any(t.off):
            raise
    v = _bidiagonal_eigenvectors(t)
    v_inv = inverse(v)
    flat = BidiagonalTarget("upper", t.diag, (ZERO,) * (n - 1))
    return tuple(v @ x @ v_inv for x in _lemma2_direct(lam, flat, rng, radicand))


# -- Lie branches -----------------------------------------------------------------

def distinct_diagonal(n: int) -> Matrix:
    return Matrix.diag([Fraction(i) for i in range(1, n + 1)])


def ad_pow_solve(s: Matrix, k: int, gamma, z: Matrix) -> Matrix:
    """X with zero diagonal and gamma * ad_S^k(X) = Z."""
    if not gamma:
        raise ZeroGamma("gamma must be nonzero")
    sd = s.diagonal()
    if len(set(sd)) != len(sd) or not s.is_diagonal():
        raise RepeatedDiagonal("S must be diagonal with distinct entries")
    if any(z.diagonal()):
        raise ValueError("Z must have zero diagonal")
    n = z.n
    return Matrix.from_function(
        n, lambda i, j: ZERO if i == j else z[i, j] / (gamma * (sd[i] - sd[j]) ** k)
    )


def _lie4(i: int, z, d: Matrix):
    canon = zero_diagonalize(d)
    s = distinct_diagonal(d.n)
    x = ad_pow_solve(s, 3, LIE4_SIGN * z, canon.T)
    slots = [s] * 4
    slots[i] = x
    return tuple(canon.pull_back(m) for m in slots), canon


def _lie3(w1, w2, d: Matrix):
    canon = zero_diagonalize(d)
    s = distinct_diagonal(d.n)
    if w1:
        slots = [s, ad_pow_solve(s, 2, LIE3_SIGN * w1, canon.T), s]
    elif w2:
        slots = [s, s, ad_pow_solve(s, 2, LIE3_SIGN * w2, canon.T)]
    else:
        raise ZeroScale("w1 and w2 both zero")
    return tuple(canon.pull_back(m) for m in slots), canon


def _two_var(gamma, d: Matrix):
    canon = zero_diagonalize(d)
    s = distinct_diagonal(d.n)
    y = ad_pow_solve(s, 1, gamma, canon.T)
    return (canon.pull_back(s), canon.pull_back(y)), canon


def lie4_witnesses(i: int, z, d: Matrix) -> tuple[Matrix, ...]:
    """Witnesses for z * (i-th left-normed bracket) at d.

    Slot i+1 carries X, the other three carry S = diag(1..n); the other two
    brackets and all commutator products vanish on this layout.
    """
    return _lie4(i, z, d)[0]


def lie3_witnesses(w1, w2, d: Matrix) -> tuple[Matrix, ...]:
    return _lie3(w1, w2, d)[0]


def two_var_witnesses(gamma, d: Matrix) -> tuple[Matrix, Matrix]:
    """(X, Y) with gamma [X, Y] = D, always over the field of D."""
    return _two_var(gamma, d)[0]


# -- orchestration ----------------------------------------------------------------

@dataclass
class WitnessReport:
    witnesses: tuple
    branch: list
    conjugator: Matrix | None
    radicand: int | None
    verified: bool

    def to_json(self) -> dict:
        return {
            "branch": self.branch,
            "witnesses": [w.to_lists() for w in self.witnesses],
            "conjugator": self.conjugator.to_lists() if self.conjugator is not None else None,
            "radicand": self.radicand,
            "verified": self.verified,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def verify(f: Poly, witnesses: Sequence[Matrix], d: Matrix) -> bool:
    """Exact membership check f(witnesses) == d."""
    return evaluate(f, list(witnesses), n=d.n) == d


def _layout(pattern: str, a: Matrix, b: Matrix, c: Matrix) -> tuple[Matrix, ...]:
    table = {"A": a, "B": b, "C": c}
    return tuple(table[ch] for ch in pattern)


def _product_canon(d: Matrix, orientation: str) -> tuple[Canonicalization, BidiagonalTarget]:
    jc = jordanize(d)
    bc, target = to_bidiagonal(jc.T, orientation)
    return jc.then(bc), target


def _construct(plan, d: Matrix, rng: random.Random):
    """Witnesses for a non-surjective plan at d, plus the canonicalization used."""
    if trace(d) != 0:
        raise NonTraceZero("target must have trace zero for this polynomial")
    if isinstance(plan, dec.PartialReduction):
        inner, canon = _construct(plan.inner, d, rng)
        ws = list(inner)
        ws.insert(plan.slot - 1, Matrix.identity(d.n))
        return tuple(ws), canon
    if isinstance(plan, dec.Commutator2):
        return _two_var(plan.gamma, d)
    if isinstance(plan, dec.Lie3):
        return _lie3(plan.w1, plan.w2, d)
    if isinstance(plan, dec.Lie4):
        return _lie4(plan.index, plan.z, d)
    if isinstance(plan, dec.SpecialCentralLike):
        canon, target = _product_canon(d, "upper")
        ws = prop1_witnesses(target, plan.scale)
        return tuple(canon.pull_back(w) for w in ws), canon
    if isinstance(plan, dec.ProductCase):
        if plan.lam == -1:
            canon, target = _product_canon(d, "lower")
            a, b, c = lemma2a_construct(target.scaled(1 / plan.alpha))
        else:
            canon, target = _product_canon(d, "upper")
            a, b, c = lemma2_construct(plan.lam, target.scaled(1 / plan.scale), rng)
            if plan.swapped:
                b, c = c, b
        ws = _layout(plan.pattern, a, b, c)
        return tuple(canon.pull_back(w) for w in ws), canon
    raise TypeError(f"cannot construct witnesses for {plan!r}")


def synthesize(f: Poly, d: Matrix, seed: int = 0) -> WitnessReport:
    """Witnesses for f at d, verified by exact evaluation."""
    if not isinstance(f, MultilinearPoly):
        f = expand(f)
    if f.is_zero():
        raise ZeroPolynomial("polynomial is zero")
    if d.n < 3:
        raise DimensionTooSmall("synthesis requires n >= 3")
    plan = dec.classify(f)
    rng = random.Random(seed)
    if isinstance(plan, dec.Surjective):
        ident = Matrix.identity(d.n)
        ws = (d.scale(1 / plan.s),) + (ident,) * (f.m - 1)
        conj = None
    else:
        ws, canon = _construct(plan, d, rng)
        conj = canon.P
    radicands = {w.radicand for w in ws} - {None}
    return WitnessReport(
        witnesses=tuple(ws),
        branch=dec.tag_path(plan),
        conjugator=conj,
        radicand=radicands.pop() if radicands else None,
        verified=verify(f, ws, d),
    )
