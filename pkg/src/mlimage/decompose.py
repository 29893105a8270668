"""Classification of multilinear polynomials into construction branches.

A polynomial is *proper* when its coefficient sum is zero and every identity
substitution vanishes.  Proper polynomials of degree 4 are spanned by three
left-normed brackets and six products of two commutators; the coordinates in
that basis decide which witness construction applies.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, fields
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import InternalInconsistency, NotMultilinear, NotProper
from .field import format_scalar, parse_scalar
from .freepoly import MultilinearPoly, coeff_sum, poly, substitute_identity
from .matrix import solve_linear

LIE4_TEXTS = ("[[[x2,x1],x3],x4]", "[[[x3,x1],x2],x4]", "[[[x4,x1],x2],x3]")
PRODUCT_KEYS = ("1234", "1324", "1423", "2314", "2413", "3412")
LIE3_TEXTS = ("[[x2,x1],x3]", "[[x3,x1],x2]")
COMMUTATOR2_TEXT = "[x1,x2]"


def product_text(key: str) -> str:
    a, b, c, d = key
    return f"[x{a},x{b}]*[x{c},x{d}]"


_GENERATOR_TEXTS = {
    4: LIE4_TEXTS + tuple(product_text(k) for k in PRODUCT_KEYS),
    3: LIE3_TEXTS,
    2: (COMMUTATOR2_TEXT,),
}


@lru_cache(maxsize=None)
def _generators(m: int) -> tuple[MultilinearPoly, ...]:
    return tuple(poly(t) for t in _GENERATOR_TEXTS[m])


def hall_generators(m: int = 4) -> list[MultilinearPoly]:
    """Basis of the proper multilinear polynomials of degree m (m = 2, 3, 4)."""
    if m not in _GENERATOR_TEXTS:
        raise ValueError(f"no generator family for arity {m}")
    return list(_generators(m))


def is_proper(f: MultilinearPoly) -> bool:
    if coeff_sum(f) != 0:
        return False
    return all(substitute_identity(f, i).is_zero() for i in range(1, f.m + 1))


def _coordinates(f: MultilinearPoly, m: int) -> list[Fraction]:
    gens = hall_generators(m)
    columns = [g.vector() for g in gens]
    rows = [list(r) for r in zip(*columns)]
    sol = solve_linear(rows, f.vector())
    if sol is None:
        raise InternalInconsistency("proper polynomial outside the generator span")
    return sol


@dataclass(frozen=True)
class ProperDecomposition:
    z1: Fraction = Fraction(0)
    z2: Fraction = Fraction(0)
    z3: Fraction = Fraction(0)
    c1234: Fraction = Fraction(0)
    c1324: Fraction = Fraction(0)
    c1423: Fraction = Fraction(0)
    c2314: Fraction = Fraction(0)
    c2413: Fraction = Fraction(0)
    c3412: Fraction = Fraction(0)

    def values(self) -> list[Fraction]:
        return [getattr(self, f.name) for f in fields(self)]

    def reconstruct(self) -> MultilinearPoly:
        total = MultilinearPoly(4)
        for c, g in zip(self.values(), hall_generators(4)):
            if c:
                total = total + g * c
        return total

    @property
    def z(self) -> tuple:
        return (self.z1, self.z2, self.z3)

    def c(self, key: str) -> Fraction:
        return getattr(self, "c" + key)

    def to_json(self) -> dict:
        return {f.name: format_scalar(getattr(self, f.name)) for f in fields(self)}

    @classmethod
    def from_json(cls, data) -> ProperDecomposition:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(**{k: parse_scalar(str(v)) for k, v in data.items()})


def proper_decompose(f: MultilinearPoly) -> ProperDecomposition:
    if f.m != 4:
        raise NotMultilinear(f"decomposition is for arity 4, got {f.m}")
    if not is_proper(f):
        raise NotProper("polynomial is not proper")
    d = ProperDecomposition(*_coordinates(f, 4))
    if d.reconstruct() != f:
        raise InternalInconsistency("reconstruction mismatch")
    return d


# The six argument layouts.  Letters name the matrices placed in slots 1..4.
PATTERNS = ("AABC", "ABAC", "ABCA", "BAAC", "BACA", "BCAA")


@dataclass(frozen=True)
class PatternPair:
    """f(layout) = alpha*[A,B][A,C] + beta*[A,C][A,B]."""

    pattern: str
    alpha: Fraction
    beta: Fraction


def pattern_pairs(d: ProperDecomposition) -> list[PatternPair]:
    if any(d.z):
        raise ValueError("pattern pairs require z1 = z2 = z3 = 0")
    c = d.c
    table = [
        (c("1324") + c("2314"), c("1423") + c("2413")),
        (c("1234") - c("2314"), c("3412") - c("1423")),
        (-c("1234") - c("2413"), -c("1324") - c("3412")),
        (-c("1234") - c("1324"), -c("2413") - c("3412")),
        (c("1234") - c("1423"), c("3412") - c("2314")),
        (c("1324") + c("1423"), c("2314") + c("2413")),
    ]
    return [PatternPair(p, a, b) for p, (a, b) in zip(PATTERNS, table)]


# -- synthesis plans --------------------------------------------------------------

@dataclass(frozen=True)
class Zero:
    @property
    def tag(self):
        return "Zero"


@dataclass(frozen=True)
class Surjective:
    s: Fraction

    @property
    def tag(self):
        return f"Surjective(s={format_scalar(self.s)})"


@dataclass(frozen=True)
class PartialReduction:
    slot: int
    reduced: MultilinearPoly
    inner: "SynthesisPlan"

    @property
    def tag(self):
        return f"PartialReduction(slot={self.slot})"


@dataclass(frozen=True)
class Lie4:
    index: int
    z: Fraction
    decomposition: ProperDecomposition

    @property
    def tag(self):
        return f"Lie4(i={self.index}, z={format_scalar(self.z)})"


@dataclass(frozen=True)
class Lie3:
    w1: Fraction
    w2: Fraction

    @property
    def tag(self):
        return f"Lie3(w1={format_scalar(self.w1)}, w2={format_scalar(self.w2)})"


@dataclass(frozen=True)
class Commutator2:
    gamma: Fraction

    @property
    def tag(self):
        return f"Commutator2(gamma={format_scalar(self.gamma)})"


@dataclass(frozen=True)
class ProductCase:
    pattern: str
    alpha: Fraction
    beta: Fraction
    lam: Fraction
    swapped: bool
    decomposition: ProperDecomposition

    @property
    def scale(self) -> Fraction:
        return self.beta if self.swapped else self.alpha

    @property
    def tag(self):
        return (
            f"ProductCase(pattern={self.pattern}, alpha={format_scalar(self.alpha)}, "
            f"beta={format_scalar(self.beta)}, lambda={format_scalar(self.lam)}"
            + (", swapped)" if self.swapped else ")")
        )


@dataclass(frozen=True)
class SpecialCentralLike:
    scale: Fraction
    decomposition: ProperDecomposition

    @property
    def tag(self):
        return f"SpecialCentralLike(c1234={format_scalar(self.scale)})"


SynthesisPlan = Union[
    Zero, Surjective, PartialReduction, Lie4, Lie3, Commutator2, ProductCase, SpecialCentralLike
]


def tag_path(plan) -> list[str]:
    path = [plan.tag]
    while isinstance(plan, PartialReduction):
        plan = plan.inner
        path.append(plan.tag)
    return path


def choose_pattern(pairs: list[PatternPair]) -> PatternPair | None:
    """Preference: lambda = -1 pairs, then alpha != 0, then beta != 0."""
    for p in pairs:
        if p.alpha and p.beta == -p.alpha:
            return p
    for p in pairs:
        if p.alpha:
            return p
    for p in pairs:
        if p.beta:
            return p
    return None


def classify(f: MultilinearPoly):
    if not 1 <= f.m <= 4 and not f.is_zero():
        raise NotMultilinear(f"arity {f.m} not supported")
    if f.is_zero():
        return Zero()
    s = coeff_sum(f)
    if s:
        return Surjective(s)
    for slot in range(1, f.m + 1):
        reduced = substitute_identity(f, slot)
        if not reduced.is_zero():
            return PartialReduction(slot, reduced, classify(reduced))
    # f is proper from here on
    if f.m == 2:
        return Commutator2(_coordinates(f, 2)[0])
    if f.m == 3:
        w1, w2 = _coordinates(f, 3)
        return Lie3(w1, w2)
    d = proper_decompose(f)
    for i, z in enumerate(d.z, start=1):
        if z:
            return Lie4(i, z, d)
    pair = choose_pattern(pattern_pairs(d))
    if pair is None:
        return SpecialCentralLike(d.c1234, d)
    if pair.alpha:
        return ProductCase(pair.pattern, pair.alpha, pair.beta, pair.beta / pair.alpha, False, d)
    return ProductCase(pair.pattern, pair.alpha, pair.beta, Fraction(0), True, d)


def plan_to_json(plan) -> dict:
    out = {"branch": tag_path(plan)}
    while isinstance(plan, PartialReduction):
        plan = plan.inner
    d = getattr(plan, "decomposition", None)
    out["decomposition"] = d.to_json() if d is not None else None
    return out


def pattern_matrix() -> list[list[Fraction]]:
    """12 x 6 matrix sending (c1234, ..., c3412) to the six (alpha, beta) pairs."""
    columns = []
    for key in PRODUCT_KEYS:
        pairs = pattern_pairs(ProperDecomposition(**{"c" + key: Fraction(1)}))
        columns.append([x for p in pairs for x in (p.alpha, p.beta)])
    return [list(r) for r in zip(*columns)]
