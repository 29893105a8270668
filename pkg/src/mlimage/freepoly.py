"""Multilinear polynomials in up to four noncommuting variables.

Grammar accepted by :func:`parse`::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := rational | var | '[' expr ',' expr ']' | '(' expr ')' | '-' factor
    var    := 'x1' | 'x2' | 'x3' | 'x4'
    rational := integer ('/' positive-integer)?

A polynomial is stored as a map from words (tuples of 1-based variable
indices) to rational coefficients.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Mapping, Sequence, Union

from .errors import DimensionMismatch, NotMultilinear, ParseError
from .field import format_scalar, parse_scalar, to_field
from .matrix import Matrix, commutator

MAX_ARITY = 4

Word = tuple


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Bracket:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Group:
    inner: "Expr"


Expr = Union[Num, Var, Add, Sub, Mul, Neg, Bracket, Group]


# -- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x\d+)|(?P<op>[-+*/\[\](),]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if not match:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append((kind, match.group(kind), start))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value:
            shown = val or "end of input"
            raise ParseError(f"expected {value!r}, found {shown!r}", pos)

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            node = Mul(node, self.factor())
        return node

    def factor(self) -> Expr:
        kind, val, pos = self.take()
        if kind == "num":
            value = Fraction(int(val))
            if self.peek()[:2] == ("op", "/"):
                self.take()
                dkind, dval, dpos = self.take()
                if dkind != "num" or int(dval) == 0:
                    raise ParseError("expected positive integer denominator", dpos)
                value = Fraction(int(val), int(dval))
            return Num(value)
        if kind == "var":
            idx = int(val[1:])
            if not 1 <= idx <= MAX_ARITY:
                raise ParseError(f"unknown variable {val!r}", pos)
            return Var(idx)
        if val == "[":
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return Bracket(left, right)
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return Group(inner)
        if val == "-":
            return Neg(self.factor())
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse(text: str) -> Expr:
    parser = _Parser(text)
    node = parser.expr()
    kind, val, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input {val!r}", pos)
    return node


def _level(node: Expr) -> int:
    if isinstance(node, (Add, Sub)):
        return 0
    if isinstance(node, Mul):
        return 1
    return 2


def _wrap(node: Expr, need: int) -> str:
    text = print_ast(node)
    return f"({text})" if _level(node) < need else text


def print_ast(node: Expr) -> str:
    """Grammar text for node; parentheses are added only where precedence needs them."""
    if isinstance(node, Num):
        return format_scalar(node.value)
    if isinstance(node, Var):
        return f"x{node.index}"
    if isinstance(node, Add):
        return f"{_wrap(node.left, 0)} + {_wrap(node.right, 1)}"
    if isinstance(node, Sub):
        return f"{_wrap(node.left, 0)} - {_wrap(node.right, 1)}"
    if isinstance(node, Mul):
        return f"{_wrap(node.left, 1)}*{_wrap(node.right, 2)}"
    if isinstance(node, Neg):
        return f"-{_wrap(node.operand, 2)}"
    if isinstance(node, Bracket):
        return f"[{print_ast(node.left)}, {print_ast(node.right)}]"
    if isinstance(node, Group):
        return f"({print_ast(node.inner)})"
    raise TypeError(f"not an expression node: {node!r}")


def max_variable(node: Expr) -> int:
    if isinstance(node, Var):
        return node.index
    if isinstance(node, Num):
        return 0
    children = [getattr(node, f) for f in ("left", "right", "operand", "inner") if hasattr(node, f)]
    return max((max_variable(c) for c in children), default=0)


# -- noncommutative expansion ------------------------------------------------

def _nc_add(p: dict, q: dict, sign=1) -> dict:
    out = dict(p)
    for w, c in q.items():
        v = out.get(w, 0) + sign * c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def _nc_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            w = w1 + w2
            v = out.get(w, 0) + c1 * c2
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return out


def _nc_expand(node: Expr) -> dict:
    if isinstance(node, Num):
        return {(): node.value} if node.value else {}
    if isinstance(node, Var):
        return {(node.index,): Fraction(1)}
    if isinstance(node, Add):
        return _nc_add(_nc_expand(node.left), _nc_expand(node.right))
    if isinstance(node, Sub):
        return _nc_add(_nc_expand(node.left), _nc_expand(node.right), -1)
    if isinstance(node, Mul):
        return _nc_mul(_nc_expand(node.left), _nc_expand(node.right))
    if isinstance(node, Neg):
        return {w: -c for w, c in _nc_expand(node.operand).items()}
    if isinstance(node, Bracket):
        a, b = _nc_expand(node.left), _nc_expand(node.right)
        return _nc_add(_nc_mul(a, b), _nc_mul(b, a), -1)
    if isinstance(node, Group):
        return _nc_expand(node.inner)
    raise TypeError(f"not an expression node: {node!r}")


# -- multilinear polynomials ----------------------------------------------------

class MultilinearPoly:
    """sum over permutations w of coeffs[w] * x_{w[0]} ... x_{w[m-1]}."""

    __slots__ = ("m", "_coeffs")

    def __init__(self, m: int, coeffs: Mapping[Sequence[int], object] = ()):
        if not 0 <= m <= MAX_ARITY:
            raise NotMultilinear(f"arity {m} outside 0..{MAX_ARITY}")
        target = tuple(range(1, m + 1))
        clean = {}
        for word, c in dict(coeffs).items():
            word = tuple(int(i) for i in word)
            if tuple(sorted(word)) != target:
                raise NotMultilinear(f"word {word} is not a permutation of 1..{m}")
            c = to_field(c)
            if c:
                clean[word] = c
        self.m = m
        self._coeffs = dict(sorted(clean.items()))

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def coeff(self, word) -> Fraction:
        return self._coeffs.get(tuple(word), Fraction(0))

    def words(self) -> list[Word]:
        return list(permutations(range(1, self.m + 1)))

    def vector(self) -> list:
        """Coefficients over all m! words in lexicographic order."""
        return [self.coeff(w) for w in self.words()]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        return self.m == other.m and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.m, tuple(self._coeffs.items())))

    def __repr__(self):
        return f"MultilinearPoly({self.m}, {to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    def __add__(self, other: MultilinearPoly) -> MultilinearPoly:
        if self.m != other.m:
            raise NotMultilinear("cannot add polynomials of different arity")
        return MultilinearPoly(self.m, _nc_add(self._coeffs, other._coeffs))

    def __sub__(self, other: MultilinearPoly) -> MultilinearPoly:
        return self + other * -1

    def __mul__(self, c) -> MultilinearPoly:
        c = to_field(c)
        return MultilinearPoly(self.m, {w: c * v for w, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1


Poly = Union[MultilinearPoly, Expr]


def expand(node: Expr, arity: int | None = None) -> MultilinearPoly:
    """Collect an expression into its multilinear coefficient map."""
    terms = _nc_expand(node)
    lengths = {len(w) for w in terms}
    if len(lengths) > 1:
        raise NotMultilinear(f"monomials of mixed degree {sorted(lengths)}")
    if arity is None:
        arity = lengths.pop() if lengths else max_variable(node)
    for w in terms:
        if sorted(w) != list(range(1, arity + 1)):
            label = "*".join(f"x{i}" for i in w) or "constant"
            raise NotMultilinear(f"monomial {label} is not multilinear in x1..x{arity}")
    return MultilinearPoly(arity, terms)


def from_json_map(data, arity: int | None = None) -> MultilinearPoly:
    """Build from a JSON object mapping word strings like "1234" to scalar strings."""
    if isinstance(data, str):
        data = json.loads(data)
    coeffs = {}
    for key, value in data.items():
        if not key.isdigit():
            raise ParseError(f"bad word key {key!r}")
        coeffs[tuple(int(ch) for ch in key)] = parse_scalar(str(value))
    if arity is None:
        arity = len(next(iter(coeffs))) if coeffs else 0
    return MultilinearPoly(arity, coeffs)


def to_json_map(f: MultilinearPoly) -> dict:
    return {"".join(map(str, w)): format_scalar(c) for w, c in f.coeffs.items()}


def load_poly(text: str) -> MultilinearPoly:
    """Grammar text or a JSON word map."""
    if text.lstrip().startswith("{"):
        return from_json_map(text)
    return expand(parse(text))


def to_text(f: Poly) -> str:
    if not isinstance(f, MultilinearPoly):
        return print_ast(f)
    if f.is_zero():
        return "0"
    parts = []
    for word, c in f.coeffs.items():
        mono = "*".join(f"x{i}" for i in word) or "1"
        mag = abs(c)
        body = mono if mag == 1 and word else f"{format_scalar(mag)}*{mono}" if word else format_scalar(mag)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def coeff_sum(f: MultilinearPoly) -> Fraction:
    return sum(f.coeffs.values(), Fraction(0))


def substitute_identity(f: MultilinearPoly, slot: int) -> MultilinearPoly:
    """Set x_slot = 1; remaining variables renumbered 1..m-1 in order."""
    if not 1 <= slot <= f.m:
        raise IndexError(f"slot {slot} outside 1..{f.m}")
    out: dict = {}
    for word, c in f.coeffs.items():
        reduced = tuple(i - 1 if i > slot else i for i in word if i != slot)
        out[reduced] = out.get(reduced, 0) + c
    return MultilinearPoly(f.m - 1, out)


def slot_mapping(m: int, slot: int) -> tuple[int, ...]:
    """Original slot of each variable of substitute_identity(f, slot)."""
    return tuple(i for i in range(1, m + 1) if i != slot)


def arity(f: Poly) -> int:
    return f.m if isinstance(f, MultilinearPoly) else max_variable(f)


def evaluate(f: Poly, args: Sequence[Matrix], n: int | None = None) -> Matrix:
    """Exact value of f at the given matrices."""
    m = arity(f)
    if len(args) != m:
        raise DimensionMismatch(f"polynomial has arity {m}, got {len(args)} arguments")
    if n is None:
        if not args:
            raise DimensionMismatch("dimension required for a constant polynomial")
        n = args[0].n
    if any(a.n != n for a in args):
        raise DimensionMismatch("arguments have different dimensions")
    if isinstance(f, MultilinearPoly):
        return _eval_poly(f, args, n)
    return _eval_ast(f, args, n)


def _eval_poly(f: MultilinearPoly, args, n: int) -> Matrix:
    # share prefix products between words
    prefix: dict = {(): Matrix.identity(n)}
    total = Matrix.zeros(n)
    for word, c in f.coeffs.items():
        for k in range(1, len(word) + 1):
            key = word[:k]
            if key not in prefix:
                prefix[key] = prefix[word[: k - 1]] @ args[word[k - 1] - 1]
        total = total + prefix[word].scale(c)
    return total


def _eval_ast(node: Expr, args, n: int) -> Matrix:
    if isinstance(node, Num):
        return Matrix.identity(n).scale(node.value)
    if isinstance(node, Var):
        return args[node.index - 1]
    if isinstance(node, Add):
        return _eval_ast(node.left, args, n) + _eval_ast(node.right, args, n)
    if isinstance(node, Sub):
        return _eval_ast(node.left, args, n) - _eval_ast(node.right, args, n)
    if isinstance(node, Mul):
        return _eval_ast(node.left, args, n) @ _eval_ast(node.right, args, n)
    if isinstance(node, Neg):
        return -_eval_ast(node.operand, args, n)
    if isinstance(node, Bracket):
        return commutator(_eval_ast(node.left, args, n), _eval_ast(node.right, args, n))
    if isinstance(node, Group):
        return _eval_ast(node.inner, args, n)
    raise TypeError(f"not an expression node: {node!r}")


# -- named polynomials -----------------------------------------------------------

PROP1_TEXT = (
    "[x1,x2]*[x3,x4] + [x3,x4]*[x1,x2] + [x2,x3]*[x1,x4] + [x1,x4]*[x2,x3]"
    " - [x1,x3]*[x2,x4] - [x2,x4]*[x1,x3]"
)
CENTRAL2_TEXT = "[x1,x2]*[x3,x4] + [x3,x4]*[x1,x2]"


def poly(text: str) -> MultilinearPoly:
    return expand(parse(text))
