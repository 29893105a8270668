import random
from fractions import Fraction

import pytest

from mlimage.errors import SingularMatrix
from mlimage.field import quad
from mlimage.matrix import (
    Matrix,
    Polynomial1V,
    char_poly,
    commutator,
    conjugate,
    inverse,
    kernel_basis,
    rank,
    solve_linear,
    trace,
    unit,
)
from mlimage.randgen import random_matrix, random_unimodular


def test_unit_is_one_based():
    e = unit(3, 1, 2)
    assert e[0, 1] == 1 and sum(e[i, j] for i in range(3) for j in range(3)) == 1


def test_commutator_trace_zero():
    rng = random.Random(1)
    for _ in range(20):
        x, y = random_matrix(rng, 4), random_matrix(rng, 4)
        assert trace(commutator(x, y)) == 0


def test_inverse_and_singular():
    rng = random.Random(2)
    p = random_unimodular(rng, 5)
    assert p @ inverse(p) == Matrix.identity(5)
    with pytest.raises(SingularMatrix):
        inverse(Matrix([[1, 2], [2, 4]]))


def test_inverse_over_extension():
    r2 = quad(0, 1, 2)
    m = Matrix([[1, r2], [r2, 3]])
    assert m @ inverse(m) == Matrix.identity(2)
    assert m.radicand == 2


def test_conjugate():
    rng = random.Random(3)
    p = random_unimodular(rng, 3)
    x = random_matrix(rng, 3)
    assert conjugate(p, x) == p @ x @ inverse(p)


def test_rank_and_kernel():
    m = Matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(m.rows) == 2
    (v,) = kernel_basis(m)
    assert not any(m.apply(v))


def test_solve_linear():
    assert solve_linear([[1, 1], [1, -1]], [3, 1]) == [2, 1]
    assert solve_linear([[1, 1], [2, 2]], [1, 3]) is None


def test_char_poly_companion():
    # x^3 - 2x + 5
    c = Matrix([[0, 0, -5], [1, 0, 2], [0, 1, 0]])
    assert char_poly(c).coeffs == tuple(Fraction(v) for v in (5, -2, 0, 1))


def test_char_poly_cayley_hamilton():
    rng = random.Random(4)
    x = random_matrix(rng, 4)
    p = char_poly(x)
    acc = Matrix.zeros(4)
    for k, c in enumerate(p.coeffs):
        acc = acc + (x ** k).scale(c)
    assert acc.is_zero()


def test_polynomial_division():
    a = Polynomial1V([-1, 0, 1])  # x^2 - 1
    b = Polynomial1V([1, 1])
    q, r = divmod(a, b)
    assert q == Polynomial1V([-1, 1]) and r.is_zero()
    assert str(a) == "x^2 - 1"


def test_json_roundtrip():
    m = Matrix([[Fraction(1, 2), quad(1, -1, 3)], [0, -1]])
    assert Matrix.from_json(m.to_lists()) == m
