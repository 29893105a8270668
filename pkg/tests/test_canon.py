import random
from fractions import Fraction

import pytest

from mlimage.canon import (
    BidiagonalTarget,
    is_jordan_form,
    jordanize,
    rational_roots,
    spectrum,
    to_bidiagonal,
    zero_diagonalize,
)
from mlimage.errors import NonTraceZero, SplitFailure
from mlimage.field import quad
from mlimage.matrix import Matrix, Polynomial1V, conjugate
from mlimage.randgen import random_quadratic_spectrum, random_split_spectrum, random_trace_zero


def test_zero_diagonal_input_untouched():
    d = Matrix([[0, 1, 2], [3, 0, 4], [5, 6, 0]])
    z = zero_diagonalize(d)
    assert z.P == Matrix.identity(3) and z.T == d


@pytest.mark.parametrize("d", [Matrix.diag([1, -1]), Matrix.diag([1, 1, -2])])
def test_zero_diagonalize_diagonal(d):
    z = zero_diagonalize(d)
    assert not any(z.T.diagonal())
    assert conjugate(z.P, d) == z.T


def test_zero_diagonalize_random():
    rng = random.Random(11)
    for n in range(2, 7):
        for _ in range(5):
            d = random_trace_zero(rng, n)
            z = zero_diagonalize(d)
            assert not any(z.T.diagonal())
            assert z.P @ d @ z.P_inv == z.T


def test_zero_diagonalize_needs_trace_zero():
    with pytest.raises(NonTraceZero):
        zero_diagonalize(Matrix.identity(3))


def test_rational_roots():
    x = Polynomial1V([0, 1])
    p = (x - Polynomial1V([1])) * (x - Polynomial1V([1])) * (x + Polynomial1V([2]))
    assert rational_roots(p) == {1: 2, -2: 1}
    assert rational_roots(x * x * x) == {0: 3}
    assert not rational_roots(Polynomial1V([-2, 0, 1]))


def test_jordan_block_from_companion():
    j = jordanize(Matrix([[0, -1], [1, 2]]))  # companion of (x-1)^2
    assert j.T == Matrix([[1, 1], [0, 1]])


def test_quadratic_spectrum():
    d = Matrix([[0, 3], [1, 0]])
    j = jordanize(d)
    r3 = quad(0, 1, 3)
    assert j.T == Matrix.diag([-r3, r3])
    assert conjugate(j.P, d) == j.T


def test_split_failure():
    with pytest.raises(SplitFailure):
        spectrum(Matrix([[0, 0, 2], [1, 0, 0], [0, 1, 0]]))  # x^3 - 2


def test_jordanize_random():
    rng = random.Random(12)
    for n in range(2, 6):
        d = random_split_spectrum(rng, n)
        j = jordanize(d)
        assert is_jordan_form(j.T) and conjugate(j.P, d) == j.T
        q, _ = random_quadratic_spectrum(rng, max(n, 3))
        j = jordanize(q)
        assert is_jordan_form(j.T) and j.P @ q @ j.P_inv == j.T


def test_lower_orientation_reverses_blocks():
    j = Matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    canon, target = to_bidiagonal(j, "lower")
    assert canon.T == Matrix([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    assert conjugate(canon.P, j) == canon.T
    assert target == BidiagonalTarget("lower", (0, 0, 0), (1, 1))


def test_upper_orientation_is_identity():
    j = Matrix([[1, 1, 0], [0, 1, 0], [0, 0, -2]])
    canon, target = to_bidiagonal(j)
    assert canon.P == Matrix.identity(3)
    assert target.to_matrix() == j


def test_canonicalization_composition():
    rng = random.Random(13)
    d = random_split_spectrum(rng, 4)
    j = jordanize(d)
    b, _ = to_bidiagonal(j.T, "lower")
    both = j.then(b)
    assert conjugate(both.P, d) == both.T
    x = Matrix.from_function(4, lambda i, k: Fraction(i - k))
    assert both.pull_back(both.P @ x @ both.P_inv) == x
