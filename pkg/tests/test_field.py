from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mlimage.errors import RadicandMismatch
from mlimage.field import (
    QuadExt,
    adjoin_sqrt,
    format_scalar,
    inverse,
    parse_scalar,
    quad,
    sqrt_in_field,
    squarefree_decompose,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
radicands = st.sampled_from([2, 3, 5, 6, -1, -3, 7])


def test_quad_collapses_to_fraction():
    assert quad(Fraction(3, 2), 0, 5) == Fraction(3, 2)
    assert isinstance(quad(1, 0, 5), Fraction)


def test_conjugate_product_is_rational():
    a = quad(1, 1, 3)
    assert a * a.conjugate() == -2
    assert isinstance(a * a.conjugate(), Fraction)


def test_inverse_of_one_plus_root_two():
    assert inverse(quad(1, 1, 2)) == quad(-1, 1, 2)


def test_mixed_radicands_raise():
    with pytest.raises(RadicandMismatch):
        quad(1, 1, 2) + quad(1, 1, 3)


def test_invalid_radicand():
    with pytest.raises(ValueError):
        QuadExt(1, 1, 4)


@pytest.mark.parametrize(
    "k, expected",
    [(12, (3, 2)), (18, (2, 3)), (-27, (-3, 3)), (1, (1, 1)), (2 * 3 * 5 * 7, (210, 1))],
)
def test_squarefree_decompose(k, expected):
    assert squarefree_decompose(k) == expected


def test_squarefree_decompose_large_prime_square():
    p = 1_000_003
    assert squarefree_decompose(2 * p * p) == (2, p)


def test_adjoin_sqrt():
    assert adjoin_sqrt(12) == (3, 2)
    assert adjoin_sqrt(Fraction(9, 4)) == (1, Fraction(3, 2))
    m, s = adjoin_sqrt(Fraction(3, 8))
    assert quad(0, s, m) ** 2 == Fraction(3, 8)


def test_sqrt_in_field():
    assert sqrt_in_field(Fraction(4, 9), None) == Fraction(2, 3)
    assert sqrt_in_field(2, None) is None
    r = sqrt_in_field(quad(3, 2, 2), 2)  # (1 + sqrt 2)^2
    assert r * r == quad(3, 2, 2)
    assert sqrt_in_field(3, 2) is None


@pytest.mark.parametrize("text", ["0", "-3/4", "1+2*sqrt(3)", "-1/2-1/3*sqrt(-3)", "0+1*sqrt(2)"])
def test_scalar_text_roundtrip(text):
    assert parse_scalar(format_scalar(parse_scalar(text))) == parse_scalar(text)


@given(rationals, rationals, rationals, rationals, radicands)
def test_field_axioms(a, b, c, e, m):
    x, y = quad(a, b, m), quad(c, e, m)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x
    if x != 0:
        assert x * inverse(x) == 1
        assert (y / x) * x == y


@given(rationals, rationals, radicands)
def test_format_parse_roundtrip(a, b, m):
    x = quad(a, b, m)
    assert parse_scalar(format_scalar(x)) == x
