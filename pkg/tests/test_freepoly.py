import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mlimage.errors import NotMultilinear, ParseError
from mlimage.freepoly import (
    CENTRAL2_TEXT,
    Add,
    Bracket,
    Mul,
    MultilinearPoly,
    Neg,
    Num,
    Var,
    _nc_expand,
    coeff_sum,
    evaluate,
    load_poly,
    parse,
    poly,
    print_ast,
    substitute_identity,
    to_text,
)
from mlimage.matrix import Matrix, commutator
from mlimage.randgen import random_matrix


def test_commutator_expansion():
    f = poly("[x1,x2]")
    assert f.coeffs == {(1, 2): 1, (2, 1): -1}


def test_central_polynomial_has_eight_words():
    f = poly(CENTRAL2_TEXT)
    assert len(f.coeffs) == 8
    assert coeff_sum(f) == 0


def test_parse_precedence():
    assert parse("x1 + 2*x2*x3") == Add(Var(1), Mul(Mul(Num(2), Var(2)), Var(3)))
    assert parse("-[x1,x2]") == Neg(Bracket(Var(1), Var(2)))


@pytest.mark.parametrize("bad, pos", [("[x1,x2", 6), ("x1 +", 4), ("x1 $ x2", 3)])
def test_parse_error_position(bad, pos):
    with pytest.raises(ParseError) as err:
        parse(bad)
    assert err.value.position == pos


@pytest.mark.parametrize("text", ["x1*x1", "x1*x2 + x1", "x1*x3"])
def test_not_multilinear(text):
    with pytest.raises(NotMultilinear):
        poly(text)


def test_fifth_variable_rejected():
    with pytest.raises(ParseError):
        parse("x5*x1*x2*x3*x4")


def test_zero_prints_as_zero():
    f = poly("x1*x2 - x1*x2")
    assert f.is_zero()
    assert to_text(f) == "0"


def test_load_poly_json_map():
    f = load_poly('{"12": 1, "21": "-1"}')
    assert f == poly("[x1,x2]")


def test_substitute_identity_renumbers():
    f = poly("x1*x2*x3 - x3*x1*x2")
    g = substitute_identity(f, 1)
    assert g == poly("x1*x2 - x2*x1")


def test_evaluate_matches_ast():
    rng = random.Random(5)
    text = "[x1,x2]*x3 + 2*x3*[x2,x1]"
    args = [random_matrix(rng, 3) for _ in range(3)]
    assert evaluate(poly(text), args) == evaluate(parse(text), args)
    a, b, c = args
    assert evaluate(parse(text), args) == commutator(a, b) @ c - (c @ commutator(a, b)).scale(2)


def _asts(depth=3):
    leaves = st.one_of(st.builds(Var, st.integers(1, 4)), st.builds(Num, st.integers(0, 9)))
    return st.recursive(
        leaves,
        lambda kids: st.one_of(
            st.builds(Add, kids, kids),
            st.builds(Mul, kids, kids),
            st.builds(Neg, kids),
            st.builds(Bracket, kids, kids),
        ),
        max_leaves=8,
    )


@settings(max_examples=200)
@given(_asts())
def test_print_parse_same_expansion(ast):
    assert _nc_expand(parse(print_ast(ast))) == _nc_expand(ast)


@settings(max_examples=200)
@given(_asts())
def test_printed_text_is_a_fixed_point(ast):
    parsed = parse(print_ast(ast))
    assert parse(print_ast(parsed)) == parsed


@pytest.mark.parametrize(
    "text", ["x1 - (x2 - x3)", "(x1 + x2)*x3", "-[x1, x2*x3]", "1/2*x1 + -x2", "((x1))"]
)
def test_parsed_ast_roundtrip(text):
    ast = parse(text)
    assert parse(print_ast(ast)) == ast


@given(st.dictionaries(st.permutations([1, 2, 3]).map(tuple), st.integers(-5, 5)))
def test_text_roundtrip(coeffs):
    f = MultilinearPoly(3, {w: Fraction(c) for w, c in coeffs.items()})
    assert load_poly(to_text(f)) == f or f.is_zero()


def test_evaluate_identity_args():
    f = poly("x1*x2*x3*x4 + 2*x2*x1*x3*x4")
    i = Matrix.identity(3)
    d = Matrix([[1, 2, 0], [0, 1, 0], [0, 0, 5]])
    assert evaluate(f, [d, i, i, i]) == d.scale(3)
