import random
from fractions import Fraction

import pytest

from mlimage import decompose as dec
from mlimage.errors import NotProper
from mlimage.freepoly import PROP1_TEXT, MultilinearPoly, coeff_sum, poly, substitute_identity
from mlimage.matrix import null_space, rank
from mlimage.randgen import random_proper

ONE = Fraction(1)


@pytest.mark.parametrize("m, expected", [(4, 9), (3, 2), (2, 1)])
def test_generator_rank_is_derangement_count(m, expected):
    gens = dec.hall_generators(m)
    assert len(gens) == expected
    assert rank([g.vector() for g in gens]) == expected


@pytest.mark.parametrize("m", [2, 3, 4])
def test_generators_are_proper(m):
    for g in dec.hall_generators(m):
        assert coeff_sum(g) == 0
        assert all(substitute_identity(g, i).is_zero() for i in range(1, m + 1))


def test_single_generators():
    d = dec.proper_decompose(poly("[[[x2,x1],x3],x4]"))
    assert d.values() == [ONE] + [Fraction(0)] * 8
    d = dec.proper_decompose(poly("[x1,x2]*[x3,x4]"))
    assert d.c("1234") == 1 and sum(abs(v) for v in d.values()) == 1


def test_bracket_of_commutators():
    d = dec.proper_decompose(poly("[[x4,x1],[x3,x2]]"))
    assert d.z == (0, 0, 0)
    assert d.c("1423") == 1 and d.c("2314") == -1
    assert d.reconstruct() == poly("[[x4,x1],[x3,x2]]")


def test_central_like_coordinates():
    d = dec.proper_decompose(poly(PROP1_TEXT))
    expected = dict(zip(dec.PRODUCT_KEYS, (1, -1, 1, 1, -1, 1)))
    assert all(d.c(k) == v for k, v in expected.items())
    assert d.z == (0, 0, 0)


def test_not_proper():
    with pytest.raises(NotProper):
        dec.proper_decompose(poly("x1*x2*x3*x4 - x2*x1*x3*x4 + x1*x2*x4*x3"))


def test_reconstruction_random():
    rng = random.Random(7)
    for _ in range(50):
        f = random_proper(rng)
        assert dec.proper_decompose(f).reconstruct() == f


def test_pattern_pairs_single_product():
    d = dec.proper_decompose(poly("[x1,x2]*[x3,x4]"))
    pairs = [(p.alpha, p.beta) for p in dec.pattern_pairs(d)]
    assert pairs == [(0, 0), (1, 0), (-1, 0), (-1, 0), (1, 0), (0, 0)]


def test_pattern_matrix_null_space():
    (v,) = null_space(dec.pattern_matrix(), 6)
    v = [x / v[0] for x in v]
    assert v == [1, -1, 1, 1, -1, 1]


@pytest.mark.parametrize(
    "text, path",
    [
        ("x1*x2*x3*x4", ["Surjective(s=1)"]),
        ("[[[x2,x1],x3],x4]", ["Lie4(i=1, z=1)"]),
        ("[x1,x2]*x3*x4", ["PartialReduction(slot=3)", "PartialReduction(slot=3)", "Commutator2(gamma=1)"]),
        ("[x1,x2]*[x3,x4]+[x3,x4]*[x1,x2]", ["ProductCase(pattern=ABAC, alpha=1, beta=1, lambda=1)"]),
    ],
)
def test_classify_paths(text, path):
    assert dec.tag_path(dec.classify(poly(text))) == path


def test_classify_central_like():
    plan = dec.classify(poly(PROP1_TEXT))
    assert isinstance(plan, dec.SpecialCentralLike) and plan.scale == 1


def test_lie_part_dominates():
    plan = dec.classify(poly("[[[x2,x1],x3],x4] - [x1,x3]*[x2,x4]"))
    assert isinstance(plan, dec.Lie4) and plan.index == 1


def test_minus_one_pattern_preferred():
    # [x1,x2][x1,x3]-style difference: the ABAC pair becomes (1,-1)
    f = poly("[x1,x2]*[x3,x4] - [x3,x4]*[x1,x2]")
    plan = dec.classify(f)
    assert isinstance(plan, dec.ProductCase) and plan.lam == -1


def test_zero_plan():
    assert isinstance(dec.classify(MultilinearPoly(4)), dec.Zero)
