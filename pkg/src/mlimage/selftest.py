"""Seeded property suites behind ``mlimage selftest``.

Each suite draws its own ``random.Random`` from (seed, suite name), so the
report depends only on the arguments.
"""
from __future__ import annotations

import json
import random
from fractions import Fraction

from . import decompose as dec
from . import randgen as rg
from . import witness as wt
from .canon import jordanize, zero_diagonalize
from .errors import NotSupported
from .freepoly import CENTRAL2_TEXT, PROP1_TEXT, evaluate, poly
from .matrix import Matrix, commutator, inverse

PRODUCT_PLANS = (dec.ProductCase, dec.SpecialCentralLike)


def _innermost(plan):
    while isinstance(plan, dec.PartialReduction):
        plan = plan.inner
    return plan


def master_instance(rng: random.Random, n: int):
    """(f, D) drawn from the mixed polynomial families, with a target suited to the branch."""
    family = rng.choice(["map", "map0", "proper", "proper_products", "named"])
    if family == "map":
        f = rg.random_multilinear(rng)
    elif family == "map0":
        f = rg.random_multilinear(rng, coeff_sum_zero=True)
    elif family == "proper":
        f = rg.random_proper(rng)
    elif family == "proper_products":
        f = rg.random_proper(rng, lie_part=False)
    else:
        named = rg.named_polynomials()
        f = named[rng.choice(sorted(named))]
    plan = _innermost(dec.classify(f))
    if isinstance(plan, dec.Surjective):
        d = rg.random_matrix(rng, n)
    elif isinstance(plan, PRODUCT_PLANS):
        if rng.random() < 0.5:
            d = rg.random_bidiagonal(rng, n).to_matrix()
        else:
            d = rg.random_split_spectrum(rng, n)
    else:
        d = rg.random_trace_zero(rng, n)
    return family, f, d


def _suite_master(rng, trials, nmin, nmax):
    counts = _counts()
    for _ in range(trials):
        n = rng.randint(nmin, nmax)
        _, f, d = master_instance(rng, n)
        try:
            report = wt.synthesize(f, d, seed=rng.randrange(2**31))
        except NotSupported:
            counts["skipped"] += 1
            continue
        _tally(counts, report.verified)
    return counts


def _suite_shift(rng, trials, nmin, nmax):
    counts = _counts()
    for _ in range(trials):
        n = rng.randint(2, 8)
        t = rg.random_bidiagonal(rng, n)
        b = wt.lemma1_solve(t)
        _tally(counts, commutator(wt.shift_matrix(n), b) == t.to_matrix())
    return counts


LAMBDAS = (Fraction(0), Fraction(1), Fraction(-2), None, Fraction(5, 3))


def _suite_product(rng, trials, nmin, nmax):
    counts = _counts()
    for k in range(trials):
        n = rng.randint(max(nmin, 3), max(nmax, 3))
        lam = LAMBDAS[k % len(LAMBDAS)]
        lam = Fraction(1, n - 1) if lam is None else lam
        t = rg.random_bidiagonal(rng, n)
        a, b, c = wt.lemma2_construct(lam, t, rng)
        ab, ac = commutator(a, b), commutator(a, c)
        _tally(counts, ab @ ac + (ac @ ab).scale(lam) == t.to_matrix())
    return counts


def _suite_chains(rng, trials, nmin, nmax):
    counts = _counts()
    for _ in range(trials):
        n = rng.randint(max(nmin, 3), max(nmax, 3))
        low = rg.random_bidiagonal(rng, n, "lower")
        a, b, c = wt.lemma2a_construct(low)
        ab, ac = commutator(a, b), commutator(a, c)
        ok = ab @ ac - ac @ ab == low.to_matrix()
        up = rg.random_bidiagonal(rng, n)
        a, b, c = wt.lemma3_construct(up)
        ok = ok and commutator(a, commutator(commutator(a, b), commutator(a, c))) == up.to_matrix()
        scale = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
        ws = wt.prop1_witnesses(up, scale)
        ok = ok and evaluate(poly(PROP1_TEXT), list(ws)).scale(scale) == up.to_matrix()
        _tally(counts, ok)
    return counts


def _suite_central_like_identity(rng, trials, nmin, nmax):
    counts = _counts()
    f = poly(PROP1_TEXT)
    for _ in range(trials):
        n = rng.choice([3, 4])
        a, b, c = (rg.random_matrix(rng, n, -3, 3) for _ in range(3))
        lhs = evaluate(f, [a, a @ a, b, c])
        _tally(counts, lhs == commutator(a, commutator(commutator(a, b), commutator(a, c))))
    return counts


def _suite_decompose(rng, trials, nmin, nmax):
    counts = _counts()
    for _ in range(trials):
        f = rg.random_proper(rng, lie_part=rng.random() < 0.5)
        d = dec.proper_decompose(f)
        _tally(counts, d.reconstruct() == f)
    return counts


def _suite_lie(rng, trials, nmin, nmax):
    counts = _counts()
    gens = dec.hall_generators(4)[:3] + dec.hall_generators(3)
    for k in range(trials):
        n = rng.randint(max(nmin, 3), max(nmax, 3))
        f = gens[k % len(gens)]
        d = rg.random_zero_diagonal(rng, n)
        report = wt.synthesize(f, d)
        _tally(counts, report.verified and report.conjugator == Matrix.identity(n))
    return counts


def _suite_canon(rng, trials, nmin, nmax):
    counts = _counts()
    for _ in range(trials):
        n = rng.randint(2, max(nmax, 3))
        d = rg.random_trace_zero(rng, n)
        z = zero_diagonalize(d)
        ok = not any(z.T.diagonal()) and z.P @ d @ z.P_inv == z.T
        if n >= 2 and rng.random() < 0.5:
            e, _ = rg.random_quadratic_spectrum(rng, max(n, 3))
        else:
            e = rg.random_split_spectrum(rng, n)
        j = jordanize(e)
        ok = ok and j.P @ e @ inverse(j.P) == j.T
        _tally(counts, ok)
    return counts


def _suite_shoda(rng, trials, nmin, nmax):
    counts = _counts()
    for _ in range(trials):
        n = rng.randint(2, 6)
        d = rg.random_trace_zero(rng, n)
        x, y = wt.two_var_witnesses(Fraction(1), d)
        _tally(counts, commutator(x, y) == d and x.radicand is None and y.radicand is None)
    return counts


def _suite_central(rng, trials, nmin, nmax):
    counts = _counts()
    f = poly(CENTRAL2_TEXT)
    for _ in range(trials):
        args = [rg.random_matrix(rng, 2) for _ in range(4)]
        v = evaluate(f, args)
        _tally(counts, v[0, 1] == 0 and v[1, 0] == 0 and v[0, 0] == v[1, 1])
    return counts


SUITES = {
    "master": _suite_master,
    "shift_commutator": _suite_shift,
    "product": _suite_product,
    "chains": _suite_chains,
    "central_like_identity": _suite_central_like_identity,
    "decompose": _suite_decompose,
    "lie": _suite_lie,
    "canon": _suite_canon,
    "shoda": _suite_shoda,
    "central_n2": _suite_central,
}


def _counts():
    return {"passed": 0, "failed": 0, "skipped": 0}


def _tally(counts, ok):
    counts["passed" if ok else "failed"] += 1


def run_selftest(seed: int = 0, trials: int = 200, nmin: int = 3, nmax: int = 6, suites=None) -> dict:
    results = {}
    for name in suites or SUITES:
        rng = random.Random(f"{seed}/{name}")
        results[name] = SUITES[name](rng, trials, nmin, nmax)
    return {
        "seed": seed,
        "trials": trials,
        "nmin": nmin,
        "nmax": nmax,
        "suites": results,
        "all_passed": all(c["failed"] == 0 for c in results.values()),
    }


def format_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
