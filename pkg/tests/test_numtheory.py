from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, example, given, settings as hypothesis_settings
from hypothesis.strategies import composite, integers

from config.settings import settings
from src.arith import numtheory
from src.arith.errors import CapacityError, InvalidArgumentError
from src.arith.numtheory import (
    DependenceVerdict,
    GcdBoundInput,
    exponent_vector,
    gcd_bound,
    gcd_bound_exponent,
    gcd_special,
    isqrt,
    mult_dependence,
    perfect_square_root,
    pigeonhole_pair,
    product_form,
)


@pytest.mark.parametrize("n, expected", [(0, 0), (1, 1), (1106**2, 1106), (1106**2 + 1, 1106), (15, 3)])
def test_isqrt(n, expected):
    assert isqrt(n) == expected


@given(integers(min_value=0, max_value=10**200))
@example(10**100)
@example(2**256 - 1)
def test_isqrt_bracket(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) * (r + 1)


def test_isqrt_negative():
    with pytest.raises(InvalidArgumentError):
        isqrt(-1)


def test_perfect_square_root():
    assert perfect_square_root(49) == 7
    assert perfect_square_root(50) is None
    assert perfect_square_root(0) == 0
    assert perfect_square_root(1105 * 455 * 119) == 7735 == 65 * 17 * 7


@given(integers(min_value=1, max_value=10**60))
def test_perfect_square_root_neighbours(r):
    assert perfect_square_root(r * r) == r
    assert perfect_square_root(r * r + 1) is None


# Product forms

@pytest.mark.parametrize(
    "d, n, g, lam, x, y",
    [(2, 2, 3, 2, 9, 2), (2, 3, 23, 2, 12167, 12), (1, 7, 2, 2, 64, 1)],
)
def test_product_form(d, n, g, lam, x, y):
    pf = product_form(d, n, g)
    assert (pf.lambda_, pf.x, pf.y) == (lam, x, y)
    assert pf.ratio == (x, y)


@given(integers(min_value=2, max_value=300), integers(min_value=2, max_value=40), integers(min_value=1))
def test_product_form_invariants(g, n, d):
    d = d % (g - 1) + 1
    pf = product_form(d, n, g)
    assert pf.lambda_ * (pf.x - pf.y) == d * g**n - (d + g - 1)
    assert gcd(pf.x, pf.y) == 1
    assert pf.x > pf.y >= 1


def test_product_form_matches_products():
    # (g-1)·ab = d3·g^n3 - (d3+g-1) for the g=23 triple
    pf = product_form(2, 3, 23)
    assert pf.lambda_ * (pf.x - pf.y) == 22 * 65 * 17


@pytest.mark.parametrize("d, n, g", [(0, 2, 10), (10, 2, 10), (1, 1, 10), (1, 2, 1)])
def test_product_form_rejects(d, n, g):
    with pytest.raises(InvalidArgumentError):
        product_form(d, n, g)


# Pigeonhole pairs

@pytest.mark.parametrize(
    "m, n, X, expected",
    [(0, 1, 3, (0, 1)), (5, 7, 9, (-1, 1)), (100, 100, 100, (1, -1)), (3, 0, 3, (1, 0))],
)
def test_pigeonhole_pair(m, n, X, expected):
    assert pigeonhole_pair(m, n, X) == expected


def _check_pair(m, n, X, pair):
    u, v = pair
    assert (u, v) != (0, 0)
    assert max(abs(u), abs(v)) ** 2 <= X
    s = m * u + n * v
    assert 0 <= s and s * s <= 4 * X


def test_pigeonhole_pair_exists_small():
    for X in range(3, 31):
        for m in range(X + 1):
            for n in range(X + 1):
                if m or n:
                    _check_pair(m, n, X, pigeonhole_pair(m, n, X))


@pytest.mark.slow
def test_pigeonhole_pair_exists_exhaustive():
    for X in range(3, 101):
        for m in range(X + 1):
            for n in range(X + 1):
                if m or n:
                    _check_pair(m, n, X, pigeonhole_pair(m, n, X))


@given(integers(min_value=0, max_value=10**6), integers(min_value=0, max_value=10**6), integers(min_value=0, max_value=10**4))
def test_pigeonhole_pair_large(m, n, extra):
    assume(m or n)
    X = max(3, m, n) + extra
    _check_pair(m, n, X, pigeonhole_pair(m, n, X))


@pytest.mark.parametrize("m, n, X", [(0, 0, 5), (-1, 2, 5), (4, 2, 3), (1, 1, 2)])
def test_pigeonhole_pair_rejects(m, n, X):
    with pytest.raises(InvalidArgumentError):
        pigeonhole_pair(m, n, X)


# Multiplicative dependence

def test_exponent_vector():
    assert exponent_vector(9, 2) == {3: 2, 2: -1}
    assert exponent_vector(12167, 12) == {23: 3, 2: -2, 3: -1}


def test_mult_dependence_powers_of_two():
    dep = mult_dependence(4, 1, 8, 1)
    assert dep.verdict is DependenceVerdict.DEPENDENT
    assert (dep.gen_num, dep.gen_den, dep.exponents) == (2, 1, (2, 3))


def test_mult_dependence_square():
    dep = mult_dependence(9, 2, 81, 4)
    assert dep.dependent
    assert (dep.gen_num, dep.gen_den, dep.exponents) == (9, 2, (1, 2))


@pytest.mark.parametrize("x1, y1, x2, y2", [(2, 1, 3, 1), (9, 2, 27, 4), (12167, 12, 9, 2)])
def test_mult_dependence_independent(x1, y1, x2, y2):
    dep = mult_dependence(x1, y1, x2, y2)
    assert dep.verdict is DependenceVerdict.INDEPENDENT
    assert dep.gen_num is None and dep.exponents is None


@pytest.mark.parametrize("x1, y1", [(1, 1), (2, 3), (6, 4), (0, 1)])
def test_mult_dependence_rejects(x1, y1):
    with pytest.raises(InvalidArgumentError):
        mult_dependence(x1, y1, 2, 1)


def test_mult_dependence_capacity(monkeypatch):
    monkeypatch.setattr(settings, "trial_division_limit", 20)
    numtheory._factor.cache_clear()
    try:
        with pytest.raises(CapacityError):
            # 101 · 1000003, both prime and beyond the limit
            mult_dependence(101000303, 1, 2, 1)
    finally:
        numtheory._factor.cache_clear()


@given(
    integers(min_value=2, max_value=60),
    integers(min_value=1, max_value=59),
    integers(min_value=1, max_value=6),
    integers(min_value=1, max_value=6),
)
def test_mult_dependence_common_base(alpha, beta, r1, r2):
    assume(alpha > beta and gcd(alpha, beta) == 1)
    dep = mult_dependence(alpha**r1, beta**r1, alpha**r2, beta**r2)
    assert dep.dependent
    e1, e2 = dep.exponents
    assert Fraction(e1, e2) == Fraction(r1, r2)
    assert gcd(e1, e2) == 1
    assert (dep.gen_num**e1, dep.gen_den**e1) == (alpha**r1, beta**r1)
    assert (dep.gen_num**e2, dep.gen_den**e2) == (alpha**r2, beta**r2)


# gcd bounds

@pytest.mark.parametrize("X, expected", [(3, 11), (4, 12), (9, 17), (Fraction(9, 4), 10), (3.0, 11)])
def test_gcd_bound_exponent(X, expected):
    assert gcd_bound_exponent(X) == expected


def test_gcd_bound_examples():
    assert gcd_bound(GcdBoundInput(1, 1, 1, 1, 1, 1, g=2, X=3)) == 4096
    assert gcd_bound(GcdBoundInput(1, 1, 1, 1, 2, 2, g=10, X=4)) == 2 * 10**12
    assert gcd_bound(GcdBoundInput(1, 1, 1, 1, 3, 3, g=3, X=9)) == 2 * 3**17


def test_gcd_bound_input_C():
    assert GcdBoundInput(5, -108, 3, 89, 2, 2, g=104, X=3).C == 108


@pytest.mark.parametrize(
    "inp",
    [
        GcdBoundInput(0, 1, 1, 1, 1, 1, g=3, X=3),
        GcdBoundInput(1, 1, 1, 1, 0, 1, g=3, X=3),
        GcdBoundInput(1, 1, 1, 1, 5, 1, g=3, X=4),
        GcdBoundInput(1, 1, 1, 1, 1, 1, g=3, X=2.5),
        GcdBoundInput(1, 1, 1, 1, 1, 1, g=1, X=3),
    ],
)
def test_gcd_bound_rejects(inp):
    with pytest.raises(InvalidArgumentError):
        gcd_bound(inp)


def test_gcd_special_examples():
    assert gcd_special(1, 2, 5, 2, 5, 3, 3) == gcd(241, 49) == 1
    assert gcd_special(7, 16, 3, 7, 16, 3, 10) == 7 * 10**3 - 16
    # (g-1)·ab and (g-1)·ac for the g=104 triple share 103·292
    assert gcd(54604, 9344) == 292
    assert gcd_special(5, 108, 3, 89, 192, 2, 104) == 103 * 292


@composite
def gcd_special_instances(draw):
    g = draw(integers(min_value=2, max_value=50))
    span = 2 * (g - 1)
    coefficient = integers(min_value=-span, max_value=span).filter(bool)
    t1, w1, t2, w2 = (draw(coefficient) for _ in range(4))
    k1, k2 = (draw(integers(min_value=2, max_value=40)) for _ in range(2))
    return g, t1, w1, t2, w2, k1, k2


def _reduced(top, w):
    common = gcd(top, w)
    return top // common, w // common


@hypothesis_settings(max_examples=1000)
@given(gcd_special_instances())
@example((104, 5, 108, 89, 192, 3, 2))
@example((3, -4, 1, 1, -4, 40, 2))
def test_gcd_special_within_bound(instance):
    g, t1, w1, t2, w2, k1, k2 = instance
    # |t|·g^k >= g^2 > 2(g-1) >= |w|, so both ratios exceed 1
    x1, y1 = _reduced(abs(t1) * g**k1, abs(w1))
    x2, y2 = _reduced(abs(t2) * g**k2, abs(w2))
    assume(not mult_dependence(x1, y1, x2, y2).dependent)
    X = max(k1, k2, 3)
    delta = gcd_special(t1, w1, k1, t2, w2, k2, g)
    assert 1 <= delta <= gcd_bound(GcdBoundInput(t1, w1, t2, w2, k1, k2, g=g, X=X))
