from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from barely.exact import (
    MPoly,
    PolyAQ,
    PolyQ,
    QSeries,
    RatFunAQ,
    alternant,
    cyclotomic,
    pochhammer,
    poly_gcd,
    q_binomial,
    q_pochhammer,
    q_simplex_integrate,
    simplex_integrate,
)

ints = st.integers(-5, 5)
polys = st.builds(PolyQ, st.lists(ints, max_size=6), st.integers(-3, 3))
points = st.fractions(min_value=Fraction(1, 7), max_value=3).filter(lambda x: x != 0)


def test_polyq_basics():
    p = PolyQ([1, 2, 0, -1], low=-1)
    assert str(p) == "q^-1 + 2 - q^2"
    assert p.low == -1 and p.high == 2
    assert p.coeff(0) == 2 and p.coeff(7) == 0
    assert PolyQ([0, 0]).is_zero()
    assert PolyQ([1, -1]) * PolyQ([1, 1]) == PolyQ([1, 0, -1])


def test_q_binomial_values():
    assert q_binomial(4, 2) == PolyQ([1, 1, 2, 1, 1])
    assert q_binomial(5, 0) == PolyQ.const(1)
    assert q_binomial(6, 3).at_one() == 20


def test_q_pochhammer():
    # (q; q)_3 = (1 - q)(1 - q^2)(1 - q^3)
    assert q_pochhammer(1, 3) == PolyQ([1, -1]) * PolyQ([1, 0, -1]) * PolyQ([1, 0, 0, -1])


def test_cyclotomic():
    assert cyclotomic(1) == PolyQ([-1, 1])
    assert cyclotomic(6) == PolyQ([1, -1, 1])
    prod = PolyQ.const(1)
    for k in (1, 2, 3, 6):
        prod = prod * cyclotomic(k)
    assert prod == PolyQ([-1, 0, 0, 0, 0, 0, 1])


def test_poly_gcd():
    a = PolyQ([1, 0, -1])
    b = PolyQ([1, -1]) * PolyQ([2, 3])
    g = poly_gcd(a, b)
    assert g.exact_div(PolyQ([1, -1])) is not None
    assert g.degree() == 1


@settings(max_examples=60, deadline=None)
@given(polys, polys, points)
def test_polyq_evaluation_is_a_ring_map(p, r, x):
    assert (p * r)(x) == p(x) * r(x)
    assert (p + r)(x) == p(x) + r(x)
    assert (p - p).is_zero()


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_polyq_exact_division(p, r):
    if r.is_zero():
        return
    assert (p * r).exact_div(r) == p


def test_ratfun_equality_is_cross_multiplication():
    one_minus_q = PolyAQ.one_minus(0, 1)
    r = RatFunAQ(PolyAQ.one_minus(1, 2) * one_minus_q, one_minus_q)
    assert r == RatFunAQ(PolyAQ.one_minus(1, 2))
    assert str(r) == "1 - a*q^2"
    with pytest.raises(TypeError):
        hash(r)


def test_ratfun_reduced_display():
    r = RatFunAQ(PolyAQ.from_q(PolyQ([1, 1])), PolyAQ.from_q(PolyQ([1, 0, -1])))
    assert str(r.reduced()) == "1 / (1 - q)"
    assert r.reduced() == r


def test_ratfun_json_and_limit():
    r = RatFunAQ(PolyAQ.from_q(PolyQ([1, 1, 1])), PolyAQ.from_q(PolyQ([1, 1])))
    assert r.limit_q1().as_fraction() == Fraction(3, 2)
    js = RatFunAQ(PolyAQ.mono(1, 2, 3)).to_json()
    assert js == {"num": [[1, 2, 3]], "den": [[0, 0, 1]]}


@settings(max_examples=40, deadline=None)
@given(polys, polys.filter(bool), st.integers(1, 4), points)
def test_ratfun_evaluation(p, r, ai, x):
    f = RatFunAQ(PolyAQ.from_q(p), PolyAQ.from_q(r))
    if r(x) == 0:
        return
    assert f(ai, x) == p(x) / r(x)
    assert (f * f)(ai, x) == f(ai, x) ** 2


def test_pochhammer():
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(-2, 3) == 0
    assert pochhammer(5, 0) == 1
    with pytest.raises(ValueError):
        pochhammer(1, -1)


def test_simplex_integral_hand_value():
    # integral of x2^2 - x1^2 over 0 <= x1 <= x2 <= 1 is 1/6
    assert simplex_integrate(alternant([0, 2])) == Fraction(1, 6)
    x = MPoly.var(1, 0)
    assert simplex_integrate(x) == Fraction(1, 2)


def test_q_integral_tends_to_ordinary_integral():
    p = alternant([0, 3]) + MPoly.var(2, 0) * 2
    assert q_simplex_integrate(p).limit_q1().as_fraction() == simplex_integrate(p)


def test_alternant_is_antisymmetric():
    a = alternant([0, 1, 3])
    assert a.evaluate([2, 2, 5]) == 0
    assert a.evaluate([1, 2, 3]) == -a.evaluate([2, 1, 3])


def test_qseries_inverse():
    s = QSeries([1, -1], 6)
    assert s.inverse() == QSeries([1] * 7, 6)
    assert s * s.inverse() == QSeries([1], 6)
