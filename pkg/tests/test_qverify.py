from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from barely.exact import MPoly, QSeries, alternant
from barely.qverify import (
    CLASSICAL,
    SHAPE_IDENTITIES,
    HyperSpec,
    check_bijection,
    check_gf_alternant,
    check_identity,
    check_integral_formulas,
    check_lemma_gf,
    check_lemmas,
    check_ssyt_gf,
    hyper_sum,
    hyper_terms,
)
from barely.qverify.identities import (
    balanced_corner_terms,
    bailey,
    dougall,
    partial_fraction_specialization,
    partial_fraction_terms,
    partial_fractions,
    q_4phi3_sum,
    q_8phi7_sum,
    trapezoid_4f3,
    trapezoid_corners,
    watson,
)
from barely.qverify.qhyper import QTerm, compare_sampled, degree_bound
from barely.shapes import DomainError, strict_partitions


# -- plain hypergeometric sums ------------------------------------------------------


def test_hyper_sum_edge_cases():
    assert hyper_sum(HyperSpec.make([], [], 0)) == 0
    assert hyper_sum(HyperSpec.make([3], [5], 1, prefactor=Fraction(7, 2))) == Fraction(7, 2)
    spec = HyperSpec.make([Fraction(1, 2), 1, -1, -1], [1, 2, -1, Fraction(-1, 2)], 2)
    assert hyper_terms(spec) == [1, Fraction(1, 2)]


def test_zero_denominator_in_range():
    with pytest.raises(DomainError):
        hyper_sum(HyperSpec.make([1], [-1], 3))


def test_shape_identity_examples():
    c = check_identity("delta-sum-corners", {"a": 1, "d": 5, "e": 1})
    assert c.lhs == c.rhs == 1
    c = check_identity("trapezoid-corners", {"m": 0, "n": 1})
    assert c.lhs == c.rhs == Fraction(1, 6)
    c = trapezoid_4f3(3, 2)
    assert c.lhs == c.rhs == Fraction(3, 2)
    assert c.to_json() == {"name": "trapezoid-4f3", "params": {"N": 3, "n": 2}, "lhs": "3/2", "rhs": "3/2", "equal": True}


def test_identity_constraints():
    with pytest.raises(DomainError):
        check_identity("delta-sum-corners", {"a": 1, "d": 1, "e": 1})
    with pytest.raises(DomainError):
        trapezoid_4f3(3, 3)
    with pytest.raises(DomainError):
        check_identity("no-such-identity", {})


def test_classical_examples():
    c = dougall(1, 2, 3, 0)
    assert c.lhs == c.rhs == 1
    c = bailey(1, -2, 1)
    assert c.equal and c.rhs == Fraction(3, 2)
    with pytest.raises(DomainError):
        dougall(1, 2, 3, 4)


def test_every_identity_name_is_addressable():
    assert set(SHAPE_IDENTITIES).isdisjoint(CLASSICAL)
    assert {"watson", "dougall", "bailey", "q-4phi3-sum", "q-8phi7-sum"} <= set(CLASSICAL)


@pytest.mark.parametrize("comp,n", [((1,), 3), ((2, 1), 5), ((1, 1, 1), 6), ((3,), 8)])
def test_partial_fractions_specialize_to_corner_terms(comp, n):
    b, c, u = partial_fraction_specialization(comp, n)
    assert partial_fraction_terms(b, c, u) == balanced_corner_terms(comp, n)
    assert sum(balanced_corner_terms(comp, n)) == 1


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 5).flatmap(
        lambda k: st.tuples(
            st.lists(st.fractions(-6, 6, max_denominator=4), min_size=k, max_size=k, unique=True),
            st.lists(st.fractions(-6, 6, max_denominator=4), min_size=k - 1, max_size=k - 1),
            st.fractions(-9, 9, max_denominator=5),
        )
    )
)
def test_partial_fractions_random(args):
    b, c, u = args
    # pairwise u - b_i - b_j must not vanish either
    if any(u - x - y == 0 for i, x in enumerate(b) for j, y in enumerate(b) if i != j):
        return
    assert partial_fractions(b, c, u).equal


# -- sampled q-identities -----------------------------------------------------------------


def one_plus(c, e):
    return (Fraction(-c), Fraction(e))


def test_sampled_comparison_is_sound():
    # (1 - q^2) / (1 - q) = 1 + q, and not 1 + q^2
    lhs = [QTerm(Fraction(1), Fraction(0), ((Fraction(1), Fraction(2)),), ((Fraction(1), Fraction(1)),))]
    good = [QTerm(Fraction(1), Fraction(0), (one_plus(1, 1),), ())]
    bad = [QTerm(Fraction(1), Fraction(0), (one_plus(1, 2),), ())]
    assert compare_sampled(lhs, good).equal
    cmp = compare_sampled(lhs, bad)
    assert not cmp.equal
    assert len(compare_sampled(lhs, good).points) == degree_bound(lhs, good) + 1


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.tuples(st.integers(-3, 3).filter(bool), st.integers(0, 4)), max_size=3),
    st.lists(st.tuples(st.integers(-3, 3).filter(bool), st.integers(0, 4)), max_size=3),
)
def test_sampled_comparison_matches_polynomial_identity(f, g):
    # products of (1 - c q^e) agree exactly when their multisets of factors do
    def term(fs):
        return [QTerm(Fraction(1), Fraction(0), tuple((Fraction(c), Fraction(e)) for c, e in fs), ())]

    def expand(fs):
        from barely.exact import PolyQ

        p = PolyQ.const(1)
        for c, e in fs:
            p = p * (PolyQ.const(1) - PolyQ.monomial(e, c))
        return p

    assert compare_sampled(term(f), term(g)).equal == (expand(f) == expand(g))


def test_watson_sample():
    c = watson((1, 4), (2, 1), (3, -1), (Fraction(1, 5), 2), (Fraction(7, 2), 0), 2)
    assert c.equal


@pytest.mark.parametrize("n", [1, 2])
def test_q_4phi3_sum(n):
    assert q_4phi3_sum((Fraction(2, 3), 1), (3, 2), n).equal


def test_q_8phi7_sum_integer_powers():
    assert q_8phi7_sum((1, -7), (1, -4), 1).equal


def test_degenerate_specialization_rejected():
    with pytest.raises(DomainError):
        q_8phi7_sum((1, 0), (1, 0), 1)


# -- generating functions and integrals --------------------------------------------------


def test_gf_examples():
    assert check_gf_alternant((2, 1), (1, 0), 6).equal
    c = check_gf_alternant((2,), (0,), 4)
    assert c.equal and c.lhs == QSeries([1] * 5, 4)
    c = check_gf_alternant((3, 1), (1, 1), 8)
    assert c.equal and c.lhs == QSeries([], 8)


def test_gf_rejects_bad_nu():
    with pytest.raises(DomainError):
        check_gf_alternant((2, 1), (0, 1), 4)
    with pytest.raises(DomainError):
        check_gf_alternant((2, 1), (1, 1, 1), 4)


def test_lemma_gf_on_alternants():
    assert check_lemma_gf(alternant([0, 2]), 10).equal
    assert check_lemma_gf(MPoly.var(2, 0) * MPoly.var(2, 1), 10).equal


def test_integral_examples():
    checks = {(c.name, c.i): c for c in check_integral_formulas((3, 1))}
    assert checks[("ssyt-integral", None)].rhs == 2
    assert checks[("ssyt-integral-extended", 1)].equal
    assert all(c.equal for c in checks.values())
    (c,) = [x for x in check_integral_formulas((2,)) if x.name == "ssyt-integral"]
    assert c.lhs == c.rhs == 1


@pytest.mark.parametrize("lam", [lam for n in range(1, 8) for lam in strict_partitions(n)])
def test_ssyt_gf(lam):
    assert check_ssyt_gf(lam, 12).equal


# -- bijections ----------------------------------------------------------------------


@pytest.mark.parametrize("lam", [lam for n in range(1, 9) for lam in strict_partitions(n)])
def test_lemmas(lam):
    for c in check_lemmas(lam):
        assert c.equal, c.to_json()


def test_bijection_json():
    js = check_bijection("k1", (3, 2, 1)).to_json()
    assert js["name"] == "k1" and js["equal"]
    assert all(s["domain"] == s["images"] == s["target"] for s in js["steps"])
    with pytest.raises(DomainError):
        check_bijection("k3", (3, 1))
