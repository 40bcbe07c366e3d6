from collections import Counter
from fractions import Fraction

import pytest

from barely.aq import (
    AqParams,
    aq_ddeg_sum,
    aq_down_degree,
    aq_expect,
    aq_generating,
    aq_number,
    aq_weight,
    conjecture_product,
    conjecture_product_alt,
    cover_counts,
    q_expect,
    rank_counts,
    rectangle_generating,
    verify_conjecture,
)
from barely.cde import expect_x
from barely.exact import PolyAQ, RatFunAQ
from barely.shapes import STRAIGHT, DomainError, partitions


def poly(*terms):
    """PolyAQ from (coef, a-exponent, q-exponent) triples."""
    return PolyAQ({(i, j): c for c, i, j in terms})


def om(i, j):
    return PolyAQ.one_minus(i, j)


def frac(num, den, qshift=0):
    return RatFunAQ(num.shift(0, max(qshift, 0)), den.shift(0, max(-qshift, 0)))


def test_weights_and_numbers():
    assert aq_weight(0, 0) == RatFunAQ(1)
    assert aq_weight(1, 0) == frac(om(1, 3), om(1, 1), -1)
    assert aq_number(1, 5) == RatFunAQ(1)
    assert aq_number(4, 3) == frac(om(0, 4) * om(1, 7), om(0, 1) * om(1, 4), -3)
    with pytest.raises(DomainError):
        aq_weight(-1, 0)


def test_cover_weights():
    p = AqParams.of((4, 2))
    assert (p.w, p.ell, p.d, p.cover_shift, p.rank_shift) == (4, 2, 2, 3, 4)
    assert aq_down_degree((), p) == RatFunAQ(0)
    assert aq_down_degree((1,), p) == RatFunAQ(1)
    assert aq_down_degree((2, 1), p) == aq_weight(2, 3) + aq_weight(4, 3)
    assert aq_down_degree((1,), AqParams.of((1,))) == RatFunAQ(1)


def test_generating_function_of_one_cell():
    assert aq_generating((1,)) == frac(poly((1, 0, 0), (1, 0, 1)) * om(1, 3), om(1, 2), -1)


# weight multiplicities for three small shapes
COUNTS = {
    (4, 2): (
        {0: 1, 1: 1, 2: 2, 3: 3, 4: 3, 5: 3, 6: 2, 7: 1},
        {0: 1, 1: 1, 2: 2, 3: 2, 4: 3, 5: 2, 6: 1},
    ),
    (2, 2, 1, 1): (
        {0: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 2, 7: 1, 8: 2, 9: 2, 10: 1, 11: 2, 13: 1},
        {0: 1, 2: 1, 4: 2, 6: 2, 8: 3, 10: 2, 12: 1},
    ),
    (3, 2, 1): (
        {0: 1, 1: 1, 2: 3, 3: 3, 4: 5, 5: 4, 6: 3, 7: 1},
        {0: 1, 1: 1, 2: 2, 3: 3, 4: 3, 5: 3, 6: 1},
    ),
}


@pytest.mark.parametrize("lam", list(COUNTS))
def test_weight_multiplicities(lam):
    cover, rank = COUNTS[lam]
    assert cover_counts(lam) == Counter(cover)
    assert rank_counts(lam) == Counter(rank)


SPARSE_42 = poly((1, 0, 0), (1, 0, 1), (1, 0, 2), (1, 0, 4), (-1, 1, 11), (-1, 1, 13), (-1, 1, 14), (-1, 1, 15))
SPARSE_321 = poly(
    (1, 0, 0), (2, 0, 1), (1, 0, 2), (2, 0, 3), (1, 0, 5),
    (-1, 1, 10), (-2, 1, 12), (-1, 1, 13), (-2, 1, 14), (-1, 1, 15),
)
SPARSE_2211 = poly((1, 0, 0), (1, 0, 2), (1, 0, 4), (1, 0, 8), (-1, 1, 17), (-1, 1, 21), (-1, 1, 23), (-1, 1, 25))


def test_intermediate_displays_42():
    assert aq_ddeg_sum((4, 2)) == frac(om(0, 4) * SPARSE_42, om(0, 1) * om(1, 4), -7)
    assert aq_generating((4, 2)) == frac(om(0, 3) * SPARSE_42, om(0, 1) * om(1, 5), -6)


def test_intermediate_displays_2211():
    assert aq_ddeg_sum((2, 2, 1, 1)) == frac(om(0, 4) * om(0, 6) * SPARSE_2211, om(0, 2) * om(0, 3) * om(1, 4), -13)
    assert aq_generating((2, 2, 1, 1)) == frac(om(0, 6) * SPARSE_2211, om(0, 2) * om(1, 5), -12)


def test_intermediate_displays_321():
    assert aq_ddeg_sum((3, 2, 1)) == frac(om(0, 3) * SPARSE_321, om(0, 1) * om(1, 3), -7)
    assert aq_generating((3, 2, 1)) == frac(om(0, 2) * SPARSE_321, om(0, 1) * om(1, 4), -6)


def test_expectation_examples():
    e42 = frac(om(0, 4) * om(1, 5), om(0, 3) * om(1, 4), -1)
    assert aq_expect((4, 2)) == e42 == aq_number(4, 3) / aq_number(3, 4)
    assert aq_expect((2, 2, 1, 1)) == e42
    e321 = frac(om(0, 3) * om(1, 4), om(0, 2) * om(1, 3), -1)
    assert aq_expect((3, 2, 1)) == e321 == aq_number(3, 2) / aq_number(2, 3)


def test_expectation_display_is_reduced():
    assert str(aq_expect((3, 2, 1))) == "(1 + q + q^2 - a*q^4 - a*q^5 - a*q^6) / (q + q^2 - a*q^4 - a*q^5)"


@pytest.mark.parametrize("lam", [(4, 2), (2, 2, 1, 1), (3, 2, 1)])
def test_conjecture_on_examples(lam):
    v = verify_conjecture(lam)
    assert v.balanced and v.equal and v.forms_agree and v.conjugate_equal


def test_unbalanced_shape_is_reported_not_asserted():
    v = verify_conjecture((3, 1))
    assert not v.balanced
    assert v.equal is False


@pytest.mark.parametrize("w,ell", [(w, ell) for w in range(1, 5) for ell in range(1, 5)])
def test_rectangle_product(w, ell):
    assert aq_generating((w,) * ell) == rectangle_generating(w, ell)
    assert conjecture_product((w,) * ell) == conjecture_product_alt((w,) * ell)


@pytest.mark.parametrize("lam", [lam for n in range(1, 9) for lam in partitions(n)])
def test_specializations(lam):
    e = aq_expect(lam)
    # q -> 1 leaves a rational function of a that is constant
    assert e.limit_q1().as_fraction() == expect_x(lam, STRAIGHT)
    # a -> infinity recovers the plain q-weighted ratio
    assert e.a_leading_ratio() == q_expect(lam)


def test_empty_shape_rejected():
    with pytest.raises(DomainError):
        AqParams.of(())
