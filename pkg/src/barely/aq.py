"""An a;q-weighted analogue of E(X) on lower intervals of Young's lattice.

Every weight W_{a q^s; q}(n) = (1 - a q^{s+1+2n}) q^{-n} / (1 - a q^{s+1})
with a fixed shift s shares its denominator, so a weighted sum is built
as one numerator polynomial over that denominator.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .exact import PolyAQ, RatFunAQ, q_binomial
from .interval import enumerate_interval, removable_rows
from .shapes import STRAIGHT, DomainError, check_shape, conjugate, is_balanced


@dataclass(frozen=True)
class AqParams:
    w: int
    ell: int
    d: int

    @classmethod
    def of(cls, lam: Sequence[int]) -> "AqParams":
        lam = check_shape(lam, STRAIGHT)
        if not lam:
            raise DomainError("the empty shape has no a;q parameters")
        w, ell = lam[0], len(lam)
        return cls(w, ell, gcd(w, ell))

    @property
    def cover_shift(self) -> int:
        return (self.w + self.ell) // self.d

    @property
    def rank_shift(self) -> int:
        return self.w * self.ell // self.d

    def exact(self, num: int) -> int:
        q, r = divmod(num, self.d)
        assert r == 0, f"{num} is not divisible by {self.d}"
        return q


def aq_weight(n: int, shift: int) -> RatFunAQ:
    """W_{a q^shift; q}(n)."""
    if n < 0:
        raise DomainError("weight index must be nonnegative")
    return RatFunAQ(PolyAQ.one_minus(1, shift + 1 + 2 * n).shift(0, -n), PolyAQ.one_minus(1, shift + 1))


def aq_number(n: int, shift: int, base: int = 1) -> RatFunAQ:
    """[n]_{a q^shift; q^base} = (1-p^n)(1-a q^shift p^n) / ((1-p)(1-a q^shift p)) p^{1-n}, p = q^base."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    t = base
    num = PolyAQ.one_minus(0, t * n) * PolyAQ.one_minus(1, shift + t * n)
    den = PolyAQ.one_minus(0, t) * PolyAQ.one_minus(1, shift + t)
    return RatFunAQ(num.shift(0, t * (1 - n)), den)


def weight_sum(counts: Counter, shift: int) -> RatFunAQ:
    """sum_n counts[n] W_{a q^shift; q}(n) as a single fraction."""
    num: dict = {}
    for n, c in counts.items():
        if n < 0:
            raise DomainError("weight index must be nonnegative")
        num[(0, -n)] = num.get((0, -n), 0) + c
        num[(1, shift + 1 + n)] = num.get((1, shift + 1 + n), 0) - c
    return RatFunAQ(PolyAQ(num), PolyAQ.one_minus(1, shift + 1))


def cover_argument(x: Sequence[int], s: int, params: AqParams) -> int:
    """Index n of the weight W(n) on the cover x -> x minus a cell of row s."""
    size = sum(x)
    return params.exact(params.w * (s - 1) + params.ell * (size - 1))


def cover_weight(x: Sequence[int], s: int, params: AqParams) -> RatFunAQ:
    x = check_shape(x, STRAIGHT)
    if not 1 <= s <= len(x) or (s - 1) not in removable_rows(x, STRAIGHT):
        raise DomainError(f"no cell of row {s} can be deleted from {x}")
    if len(x) > params.ell or x[0] > params.w:
        raise DomainError(f"{x} does not fit in a {params.w} by {params.ell} box")
    return aq_weight(cover_argument(x, s, params), params.cover_shift)


def aq_down_degree(x: Sequence[int], params: AqParams) -> RatFunAQ:
    x = check_shape(x, STRAIGHT)
    total = RatFunAQ(0)
    for i in removable_rows(x, STRAIGHT):
        total = total + cover_weight(x, i + 1, params)
    return total


def cover_counts(lam: Sequence[int]) -> Counter:
    """Multiplicity of each weight index over all covers in the interval."""
    params = AqParams.of(lam)
    out: Counter = Counter()
    for x in enumerate_interval(lam, STRAIGHT).elements:
        for i in removable_rows(x, STRAIGHT):
            out[cover_argument(x, i + 1, params)] += 1
    return out


def rank_counts(lam: Sequence[int]) -> Counter:
    """Multiplicity of each index l|x|/d over the interval."""
    params = AqParams.of(lam)
    out: Counter = Counter()
    for x in enumerate_interval(lam, STRAIGHT).elements:
        out[params.exact(params.ell * sum(x))] += 1
    return out


def aq_ddeg_sum(lam: Sequence[int]) -> RatFunAQ:
    """Sum of the weighted down-degrees over the interval."""
    return weight_sum(cover_counts(lam), AqParams.of(lam).cover_shift)


def aq_generating(lam: Sequence[int]) -> RatFunAQ:
    """R(lam | a; q)."""
    return weight_sum(rank_counts(lam), AqParams.of(lam).rank_shift)


def aq_expect(lam: Sequence[int]) -> RatFunAQ:
    return aq_ddeg_sum(lam) / aq_generating(lam)


def q_expect(lam: Sequence[int]) -> RatFunAQ:
    """The same ratio with every weight W(n) replaced by q^n."""

    def qsum(counts: Counter) -> PolyAQ:
        return PolyAQ({(0, n): c for n, c in counts.items()})

    return RatFunAQ(qsum(cover_counts(lam)), qsum(rank_counts(lam)))


def rectangle_generating(w: int, ell: int) -> RatFunAQ:
    """Product form of R((w^l) | a; q)."""
    d = gcd(w, ell)
    p = q_binomial(w + ell, ell).subs_power(ell // d)
    num = PolyAQ.from_q(p) * PolyAQ.one_minus(1, 1 + w * ell * (ell + 1) // d)
    den = PolyAQ.one_minus(1, 1 + w * ell // d)
    return RatFunAQ(num.shift(0, -(w * ell * ell // d)), den)


def conjecture_product(lam: Sequence[int]) -> RatFunAQ:
    """[wl/d]_{a q^{(w+l)/d}; q} / [(w+l)/d]_{a q^{wl/d}; q}."""
    p = AqParams.of(lam)
    return aq_number(p.rank_shift, p.cover_shift) / aq_number(p.cover_shift, p.rank_shift)


def conjecture_product_alt(lam: Sequence[int]) -> RatFunAQ:
    """[wl/d]_{a q; q^{(w+l)/d}} / [(w+l)/d]_{a q; q^{wl/d}}."""
    p = AqParams.of(lam)
    return aq_number(p.rank_shift, 1, p.cover_shift) / aq_number(p.cover_shift, 1, p.rank_shift)


@dataclass(frozen=True)
class AqVerdict:
    shape: tuple[int, ...]
    balanced: bool
    expect: RatFunAQ
    product: RatFunAQ
    equal: bool
    forms_agree: bool
    conjugate_equal: bool


def verify_conjecture(lam: Sequence[int]) -> AqVerdict:
    """Compare the weighted expectation with the product formula.

    Nothing is asserted: the product formula is only expected to hold for
    balanced shapes, and the verdict simply records what happened.
    """
    lam = check_shape(lam, STRAIGHT)
    e = aq_expect(lam)
    prod = conjecture_product(lam)
    return AqVerdict(
        shape=lam,
        balanced=is_balanced(lam),
        expect=e,
        product=prod,
        equal=e == prod,
        forms_agree=prod == conjecture_product_alt(lam),
        conjugate_equal=e == aq_expect(conjugate(lam)),
    )
