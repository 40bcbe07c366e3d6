"""Terminating basic hypergeometric sums compared at sample points.

A parameter is a pair (c, e) standing for c * q^e, where c is rational and
e a multiple of 1/2.  Everything is evaluated at q = s^2 for rational s, so
half-integer powers of q stay rational.

Both sides of an identity are sums of terms of the form
    c * q^m * prod (1 - c_i q^{e_i}) / prod (1 - d_i q^{f_i}).
Clearing all denominators turns LHS - RHS into one Laurent polynomial in s
whose exponent range is known from the factor exponents alone.  If that
polynomial has span B, it has at most B nonzero roots, so vanishing at B+1
distinct nonzero points where no denominator vanishes proves the identity
for the specialized parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from ..shapes import DomainError

QParam = tuple[Fraction, Fraction]


def qp(c, e=0) -> QParam:
    e = Fraction(e)
    if (2 * e).denominator != 1:
        raise DomainError(f"exponent {e} is not a multiple of 1/2")
    return (Fraction(c), e)


def qmul(*ps: QParam) -> QParam:
    c, e = Fraction(1), Fraction(0)
    for pc, pe in ps:
        c *= pc
        e += pe
    return (c, e)


def qinv(p: QParam) -> QParam:
    if p[0] == 0:
        raise DomainError("cannot invert the zero parameter")
    return (1 / p[0], -p[1])


def qpow(p: QParam, k: int) -> QParam:
    return (p[0] ** k, p[1] * k)


def qsqrt(p: QParam) -> QParam:
    """A square root c^{1/2} q^{e/2}; c must be the square of a rational."""
    c, e = p
    if c <= 0:
        raise DomainError(f"no rational square root of {c}")
    rn, rd = _isqrt(c.numerator), _isqrt(c.denominator)
    if rn is None or rd is None:
        raise DomainError(f"{c} is not a rational square")
    return qp(Fraction(rn, rd), e / 2)


def _isqrt(n: int) -> int | None:
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def _is_one(p: QParam) -> bool:
    return p[0] == 1 and p[1] == 0


@dataclass(frozen=True)
class QTerm:
    """coef * q^exp * prod (1 - p) over num / prod (1 - p) over den."""

    coef: Fraction
    exp: Fraction
    num: tuple[QParam, ...] = ()
    den: tuple[QParam, ...] = ()

    def at(self, s: Fraction) -> Fraction:
        """Value at q = s^2; products are accumulated as integers."""
        u, v = s.numerator, s.denominator
        top, bot = _factor(self.coef, 2 * self.exp, u, v, monomial=True)
        for c, e in self.num:
            n, d = _factor(c, 2 * e, u, v)
            top *= n
            bot *= d
        for c, e in self.den:
            n, d = _factor(c, 2 * e, u, v)
            if n == 0:
                raise ZeroDivisionError(s * s)
            top *= d
            bot *= n
        return Fraction(top, bot)

    def den_zero(self, s: Fraction) -> bool:
        return any(_factor(c, 2 * e, s.numerator, s.denominator)[0] == 0 for c, e in self.den)


def _factor(c: Fraction, k: Fraction, u: int, v: int, monomial: bool = False) -> tuple[int, int]:
    """c s^k (monomial) or 1 - c s^k as an integer fraction, s = u/v."""
    k = int(k)
    if k >= 0:
        sn, sd = u**k, v**k
    else:
        sn, sd = v**-k, u**-k
    if monomial:
        return c.numerator * sn, c.denominator * sd
    return c.denominator * sd - c.numerator * sn, c.denominator * sd


def _range(factors: Sequence[QParam]) -> tuple[int, int]:
    """Exponent range in s of prod (1 - c s^{2e})."""
    lo = hi = 0
    for _, e in factors:
        k = int(2 * e)
        lo += min(0, k)
        hi += max(0, k)
    return lo, hi


def q_pochhammer_factors(x: QParam, base: Fraction, n: int) -> list[QParam]:
    """Factors of (x; q^base)_n."""
    return [(x[0], x[1] + base * i) for i in range(n)]


def qhyper_terms(
    num: Sequence[QParam],
    den: Sequence[QParam],
    base,
    z: QParam,
    prefactor: QTerm | None = None,
) -> list[QTerm]:
    """Terms of the balanced series r+1 phi r [num; den; q^base, z].

    The last numerator parameter must be q^{-N base}, which bounds the sum
    at N.  Every term up to N must have nonvanishing denominators; other
    numerator parameters may vanish earlier, which only zeroes terms.
    """
    base = Fraction(base)
    if len(num) != len(den) + 1:
        raise DomainError("expected r+1 numerator and r denominator parameters")
    c, e = num[-1]
    if c != 1 or e > 0 or (-e / base).denominator != 1:
        raise DomainError("series does not terminate")
    length = int(-e / base) + 1
    pre = prefactor or QTerm(Fraction(1), Fraction(0))
    out = []
    for j in range(length):
        tn = list(pre.num)
        td = list(pre.den)
        for x in num:
            tn += q_pochhammer_factors(x, base, j)
        for y in list(den) + [(Fraction(1), base)]:
            fs = q_pochhammer_factors(y, base, j)
            if any(_is_one(f) for f in fs):
                raise DomainError(f"denominator parameter {y} vanishes within the sum")
            td += fs
        if any(_is_one(f) for f in tn):
            continue
        out.append(QTerm(pre.coef * z[0] ** j, pre.exp + z[1] * j, tuple(tn), tuple(td)))
    return out


def product_term(num: Sequence[tuple[QParam, Fraction, int]], den: Sequence[tuple[QParam, Fraction, int]]) -> QTerm:
    """prod (x; q^b)_n / prod (y; q^b)_n from (x, b, n) triples."""
    tn: list[QParam] = []
    td: list[QParam] = []
    for x, b, n in num:
        tn += q_pochhammer_factors(x, Fraction(b), n)
    for y, b, n in den:
        fs = q_pochhammer_factors(y, Fraction(b), n)
        if any(_is_one(f) for f in fs):
            raise DomainError(f"denominator ({y}; q^{b})_{n} vanishes")
        td += fs
    return QTerm(Fraction(1), Fraction(0), tuple(tn), tuple(td))


def times(t: QTerm, terms: Sequence[QTerm]) -> list[QTerm]:
    return [
        QTerm(t.coef * u.coef, t.exp + u.exp, t.num + u.num, t.den + u.den) for u in terms
    ]


def degree_bound(lhs: Sequence[QTerm], rhs: Sequence[QTerm]) -> int:
    """Span in s of the numerator of LHS - RHS over the product of all denominators."""
    terms = list(lhs) + list(rhs)
    dens = [_range(t.den) for t in terms]
    dlo = sum(lo for lo, _ in dens)
    dhi = sum(hi for _, hi in dens)
    lo = hi = None
    for t, (tl, th) in zip(terms, dens):
        nl, nh = _range(t.num)
        m = int(2 * t.exp)
        a = m + nl + dlo - tl
        b = m + nh + dhi - th
        lo = a if lo is None else min(lo, a)
        hi = b if hi is None else max(hi, b)
    return 0 if lo is None else hi - lo


def sample_points() -> Iterator[Fraction]:
    """s = 2/3, 3/5, 4/7, ... (q = s^2), all distinct and in (1/2, 1)."""
    k = 1
    while True:
        k += 1
        yield Fraction(k, 2 * k - 1)


@dataclass(frozen=True)
class SampledComparison:
    bound: int
    points: tuple[Fraction, ...]
    lhs: tuple[Fraction, ...]
    rhs: tuple[Fraction, ...]

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def compare_sampled(lhs: Sequence[QTerm], rhs: Sequence[QTerm]) -> SampledComparison:
    bound = degree_bound(lhs, rhs)
    pts: list[Fraction] = []
    lv: list[Fraction] = []
    rv: list[Fraction] = []
    for s in sample_points():
        if len(pts) > bound:
            break
        if any(t.den_zero(s) for t in list(lhs) + list(rhs)):
            continue
        left = sum((t.at(s) for t in lhs), Fraction(0))
        right = sum((t.at(s) for t in rhs), Fraction(0))
        pts.append(s * s)
        lv.append(left)
        rv.append(right)
        if left != right:
            break
    return SampledComparison(bound, tuple(pts), tuple(lv), tuple(rv))
