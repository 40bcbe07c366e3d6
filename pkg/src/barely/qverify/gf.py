"""Generating functions of semistandard fillings and their integral forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

from ..exact import MPoly, QSeries, RatFunAQ, alternant, q_pochhammer, q_simplex_integrate, simplex_integrate
from ..exact.ratfun import PolyAQ
from ..shapes import SHIFTED, STRAIGHT, DomainError, Diagram, check_shape, partitions
from ..tableaux import enumerate_syt


def _sign(n: int) -> int:
    return -1 if comb(n, 2) % 2 else 1


def abar(lam: Sequence[int]) -> MPoly:
    """(-1)^{C(n,2)} det(x_j^{lam_i - 1}) for a strict partition with n parts."""
    lam = check_shape(lam, SHIFTED)
    n = len(lam)
    p = alternant([x - 1 for x in lam])
    return p * MPoly.const(n, _sign(n))


# -- enumeration side ---------------------------------------------------------------


def iter_ssyt(d: Diagram, max_sum: int, diagonal: Sequence[int] | None = None) -> Iterator[dict]:
    """Semistandard fillings by nonnegative integers with entry sum <= max_sum.

    Rows weakly increase, columns strictly increase.  If ``diagonal`` is
    given, the cell (i, i) must hold diagonal[i-1].
    """
    cells = d.cells()
    fixed = {}
    if diagonal is not None:
        for i, v in enumerate(diagonal, start=1):
            fixed[(i, i)] = v
    fill: dict = {}

    def rec(k: int, total: int):
        if k == len(cells):
            yield dict(fill)
            return
        r, c = cells[k]
        lo = 0
        if (r, c - 1) in fill:
            lo = max(lo, fill[(r, c - 1)])
        if (r - 1, c) in fill:
            lo = max(lo, fill[(r - 1, c)] + 1)
        if (r, c) in fixed:
            choices = [fixed[(r, c)]] if fixed[(r, c)] >= lo else []
        else:
            choices = range(lo, max_sum - total + 1)
        for v in choices:
            if total + v > max_sum:
                break
            fill[(r, c)] = v
            yield from rec(k + 1, total + v)
            del fill[(r, c)]

    yield from rec(0, 0)


def ssyt_series(d: Diagram, order: int, diagonal: Sequence[int] | None = None) -> QSeries:
    counts = [0] * (order + 1)
    for t in iter_ssyt(d, order, diagonal):
        counts[sum(t.values())] += 1
    return QSeries(counts, order)


# -- closed-form side ------------------------------------------------------------------


def _monomial_eval(p: MPoly, nu: Sequence[int]) -> dict[int, int]:
    """p(q^nu) as {exponent: coefficient}; p must have integer coefficients."""
    out: dict[int, int] = {}
    for e, c in p.terms.items():
        k = sum(a * b for a, b in zip(e, nu))
        out[k] = out.get(k, 0) + int(c)
    return out


def _inv_qfactorials(lam: Sequence[int], order: int) -> QSeries:
    s = QSeries([1], order)
    for part in lam:
        s = s * QSeries.from_poly(q_pochhammer(1, part - 1), order).inverse()
    return s


def alternant_series(lam: Sequence[int], nu: Sequence[int], order: int) -> QSeries:
    """q^{|nu|} abar_{lam - 1^n}(q^nu) / prod (q;q)_{lam_j - 1}, truncated."""
    lam = check_shape(lam, SHIFTED)
    nu = tuple(nu) + (0,) * (len(lam) - len(nu))
    if len(nu) != len(lam):
        raise DomainError(f"{nu} has more than {len(lam)} parts")
    body = {k + sum(nu): c for k, c in _monomial_eval(abar(lam), nu).items()}
    return QSeries.from_terms(body, order) * _inv_qfactorials(lam, order)


def ratfun_series(r: RatFunAQ, order: int) -> QSeries:
    """Expand a rational function of q alone as a power series."""
    if r.has_a():
        raise DomainError("expected a rational function of q alone")
    num = r.num.a_slices().get(0)
    den = r.den.a_slices()[0]
    low = den.low
    num_s = num.shift(-low) if num is not None else None
    den_s = den.shift(-low)
    if num_s is not None and num_s.low < 0:
        raise DomainError("rational function has a pole at q = 0")
    if num_s is None:
        return QSeries([], order)
    c0 = den_s.coeff(0)
    if c0 not in (1, -1):
        raise DomainError("denominator constant term is not a unit")
    return QSeries.from_poly(num_s, order) * QSeries.from_poly(den_s, order).inverse()


@dataclass(frozen=True)
class SeriesCheck:
    name: str
    shape: tuple[int, ...]
    nu: tuple[int, ...] | None
    lhs: QSeries
    rhs: QSeries

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": {"shape": list(self.shape), "nu": None if self.nu is None else list(self.nu), "order": self.lhs.order},
            "lhs": list(self.lhs.coeffs),
            "rhs": list(self.rhs.coeffs),
            "equal": self.equal,
        }


def check_gf_alternant(lam: Sequence[int], nu: Sequence[int], order: int) -> SeriesCheck:
    """Fillings with reversed diagonal nu against the alternant closed form."""
    lam = check_shape(lam, SHIFTED)
    nu = tuple(nu) + (0,) * (len(lam) - len(nu))
    if len(nu) != len(lam) or any(a < b for a, b in zip(nu, nu[1:])) or (nu and nu[-1] < 0):
        raise DomainError(f"{nu} is not a partition with at most {len(lam)} parts")
    lhs = ssyt_series(Diagram.shifted(lam), order, diagonal=nu[::-1])
    return SeriesCheck("alternant", lam, nu, lhs, alternant_series(lam, nu, order))


def _partitions_upto(n: int, size: int) -> Iterator[tuple[int, ...]]:
    """Partitions with at most n parts (zero-padded) and |nu| <= size."""
    for s in range(size + 1):
        for p in ([()] if s == 0 else partitions(s)):
            if len(p) <= n:
                yield tuple(p) + (0,) * (n - len(p))


def check_lemma_gf(f: MPoly, order: int) -> SeriesCheck:
    """sum_nu q^{|nu|} f(q^nu) against the q-integral over the simplex / (1-q)^n."""
    n = f.nvars
    terms: dict[int, int] = {}
    for nu in _partitions_upto(n, order):
        for k, c in _monomial_eval(f, nu).items():
            terms[k + sum(nu)] = terms.get(k + sum(nu), 0) + c
    lhs = QSeries.from_terms(terms, order)
    integral = q_simplex_integrate(f, n) / RatFunAQ(PolyAQ.one_minus(0, 1) ** n)
    return SeriesCheck("lemma-gf", (), None, lhs, ratfun_series(integral, order))


def check_ssyt_gf(lam: Sequence[int], order: int) -> SeriesCheck:
    """All fillings of lam against (1-q)^{-n} / prod (q;q)_{lam_j-1} times the q-integral of abar."""
    lam = check_shape(lam, SHIFTED)
    n = len(lam)
    lhs = ssyt_series(Diagram.shifted(lam), order)
    integral = q_simplex_integrate(abar(lam), n) / RatFunAQ(PolyAQ.one_minus(0, 1) ** n)
    rhs = ratfun_series(integral, order) * _inv_qfactorials(lam, order)
    return SeriesCheck("ssyt-gf", lam, None, lhs, rhs)


# -- integral formulas -----------------------------------------------------------------


@dataclass(frozen=True)
class IntegralCheck:
    name: str
    shape: tuple[int, ...]
    i: int | None
    lhs: int | Fraction
    rhs: int | Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": {"shape": list(self.shape), "i": self.i},
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "equal": self.equal,
        }


def _fact_prod(lam: Sequence[int]) -> int:
    out = 1
    for part in lam:
        out *= factorial(part - 1)
    return out


def ssyt_integral(lam: Sequence[int]) -> IntegralCheck:
    lam = check_shape(lam, SHIFTED)
    val = Fraction(factorial(sum(lam)), _fact_prod(lam)) * simplex_integrate(abar(lam), len(lam))
    return IntegralCheck("ssyt-integral", lam, None, enumerate_syt(Diagram.shifted(lam)), val)


def ssyt_integral_extended(lam: Sequence[int], i: int) -> IntegralCheck:
    """Fillings of lam plus (n-i+1, n-i) against the integral with (x_{i+1} - x_i), x_{n+1} = 1."""
    lam = check_shape(lam, SHIFTED)
    n = len(lam)
    if not 1 <= i <= n:
        raise DomainError(f"need 1 <= i <= {n}, got {i}")
    upper = MPoly.const(n, 1) if i == n else MPoly.var(n, i)
    weight = upper - MPoly.var(n, i - 1)
    val = Fraction(factorial(sum(lam) + 1), _fact_prod(lam)) * simplex_integrate(weight * abar(lam), n)
    return IntegralCheck("ssyt-integral-extended", lam, i, enumerate_syt(Diagram.extended(lam, n - i + 1)), val)


def syt_from_ssyt_limit(lam: Sequence[int]) -> IntegralCheck:
    """(q;q)_{|lam|} times the closed generating function, at q -> 1."""
    lam = check_shape(lam, SHIFTED)
    n = len(lam)
    gf = q_simplex_integrate(abar(lam), n) / RatFunAQ(PolyAQ.one_minus(0, 1) ** n)
    for part in lam:
        gf = gf / RatFunAQ(PolyAQ.from_q(q_pochhammer(1, part - 1)))
    gf = gf * RatFunAQ(PolyAQ.from_q(q_pochhammer(1, sum(lam))))
    return IntegralCheck("syt-limit", lam, None, enumerate_syt(Diagram.shifted(lam)), gf.limit_q1().as_fraction())


def check_integral_formulas(lam: Sequence[int], i: int | None = None) -> list[IntegralCheck]:
    lam = check_shape(lam, SHIFTED)
    if not lam:
        raise DomainError("the empty shape has no integral formula")
    out = [ssyt_integral(lam), syt_from_ssyt_limit(lam)]
    idx = range(1, len(lam) + 1) if i is None else [i]
    out.extend(ssyt_integral_extended(lam, j) for j in idx)
    return out
