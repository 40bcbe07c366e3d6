"""Multivariate polynomials, truncated q-series and simplex integrals."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .polyq import PolyQ
from .ratfun import PolyAQ, RatFunAQ


def pochhammer(x, n: int) -> Fraction:
    """Rising factorial x (x+1) ... (x+n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


class MPoly:
    """Polynomial in x_1..x_n stored as {exponent tuple: coefficient}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.nvars = nvars
        out = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            if c:
                out[tuple(e)] = c
        self.terms = out

    @classmethod
    def var(cls, nvars: int, i: int) -> "MPoly":
        """The variable x_{i+1} (0-based index)."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def const(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    def _check(self, other: "MPoly"):
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")

    def __add__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-other)

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            return MPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def evaluate(self, values: Sequence, one=1):
        """Substitute values for x_1..x_n; values must support ``**`` and ``*``."""
        total = None
        for e, c in self.terms.items():
            term = one * c
            for v, k in zip(values, e):
                if k:
                    term = term * v**k
            total = term if total is None else total + term
        return one * 0 if total is None else total

    def __repr__(self) -> str:
        return f"MPoly({self.nvars}, {self.terms})"


def alternant(exps: Sequence[int], nvars: int | None = None) -> MPoly:
    """det(x_j^{exps_i}) as an MPoly in len(exps) variables."""
    n = len(exps) if nvars is None else nvars
    if len(exps) != n:
        raise ValueError("need one exponent per variable")
    terms: dict = {}
    for perm in permutations(range(n)):
        e = [0] * n
        for i, j in enumerate(perm):
            e[j] = exps[i]
        sign = _perm_sign(perm)
        key = tuple(e)
        terms[key] = terms.get(key, 0) + sign
    return MPoly(n, terms)


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def simplex_integrate(p: MPoly, n: int | None = None) -> Fraction:
    """Integral of p over 0 <= x_1 <= ... <= x_n <= 1."""
    n = p.nvars if n is None else n
    if p.nvars > n:
        raise ValueError("polynomial has more variables than the simplex")
    total = Fraction(0)
    for e, c in p.terms.items():
        e = tuple(e) + (0,) * (n - len(e))
        acc, val = 0, Fraction(1)
        for j, k in enumerate(e, start=1):
            acc += k
            val /= acc + j
        total += Fraction(c) * val
    return total


def q_simplex_integrate(p: MPoly, n: int | None = None) -> RatFunAQ:
    """Iterated q-integral of p over 0 <= x_1 <= ... <= x_n <= 1."""
    n = p.nvars if n is None else n
    if p.nvars > n:
        raise ValueError("polynomial has more variables than the simplex")
    total = RatFunAQ(0)
    one_minus_q = PolyAQ.one_minus(0, 1)
    for e, c in sorted(p.terms.items()):
        e = tuple(e) + (0,) * (n - len(e))
        num = PolyAQ.const(1)
        den = PolyAQ.const(1)
        acc = 0
        for j, k in enumerate(e, start=1):
            acc += k
            num = num * one_minus_q
            den = den * PolyAQ.one_minus(0, acc + j)
        c = Fraction(c)
        total = total + RatFunAQ(num.scale(c.numerator), den.scale(c.denominator))
    return total


class QSeries:
    """Power series in q truncated after q^order, integer coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[int], order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = list(coeffs)[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def from_poly(cls, p: PolyQ, order: int) -> "QSeries":
        if p and p.low < 0:
            raise ValueError("negative powers of q are not a power series")
        return cls([p.coeff(k) for k in range(order + 1)], order)

    @classmethod
    def from_terms(cls, terms: Mapping[int, int], order: int) -> "QSeries":
        return cls([terms.get(k, 0) for k in range(order + 1)], order)

    def truncate(self, order: int) -> "QSeries":
        return QSeries(self.coeffs, min(order, self.order))

    def _align(self, other: "QSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "QSeries") -> "QSeries":
        d = self._align(other)
        return QSeries([self.coeffs[k] + other.coeffs[k] for k in range(d + 1)], d)

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, int):
            return QSeries([c * other for c in self.coeffs], self.order)
        d = self._align(other)
        a, b = self.coeffs, other.coeffs
        out = [0] * (d + 1)
        for i in range(d + 1):
            if a[i]:
                for j in range(d + 1 - i):
                    out[i + j] += a[i] * b[j]
        return QSeries(out, d)

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ArithmeticError("constant term must be a unit")
        out = [0] * (self.order + 1)
        for k in range(self.order + 1):
            s = (1 if k == 0 else 0) - sum(self.coeffs[i] * out[k - i] for i in range(1, k + 1))
            out[k] = s * c0
        return QSeries(out, self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"QSeries({list(self.coeffs)}, order={self.order})"
