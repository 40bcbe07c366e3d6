"""Polynomials and rational functions in two variables a and q over Z."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .polyq import PolyQ, format_terms, poly_gcd

Exp = tuple[int, int]  # (a exponent, q exponent)


class PolyAQ:
    """Polynomial in ``a`` with Laurent-polynomial coefficients in ``q``.

    Stored as a mapping ``{(i, j): c}`` for the monomial ``c a^i q^j``.
    Negative exponents are allowed; ``RatFunAQ`` folds them away.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exp, int] | Iterable[tuple[Exp, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Exp, int] = {}
        for k, c in items:
            if c:
                out[k] = out.get(k, 0) + c
        self.terms = {k: c for k, c in out.items() if c}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "PolyAQ":
        return cls({(0, 0): c})

    @classmethod
    def mono(cls, i: int, j: int, c: int = 1) -> "PolyAQ":
        return cls({(i, j): c})

    @classmethod
    def from_q(cls, p: PolyQ, a_exp: int = 0) -> "PolyAQ":
        return cls({(a_exp, e): c for e, c in p.terms()})

    @classmethod
    def one_minus(cls, i: int, j: int) -> "PolyAQ":
        """1 - a^i q^j."""
        return cls({(0, 0): 1, (i, j): -1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other) -> "PolyAQ":
        other = _coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return PolyAQ(out)

    __radd__ = __add__

    def __neg__(self) -> "PolyAQ":
        return PolyAQ({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "PolyAQ":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "PolyAQ":
        return _coerce(other) - self

    def __mul__(self, other) -> "PolyAQ":
        other = _coerce(other)
        out: dict[Exp, int] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return PolyAQ(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PolyAQ":
        if n < 0:
            raise ValueError("negative power")
        out = PolyAQ.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, i: int, j: int) -> "PolyAQ":
        """Multiply by a^i q^j."""
        return PolyAQ({(a + i, b + j): c for (a, b), c in self.terms.items()})

    def scale(self, c: int) -> "PolyAQ":
        return PolyAQ({k: v * c for k, v in self.terms.items()})

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def min_exps(self) -> Exp:
        return (min(i for i, _ in self.terms), min(j for _, j in self.terms))

    def a_degree(self) -> int:
        return max(i for i, _ in self.terms)

    def a_slices(self) -> dict[int, PolyQ]:
        """Coefficients of each power of a, as polynomials in q."""
        grouped: dict[int, dict[int, int]] = {}
        for (i, j), c in self.terms.items():
            grouped.setdefault(i, {})[j] = c
        return {i: PolyQ.from_dict(d) for i, d in grouped.items()}

    @classmethod
    def from_slices(cls, slices: Mapping[int, PolyQ]) -> "PolyAQ":
        return cls({(i, e): c for i, p in slices.items() for e, c in p.terms()})

    def leading_term(self) -> tuple[Exp, int]:
        """Largest monomial by total degree, then lexicographic (a first)."""
        k = max(self.terms, key=lambda e: (e[0] + e[1], e))
        return k, self.terms[k]

    def at_q1(self) -> dict[int, int]:
        """Substitute q = 1; returns the polynomial in a as {exp: coeff}."""
        out: dict[int, int] = {}
        for (i, _), c in self.terms.items():
            out[i] = out.get(i, 0) + c
        return {i: c for i, c in out.items() if c}

    def __call__(self, a, q) -> Fraction:
        a, q = Fraction(a), Fraction(q)
        return sum((c * a**i * q**j for (i, j), c in self.terms.items()), Fraction(0))

    def div_q_factor(self, f: PolyQ) -> "PolyAQ | None":
        """Exact division by a polynomial in q alone, or None."""
        out = {}
        for i, p in self.a_slices().items():
            qt = p.exact_div(f)
            if qt is None:
                return None
            out[i] = qt
        return PolyAQ.from_slices(out)

    def div_one_minus_aqk(self, k: int) -> "PolyAQ | None":
        """Exact division by (1 - a q^k), or None."""
        if not self.terms:
            return self
        sl = self.a_slices()
        lo = min(sl)
        hi = max(sl)
        if lo < 0:
            return None
        quot: dict[int, PolyQ] = {}
        prev = PolyQ()
        for i in range(hi):
            cur = sl.get(i, PolyQ()) + prev.shift(k)
            quot[i] = cur
            prev = cur
        if sl.get(hi, PolyQ()) != -prev.shift(k):
            return None
        return PolyAQ.from_slices(quot)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = PolyAQ.const(other)
        if not isinstance(other, PolyAQ):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self) -> str:
        return format_terms(list(self.terms.items()))

    def __repr__(self) -> str:
        return f"PolyAQ({self})"


def _coerce(x) -> PolyAQ:
    if isinstance(x, PolyAQ):
        return x
    if isinstance(x, int):
        return PolyAQ.const(x)
    if isinstance(x, PolyQ):
        return PolyAQ.from_q(x)
    raise TypeError(f"cannot use {type(x).__name__} as PolyAQ")


def cyclotomic(k: int) -> PolyQ:
    """The k-th cyclotomic polynomial, by dividing q^k - 1 by lower ones."""
    return _cyclo(k)


_CYCLO: dict[int, PolyQ] = {}


def _cyclo(k: int) -> PolyQ:
    if k in _CYCLO:
        return _CYCLO[k]
    p = PolyQ.monomial(k) - 1
    for d in range(1, k):
        if k % d == 0:
            p = p.exact_div(_cyclo(d))
    _CYCLO[k] = p
    return p


class RatFunAQ:
    """Quotient ``num / den`` of integer polynomials in a and q.

    On construction, monomial factors are folded so both sides are true
    polynomials with a nonzero constant-free normal form, the integer
    content is cancelled and the leading term of the denominator is made
    positive.  Common polynomial factors are only removed by ``reduced()``;
    equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _coerce(num), _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = PolyAQ(), PolyAQ.const(1)
            return
        na, nq = num.min_exps()
        da, dq = den.min_exps()
        # net monomial a^ea q^eq goes to whichever side keeps exponents >= 0
        ea, eq = na - da, nq - dq
        num = num.shift(-na + max(ea, 0), -nq + max(eq, 0))
        den = den.shift(-da + max(-ea, 0), -dq + max(-eq, 0))
        g = gcd(num.content(), den.content())
        # sign: the lowest monomial of the denominator is positive
        if den.terms[min(den.terms, key=lambda e: (e[0] + e[1], e))] < 0:
            g = -g
        if g != 1:
            num = PolyAQ({k: c // g for k, c in num.terms.items()})
            den = PolyAQ({k: c // g for k, c in den.terms.items()})
        self.num, self.den = num, den

    @classmethod
    def from_fraction(cls, x) -> "RatFunAQ":
        x = Fraction(x)
        return cls(PolyAQ.const(x.numerator), PolyAQ.const(x.denominator))

    def __add__(self, other) -> "RatFunAQ":
        other = _rcoerce(other)
        if self.den == other.den:
            return RatFunAQ(self.num + other.num, self.den)
        return RatFunAQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunAQ":
        return RatFunAQ(-self.num, self.den)

    def __sub__(self, other) -> "RatFunAQ":
        return self + (-_rcoerce(other))

    def __rsub__(self, other) -> "RatFunAQ":
        return _rcoerce(other) - self

    def __mul__(self, other) -> "RatFunAQ":
        other = _rcoerce(other)
        return RatFunAQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunAQ":
        other = _rcoerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunAQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunAQ":
        return _rcoerce(other) / self

    def __pow__(self, n: int) -> "RatFunAQ":
        if n < 0:
            return RatFunAQ(self.den, self.num) ** (-n)
        return RatFunAQ(self.num**n, self.den**n)

    def __eq__(self, other) -> bool:
        try:
            other = _rcoerce(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatFunAQ is unhashable; equality is by cross-multiplication")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __call__(self, a, q) -> Fraction:
        d = self.den(a, q)
        if d == 0:
            raise ZeroDivisionError(f"pole at a={a}, q={q}")
        return self.num(a, q) / d

    def has_a(self) -> bool:
        return any(i for i, _ in self.num.terms) or any(i for i, _ in self.den.terms)

    def reduced(self) -> "RatFunAQ":
        """Cancel the greatest common divisor of numerator and denominator."""
        if self.num.is_zero():
            return self
        g = gcd_aq(self.num, self.den)
        if g == PolyAQ.const(1):
            return self
        return RatFunAQ(exact_div_aq(self.num, g), exact_div_aq(self.den, g))

    def limit_q1(self) -> "RatFunAQ":
        """Value at q = 1 after cancelling matched powers of (1 - q).

        Returns a rational function in a alone.
        """
        num, den = self.num, self.den
        one_minus_q = PolyQ((1, -1))
        while not den.at_q1():
            if num.at_q1():
                raise ZeroDivisionError("pole at q = 1")
            num = num.div_q_factor(one_minus_q)
            den = den.div_q_factor(one_minus_q)
            if num is None or den is None:
                raise ArithmeticError("inconsistent (1 - q) divisibility")
        return RatFunAQ(
            PolyAQ({(i, 0): c for i, c in num.at_q1().items()}),
            PolyAQ({(i, 0): c for i, c in den.at_q1().items()}),
        )

    def a_leading_ratio(self) -> "RatFunAQ":
        """Limit as a -> infinity when num and den have equal a-degree."""
        dn, dd = self.num.a_degree(), self.den.a_degree()
        if dn > dd:
            raise ArithmeticError("diverges as a -> infinity")
        if dn < dd:
            return RatFunAQ(0)
        return RatFunAQ(
            PolyAQ.from_q(self.num.a_slices()[dn]), PolyAQ.from_q(self.den.a_slices()[dd])
        )

    def as_fraction(self) -> Fraction:
        """The value when the function is a constant."""
        if self.has_a() or any(j for _, j in self.num.terms) or any(
            j for _, j in self.den.terms
        ):
            r = self.reduced()
            if r.has_a() or any(j for _, j in r.num.terms) or any(j for _, j in r.den.terms):
                raise ValueError("not a constant")
            return Fraction(r.num.terms.get((0, 0), 0), r.den.terms[(0, 0)])
        return Fraction(self.num.terms.get((0, 0), 0), self.den.terms[(0, 0)])

    def to_json(self) -> dict:
        def enc(p: PolyAQ):
            return [[i, j, c] for (i, j), c in sorted(p.terms.items())]

        return {"num": enc(self.num), "den": enc(self.den)}

    def __str__(self) -> str:
        r = self.reduced()
        if r.den == PolyAQ.const(1):
            return str(r.num)
        return f"{_wrap(r.num)} / {_wrap(r.den)}"

    def __repr__(self) -> str:
        return f"RatFunAQ({self.num} / {self.den})"


def _slices(p: PolyAQ) -> list[PolyQ]:
    """Dense list of a-coefficients of a polynomial with no negative powers."""
    sl = p.a_slices()
    return [sl.get(i, PolyQ()) for i in range(max(sl) + 1)] if sl else []


def _from_list(cs: list[PolyQ]) -> PolyAQ:
    return PolyAQ.from_slices(dict(enumerate(cs)))


def _content_q(cs: list[PolyQ]) -> PolyQ:
    g = PolyQ()
    for c in cs:
        if c:
            g = poly_gcd(g, c) if g else c.primitive().scale(c.content())
    return g


def _primitive_a(cs: list[PolyQ]) -> list[PolyQ]:
    g = _content_q(cs)
    out = []
    for c in cs:
        qt = c.exact_div(g) if c else PolyQ()
        assert qt is not None
        out.append(qt)
    return _trim(out)


def _trim(cs: list[PolyQ]) -> list[PolyQ]:
    while cs and not cs[-1]:
        cs = cs[:-1]
    return cs


def _prem_a(A: list[PolyQ], B: list[PolyQ]) -> list[PolyQ]:
    """Pseudo-remainder of A by B as polynomials in a over Z[q]."""
    A = list(A)
    lb = B[-1]
    while len(A) >= len(B) and A:
        la = A[-1]
        shift = len(A) - len(B)
        A = [c * lb for c in A]
        for i, c in enumerate(B):
            A[i + shift] = A[i + shift] - c * la
        A = _trim(A)
    return A


def gcd_aq(p: PolyAQ, q: PolyAQ) -> PolyAQ:
    """A greatest common divisor in Z[q][a], via primitive remainder sequences.

    Both inputs must be genuine polynomials (no negative exponents); powers
    of q are ignored, as in ``poly_gcd``.
    """
    A, B = _slices(p), _slices(q)
    if not A:
        return q
    if not B:
        return p
    cont = poly_gcd(_content_q(A), _content_q(B))
    A, B = _primitive_a(A), _primitive_a(B)
    if len(A) < len(B):
        A, B = B, A
    while B:
        R = _prem_a(A, B)
        A, B = B, (_primitive_a(R) if R else R)
    A = _primitive_a(A)
    if A[-1].lead() < 0:
        A = [-c for c in A]
    return _from_list([c * cont for c in A])


def exact_div_aq(p: PolyAQ, g: PolyAQ) -> PolyAQ:
    """p / g in Z[q, q^-1][a]; raises if the division is not exact."""
    P, G = _slices(p), _slices(g)
    quot = [PolyQ()] * max(len(P) - len(G) + 1, 0)
    while len(P) >= len(G) and P:
        shift = len(P) - len(G)
        c = P[-1].exact_div(G[-1])
        if c is None:
            raise ArithmeticError("inexact division")
        quot[shift] = c
        for i, x in enumerate(G):
            P[i + shift] = P[i + shift] - x * c
        P = _trim(P)
    if P:
        raise ArithmeticError("inexact division")
    return _from_list(quot)


def _wrap(p: PolyAQ) -> str:
    return str(p) if len(p.terms) == 1 else f"({p})"


def _rcoerce(x) -> RatFunAQ:
    if isinstance(x, RatFunAQ):
        return x
    if isinstance(x, Fraction):
        return RatFunAQ.from_fraction(x)
    return RatFunAQ(_coerce(x))
