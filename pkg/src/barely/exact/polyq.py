"""Univariate Laurent polynomials in q with integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class PolyQ:
    """Immutable Laurent polynomial ``sum c_k q^(low + k)``.

    Coefficients are Python ints.  Zero coefficients at either end are
    trimmed, so the zero polynomial has no coefficients and ``low == 0``.
    """

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0):
        cs = list(coeffs)
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        if start == end:
            self.low = 0
            self.coeffs: tuple[int, ...] = ()
        else:
            self.low = low + start
            self.coeffs = tuple(int(c) for c in cs[start:end])
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "PolyQ":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "PolyQ":
        return cls((c,), low=k)

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "PolyQ":
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(k, 0) for k in range(lo, hi + 1)], low=lo)

    # -- basic queries ------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int:
        """Largest exponent present (undefined for zero; returns low - 1)."""
        return self.low + len(self.coeffs) - 1

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of zero polynomial")
        return self.high

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def trail(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def coeff(self, k: int) -> int:
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> list[tuple[int, int]]:
        return [(self.low + i, c) for i, c in enumerate(self.coeffs) if c]

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def is_const(self) -> bool:
        return not self.coeffs or (self.low == 0 and len(self.coeffs) == 1)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other) -> "PolyQ":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return PolyQ(out, lo)

    __radd__ = __add__

    def __neg__(self) -> "PolyQ":
        return PolyQ([-c for c in self.coeffs], self.low)

    def __sub__(self, other) -> "PolyQ":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "PolyQ":
        return _coerce(other) - self

    def __mul__(self, other) -> "PolyQ":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return PolyQ()
        a, b = self.coeffs, other.coeffs
        if len(b) == 1:
            k = b[0]
            return PolyQ([c * k for c in a], self.low + other.low)
        if len(a) == 1:
            k = a[0]
            return PolyQ([c * k for c in b], self.low + other.low)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PolyQ(out, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PolyQ":
        if n < 0:
            if len(self.coeffs) == 1 and self.coeffs[0] in (1, -1):
                return PolyQ((self.coeffs[0] ** n,), self.low * n)
            raise ValueError("negative power of a non-monomial")
        result = PolyQ.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "PolyQ":
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return PolyQ(self.coeffs, self.low + k)

    def scale(self, c: int) -> "PolyQ":
        return PolyQ([x * c for x in self.coeffs], self.low)

    def exact_div_int(self, c: int) -> "PolyQ":
        out = []
        for x in self.coeffs:
            qt, r = divmod(x, c)
            if r:
                raise ArithmeticError(f"{c} does not divide {self}")
            out.append(qt)
        return PolyQ(out, self.low)

    def subs_power(self, k: int) -> "PolyQ":
        """Substitute q -> q^k (k >= 1)."""
        if k < 1:
            raise ValueError("power must be positive")
        return PolyQ.from_dict({e * k: c for e, c in self.terms()})

    # -- division -----------------------------------------------------
    def divmod_poly(self, other: "PolyQ") -> tuple["PolyQ", "PolyQ"] | None:
        """Division by ``other`` over Z when every step stays integral.

        Both operands are treated as ordinary polynomials after removing
        their lowest powers of q; returns None if a non-integral step occurs.
        """
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        num = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        qlen = len(num) - len(den) + 1
        if qlen <= 0:
            return PolyQ(), self
        quot = [0] * qlen
        for i in range(qlen - 1, -1, -1):
            c = num[i + len(den) - 1]
            if c == 0:
                continue
            qc, r = divmod(c, lead)
            if r:
                return None
            quot[i] = qc
            for j, d in enumerate(den):
                num[i + j] -= qc * d
        return PolyQ(quot, self.low - other.low), PolyQ(num, self.low)

    def exact_div(self, other: "PolyQ") -> "PolyQ | None":
        """Return self / other if the quotient is a Laurent polynomial over Z."""
        res = self.divmod_poly(other)
        if res is None:
            return None
        quot, rem = res
        return quot if rem.is_zero() else None

    def pseudo_rem(self, other: "PolyQ") -> "PolyQ":
        """Pseudo-remainder lc(other)^(deg diff + 1) * self mod other."""
        num = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        if len(num) < len(den):
            return PolyQ(num)
        for i in range(len(num) - len(den), -1, -1):
            c = num[i + len(den) - 1]
            num = [x * lead for x in num]
            if c:
                for j, d in enumerate(den):
                    num[i + j] -= c * d
        return PolyQ(num)

    def div_one_minus_q(self) -> "PolyQ":
        """Exact division by (1 - q); requires p(1) == 0."""
        # synthetic division by (q - 1), then negate
        if sum(self.coeffs) != 0:
            raise ArithmeticError("not divisible by (1 - q)")
        out = []
        acc = 0
        for c in reversed(self.coeffs):
            acc += c
            out.append(acc)
        out.reverse()
        # out[i] is the coefficient of q^(low + i - 1) in p / (q - 1)
        return -PolyQ(out[1:], self.low)

    def primitive(self) -> "PolyQ":
        """Strip integer content and lowest q power; leading coefficient > 0."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.coeffs[-1] < 0:
            c = -c
        return PolyQ([x // c for x in self.coeffs], 0)

    # -- evaluation ---------------------------------------------------
    def __call__(self, q) -> Fraction:
        q = Fraction(q)
        if not self.coeffs:
            return Fraction(0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc * q ** self.low

    def at_one(self) -> int:
        return sum(self.coeffs)

    # -- comparison / display -----------------------------------------
    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.low, self.coeffs))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyQ({format_terms([((0, e), c) for e, c in self.terms()])})"

    def __str__(self) -> str:
        return format_terms([((0, e), c) for e, c in self.terms()])


def _coerce(x):
    if isinstance(x, PolyQ):
        return x
    if isinstance(x, int):
        return PolyQ.const(x)
    return NotImplemented


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Greatest common divisor in Z[q], ignoring powers of q.

    The result is primitive with positive leading coefficient, times the
    gcd of the integer contents.
    """
    if a.is_zero():
        return b.primitive().scale(b.content()) if b else PolyQ()
    if b.is_zero():
        return a.primitive().scale(a.content())
    c = gcd(a.content(), b.content())
    x, y = a.primitive(), b.primitive()
    if len(x.coeffs) < len(y.coeffs):
        x, y = y, x
    while y.coeffs:
        r = x.pseudo_rem(y)
        x, y = y, (r.primitive() if r else r)
    return x.primitive().scale(c)


def format_terms(terms: Sequence[tuple[tuple[int, int], int]]) -> str:
    """Render ``[((a_exp, q_exp), coeff), ...]`` by total degree then lex."""
    items = sorted((t for t in terms if t[1]), key=lambda t: (t[0][0] + t[0][1], t[0]))
    if not items:
        return "0"
    parts = []
    for (i, j), c in items:
        mono = []
        if i:
            mono.append("a" if i == 1 else f"a^{i}")
        if j:
            mono.append("q" if j == 1 else f"q^{j}")
        body = "*".join(mono)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, text))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


def q_pochhammer(m: int, n: int) -> PolyQ:
    """(q^m; q)_n = prod_{i<n} (1 - q^(m+i))."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = PolyQ.const(1)
    for i in range(n):
        out = out * (1 - PolyQ.monomial(m + i))
    return out


def q_binomial(n: int, k: int) -> PolyQ:
    """Gaussian binomial coefficient as a polynomial in q."""
    if k < 0 or k > n:
        return PolyQ()
    num = q_pochhammer(1, n)
    den = q_pochhammer(1, k) * q_pochhammer(1, n - k)
    out = num.exact_div(den)
    assert out is not None
    return out
