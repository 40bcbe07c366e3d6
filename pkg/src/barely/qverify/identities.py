"""Named summation identities, each checked exactly at concrete parameters."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from ..exact import pochhammer
from ..shapes import DomainError
from .hyper import HyperSpec, hyper_sum, pochhammer_ratio, terminating_length
from .qhyper import (
    QTerm,
    compare_sampled,
    product_term,
    qhyper_terms,
    qinv,
    qmul,
    qp,
    qpow,
    qsqrt,
    times,
)

F = Fraction


@dataclass(frozen=True)
class Check:
    """Both sides of one identity at one parameter point."""

    name: str
    params: dict
    lhs: object
    rhs: object
    note: str = ""

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": {k: _js(v) for k, v in self.params.items()},
            "lhs": _js(self.lhs),
            "rhs": _js(self.rhs),
            "equal": self.equal,
        }


def _js(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_js(x) for x in v]
    return v


def _fact(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial of {n}")
    return factorial(n)


# -- identities behind the shifted CDE families --------------------------------


def _delta_sum_terms(a: int, d: int, e: int) -> list[Fraction]:
    out = []
    for j in range(e):
        t = F(_fact(2 * j), _fact(j) ** 2) * F(_fact(2 * e - 2 - 2 * j), _fact(e - j - 1) ** 2)
        t *= pochhammer(F(2 * d - 1, a) + 1 - 2 * j, 2 * e - 2)
        t /= pochhammer(F(2 * d - 1, 2 * a) + 1 - j, e - 1) ** 2
        t *= F(2 * d - 1 + 2 * a * (e - 1 - 2 * j), 2 * d - 1 - 2 * j * a)
        out.append(t)
    return out


def _delta_sum_check(a: int, d: int, e: int) -> None:
    if min(a, d, e) < 1 or d <= a * (e - 1) + 1:
        raise DomainError(f"need a, d, e >= 1 and d > a(e-1)+1, got {(a, d, e)}")


def delta_sum_corners(a: int, d: int, e: int) -> Check:
    """Power of two as a sum over the northeast corners of a delta-sum shape."""
    _delta_sum_check(a, d, e)
    return Check("delta-sum-corners", {"a": a, "d": d, "e": e}, F(2) ** (4 * e - 4), sum(_delta_sum_terms(a, d, e), F(0)))


def _dougall_rewrite(a: int, d: int, e: int) -> tuple[Fraction, HyperSpec]:
    x = F(1 - 2 * d, 2 * a)
    A = x + 1 - e
    # without the extra 1/2 that would make the rewrite half the corner sum
    pre = F(_fact(2 * e - 2), _fact(e - 1) ** 2)
    pre *= pochhammer(F(2 * d - 1, a) + 1, 2 * e - 2) / pochhammer(F(2 * d - 1, 2 * a) + 1, e - 1) ** 2
    pre *= F(1 - 2 * d + 2 * a * (1 - e), 1 - 2 * d)
    spec = HyperSpec.make(
        [A, A / 2 + 1, F(1, 2), 1 - e, x + F(1, 2)],
        [1, A / 2, F(3, 2) - e + x, x + 1, F(3, 2) - e],
        e,
    )
    return pre, spec


def delta_sum_5f4(a: int, d: int, e: int) -> Check:
    """The same corner sum rewritten as a prefactor times a very-well-poised 5F4."""
    _delta_sum_check(a, d, e)
    pre, spec = _dougall_rewrite(a, d, e)
    return Check("delta-sum-5f4", {"a": a, "d": d, "e": e}, sum(_delta_sum_terms(a, d, e), F(0)), pre * hyper_sum(spec))


def delta_sum_dougall(a: int, d: int, e: int) -> Check:
    """The 5F4 inside the rewrite is the Dougall sum at the matching parameters."""
    _delta_sum_check(a, d, e)
    _, spec = _dougall_rewrite(a, d, e)
    x = F(1 - 2 * d, 2 * a)
    return Check("delta-sum-dougall", {"a": a, "d": d, "e": e}, hyper_sum(spec), dougall(x + 1 - e, F(1, 2), 1 - e, x + F(1, 2)).rhs)


def delta_sum_closed(a: int, d: int, e: int) -> Check:
    """Prefactor times the Dougall evaluation of the 5F4 collapses to 2^{4e-4}."""
    _delta_sum_check(a, d, e)
    pre, _ = _dougall_rewrite(a, d, e)
    x = F(1 - 2 * d, 2 * a)
    val = pre * pochhammer_ratio([x + 2 - e, 1 - e], [x + F(3, 2) - e, F(3, 2) - e], e - 1)
    return Check("delta-sum-closed", {"a": a, "d": d, "e": e}, F(2) ** (4 * e - 4), val)


def balanced_corner_terms(comp: Sequence[int], n: int) -> list[Fraction]:
    """Summands of the balanced-shifted corner identity for composition comp."""
    comp = tuple(comp)
    ell = len(comp)
    if ell == 0 or min(comp) < 1:
        raise DomainError("composition parts must be positive")
    k = sum(comp)
    if not 0 <= k < n:
        raise DomainError(f"need sum(comp) < n, got {k} and n={n}")
    a = (None,) + comp  # 1-based
    half = F(1, 2)
    out = []
    for i in range(ell + 1):
        r = sum(comp[:i]) + 1
        t = F(1)
        # cells to the left: a_i, a_i + a_{i-1}, ..., with half of the last one
        for m in range(i, 0, -1):
            tail = sum(a[m + 1 : i + 1])
            t *= (tail + half * a[m]) / F(tail + a[m])
        # cells to the right: a_{i+1}, a_{i+1} + a_{i+2}, ...
        for m in range(i + 1, ell + 1):
            head = sum(a[i + 1 : m])
            t *= (head + half * a[m]) / F(head + a[m])
        base = n + half - r
        t *= (base + sum(a[i + 1 :])) / base
        for m in range(ell, 0, -1):
            tail = sum(a[m + 1 :])
            t *= (base + tail + half * a[m]) / (base + tail + a[m])
        out.append(t)
    return out


def balanced_corners(comp: Sequence[int], n: int) -> Check:
    return Check("balanced-corners", {"comp": list(comp), "n": n}, F(1), sum(balanced_corner_terms(comp, n), F(0)))


def partial_fraction_terms(b: Sequence, c: Sequence, u) -> list[Fraction]:
    b = [F(x) for x in b]
    c = [F(x) for x in c]
    u = F(u)
    ell = len(c)
    if len(b) != ell + 1:
        raise DomainError("need one more b than c")
    out = []
    for i, bi in enumerate(b):
        top = F(1)
        for cj in c:
            top *= (bi - cj) * (u - bi - cj)
        bot = F(1)
        for j, bj in enumerate(b):
            if j != i:
                bot *= (bi - bj) * (u - bi - bj)
        if bot == 0:
            raise DomainError("b's must be distinct with b_i + b_j != u")
        out.append(top / bot)
    return out


def partial_fractions(b: Sequence, c: Sequence, u) -> Check:
    """Partial-fraction identity sum_i prod (b_i-c_j)(u-b_i-c_j) / prod (b_i-b_j)(u-b_i-b_j) = 1."""
    return Check("partial-fractions", {"b": [F(x) for x in b], "c": [F(x) for x in c], "u": F(u)}, F(1), sum(partial_fraction_terms(b, c, u), F(0)))


def partial_fraction_specialization(comp: Sequence[int], n: int) -> tuple[list, list, Fraction]:
    """Parameters turning the partial-fraction identity into the corner identity."""
    pref = [sum(comp[:i]) for i in range(len(comp) + 1)]
    c = [F(pref[j]) + F(comp[j], 2) for j in range(len(comp))]
    return pref, c, sum(comp) + n - F(1, 2)


def trapezoid_corner_terms(m: int, n: int) -> list[Fraction]:
    out = []
    for i in range(n):
        t = F(_fact(2 * i), _fact(i) ** 2) * F(_fact(2 * n - 2 * i - 1), _fact(n - i - 1) ** 2)
        t *= F(_fact(m + 2 * n - i) ** 2, _fact(m + n - i) ** 2)
        t *= F(_fact(2 * m + 2 * n - 2 * i + 1), _fact(2 * m + 4 * n - 2 * i + 1))
        t *= F(2 * m + 4 * n - 4 * i + 1, (m + 2 * n - 2 * i) * (m + 2 * n - 2 * i + 1))
        out.append(t)
    return out


def _trap_check(m: int, n: int) -> None:
    if m < 0 or n < 1:
        raise DomainError(f"need m >= 0 and n >= 1, got {(m, n)}")


def trapezoid_corners(m: int, n: int) -> Check:
    """Corner sum for the trapezoid (m+2n, m+2n-2, ..., m+2)."""
    _trap_check(m, n)
    return Check("trapezoid-corners", {"m": m, "n": n}, F(n, 2 * (m + 2 * n + 1)), sum(trapezoid_corner_terms(m, n), F(0)))


def _trapezoid_7f6(m: int, n: int) -> tuple[Fraction, HyperSpec]:
    h = F(1, 2)
    pre = F(
        _fact(2 * n - 1) * _fact(m + 2 * n) ** 2 * _fact(2 * m + 2 * n + 1),
        _fact(n - 1) ** 2 * _fact(m + n) ** 2 * _fact(2 * m + 4 * n) * (m + 2 * n) * (m + 2 * n + 1),
    )
    spec = HyperSpec.make(
        [-m - 2 * n - h, -F(m, 2) - n + F(3, 4), h, -m - n, -F(m, 2) - n - h, -F(m, 2) - n, 1 - n],
        [1, -F(m, 2) - n - F(1, 4), -m - 2 * n, h - n, -F(m, 2) - n + 1, -F(m, 2) - n + h, -m - n - h],
        n,
    )
    return pre, spec


def trapezoid_7f6(m: int, n: int) -> Check:
    """The trapezoid corner sum as a prefactor times a 7F6."""
    _trap_check(m, n)
    pre, spec = _trapezoid_7f6(m, n)
    return Check("trapezoid-7f6", {"m": m, "n": n}, sum(trapezoid_corner_terms(m, n), F(0)), pre * hyper_sum(spec))


def trapezoid_7f6_closed(m: int, n: int) -> Check:
    """Closed evaluation of the 7F6 obtained as a q -> 1 limit."""
    _trap_check(m, n)
    _, spec = _trapezoid_7f6(m, n)
    closed = F(
        _fact(n - 1) * _fact(n) * _fact(m + n) ** 2 * _fact(2 * m + 4 * n - 1),
        _fact(2 * n - 1) * _fact(m + 2 * n - 1) ** 2 * _fact(2 * m + 2 * n + 1),
    )
    return Check("trapezoid-7f6-closed", {"m": m, "n": n}, hyper_sum(spec), closed)


def _trapezoid_lattice_check(N: int, n: int) -> None:
    if not 1 <= n <= N or N - 2 * n + 2 < 1:
        raise DomainError(f"need 1 <= n <= N and N-2n+2 >= 1, got {(N, n)}")


def trapezoid_downdegree(N: int, n: int) -> Check:
    """Total down-degree of the trapezoid interval against its border decomposition."""
    _trapezoid_lattice_check(N, n)
    lhs = F(n * (N - n + 1), N + 1) * comb(N + 1, n)
    rhs = comb(N, n - 1) + N * comb(N - 1, n - 1)
    rhs -= sum(F(comb(2 * i, i), i + 1) * comb(N - 1 - 2 * i, n - 1 - i) for i in range(n))
    return Check("trapezoid-downdegree", {"N": N, "n": n}, lhs, F(rhs))


def trapezoid_4f3(N: int, n: int) -> Check:
    """The simplified 4F3 form of the trapezoid down-degree identity."""
    _trapezoid_lattice_check(N, n)
    spec = HyperSpec.make([F(1, 2), 1, n - N, 1 - n], [1, 2, F(1 - N, 2), 1 - F(N, 2)], n)
    return Check("trapezoid-4f3", {"N": N, "n": n}, F(N, N - n + 1), hyper_sum(spec))


SHAPE_IDENTITIES: dict[str, Callable[..., Check]] = {
    "delta-sum-corners": delta_sum_corners,
    "delta-sum-5f4": delta_sum_5f4,
    "delta-sum-dougall": delta_sum_dougall,
    "delta-sum-closed": delta_sum_closed,
    "balanced-corners": balanced_corners,
    "partial-fractions": partial_fractions,
    "trapezoid-corners": trapezoid_corners,
    "trapezoid-7f6": trapezoid_7f6,
    "trapezoid-7f6-closed": trapezoid_7f6_closed,
    "trapezoid-downdegree": trapezoid_downdegree,
    "trapezoid-4f3": trapezoid_4f3,
}


def check_shape_identity(name: str, params: dict) -> Check:
    try:
        fn = SHAPE_IDENTITIES[name]
    except KeyError:
        raise DomainError(f"unknown identity {name!r}") from None
    return fn(**params)


# -- classical summation and transformation formulas --------------------------


def dougall(a, b, c, d) -> Check:
    """Very-well-poised 5F4 summation; one of b, c, d must be a nonpositive integer."""
    a, b, c, d = (F(x) for x in (a, b, c, d))
    terms = terminating_length([b, c, d])
    n = terms - 1
    others = [b, c, d]
    for i, x in enumerate(others):
        if x == -n:
            others.pop(i)
            break
    b2, c2 = others
    spec = HyperSpec.make([a, 1 + a / 2, b, c, d], [1, a / 2, 1 + a - b, 1 + a - c, 1 + a - d], terms)
    rhs = pochhammer_ratio([1 + a, 1 + a - b2 - c2], [1 + a - b2, 1 + a - c2], n)
    return Check("dougall", {"a": a, "b": b, "c": c, "d": d}, hyper_sum(spec), rhs)


def bailey(a, b, n: int) -> Check:
    """4F3[a/2, (a+1)/2, b+n, -n; b/2, (b+1)/2, a+1; 1] = (b-a)_n / (b)_n."""
    a, b = F(a), F(b)
    if n < 0:
        raise DomainError("n must be nonnegative")
    spec = HyperSpec.make([a / 2, (a + 1) / 2, b + n, -n], [1, b / 2, (b + 1) / 2, a + 1], n + 1)
    return Check("bailey", {"a": a, "b": b, "n": n}, hyper_sum(spec), pochhammer_ratio([b - a], [b], n))


def _sampled(name: str, params: dict, lhs: list[QTerm], rhs: list[QTerm]) -> Check:
    cmp = compare_sampled(lhs, rhs)
    note = f"{len(cmp.points)} points, degree bound {cmp.bound}"
    return Check(name, params, cmp.lhs, cmp.rhs, note)


def _very_well_poised_8phi7(a, b, c, d, e, n: int, base=1) -> list[QTerm]:
    q = qp(1, base)
    ra = qsqrt(a)
    aq = qmul(a, q)
    num = [a, qmul(q, ra), qmul(qp(-1), q, ra), b, c, d, e, qp(1, -n * F(base))]
    den = [
        ra,
        qmul(qp(-1), ra),
        qmul(aq, qinv(b)),
        qmul(aq, qinv(c)),
        qmul(aq, qinv(d)),
        qmul(aq, qinv(e)),
        qmul(a, qp(1, (n + 1) * F(base))),
    ]
    return num, den


def watson(a, b, c, d, e, n: int) -> Check:
    """Watson's transformation of a terminating very-well-poised 8phi7 into a 4phi3.

    Parameters are (coef, q-exponent) pairs; a must have a rational square root.
    """
    params = {"a": a, "b": b, "c": c, "d": d, "e": e, "n": n}
    a, b, c, d, e = (qp(*x) for x in (a, b, c, d, e))
    num, den = _very_well_poised_8phi7(a, b, c, d, e, n)
    z = qmul(qpow(a, 2), qp(1, n + 2), qinv(qmul(b, c, d, e)))
    lhs = qhyper_terms(num, den, 1, z)
    aq = qmul(a, qp(1, 1))
    pre = product_term(
        [(aq, 1, n), (qmul(aq, qinv(qmul(d, e))), 1, n)],
        [(qmul(aq, qinv(d)), 1, n), (qmul(aq, qinv(e)), 1, n)],
    )
    rhs = qhyper_terms(
        [qmul(aq, qinv(qmul(b, c))), d, e, qp(1, -n)],
        [qmul(aq, qinv(b)), qmul(aq, qinv(c)), qmul(d, e, qp(1, -n), qinv(a))],
        1,
        qp(1, 1),
        pre,
    )
    return _sampled("watson", params, lhs, rhs)


def q_4phi3_sum(a, c, n: int) -> Check:
    """4phi3[q^-2n, c^2, a, aq; a^2 q^2, c q^-n, c q^{1-n}; q^2, q^2] in product form."""
    params = {"a": a, "c": c, "n": n}
    a, c = qp(*a), qp(*c)
    q = qp(1, 1)
    lhs = qhyper_terms(
        [qpow(c, 2), a, qmul(a, q), qp(1, -2 * n)],
        [qmul(qpow(a, 2), qp(1, 2)), qmul(c, qp(1, -n)), qmul(c, qp(1, 1 - n))],
        2,
        qp(1, 2),
    )
    rhs = [
        product_term(
            [(qp(-1, 1), 1, n), (qmul(q, a, qinv(c)), 1, n)],
            [(qmul(qp(-1), a, q), 1, n), (qmul(q, qinv(c)), 1, n)],
        )
    ]
    return _sampled("q-4phi3-sum", params, lhs, rhs)


def q_8phi7_sum(a, d, n: int) -> Check:
    """The 8phi7 summation with base q^2 obtained from Watson and the 4phi3 sum."""
    params = {"a": a, "d": d, "n": n}
    a, d = qp(*a), qp(*d)
    ra = qsqrt(a)
    q2 = qp(1, 2)
    d2 = qpow(d, 2)
    num = [
        a,
        qmul(q2, ra),
        qmul(qp(-1), q2, ra),
        qmul(a, qinv(d2)),
        qmul(qpow(a, 2), qp(1, 2 + 2 * n), qinv(d2)),
        d,
        qmul(d, qp(1, 1)),
        qp(1, -2 * n),
    ]
    den = [
        ra,
        qmul(qp(-1), ra),
        qmul(d2, q2),
        qmul(d2, qp(1, -2 * n), qinv(a)),
        qmul(a, q2, qinv(d)),
        qmul(a, qp(1, 1), qinv(d)),
        qmul(a, qp(1, 2 * n + 2)),
    ]
    lhs = qhyper_terms(num, den, 2, qmul(d2, qp(1, 1), qinv(a)))
    rhs = [
        product_term(
            [(qp(-1, 1), 1, n), (qmul(a, qp(1, 1), qinv(d2)), 1, n), (qmul(a, q2), 2, n)],
            [(qmul(qp(-1), d, qp(1, 1)), 1, n), (qmul(a, qp(1, 1), qinv(d)), 1, n), (qmul(a, q2, qinv(d2)), 2, n)],
        )
    ]
    return _sampled("q-8phi7-sum", params, lhs, rhs)


CLASSICAL: dict[str, Callable[..., Check]] = {
    "dougall": dougall,
    "bailey": bailey,
    "watson": watson,
    "q-4phi3-sum": q_4phi3_sum,
    "q-8phi7-sum": q_8phi7_sum,
}


def check_classical(name: str, params: dict) -> Check:
    try:
        fn = CLASSICAL[name]
    except KeyError:
        raise DomainError(f"unknown classical identity {name!r}") from None
    return fn(**params)


def check_identity(name: str, params: dict) -> Check:
    if name in SHAPE_IDENTITIES:
        return check_shape_identity(name, params)
    return check_classical(name, params)
