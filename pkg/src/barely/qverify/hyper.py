"""Terminating ordinary hypergeometric sums with exact rational parameters."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exact import pochhammer
from ..shapes import DomainError


@dataclass(frozen=True)
class HyperSpec:
    """sum_{j < terms} prefactor * z^j * prod (num)_j / prod (den)_j."""

    num: tuple[Fraction, ...]
    den: tuple[Fraction, ...]
    terms: int
    prefactor: Fraction = Fraction(1)
    z: Fraction = Fraction(1)

    @classmethod
    def make(cls, num: Sequence, den: Sequence, terms: int, prefactor=1, z=1) -> "HyperSpec":
        if terms < 0:
            raise DomainError("term count must be nonnegative")
        return cls(
            tuple(Fraction(x) for x in num),
            tuple(Fraction(x) for x in den),
            terms,
            Fraction(prefactor),
            Fraction(z),
        )


def hyper_terms(spec: HyperSpec) -> list[Fraction]:
    """The individual summands, built by the ratio of consecutive terms."""
    out: list[Fraction] = []
    t = spec.prefactor
    for j in range(spec.terms):
        out.append(t)
        ratio = spec.z
        for x in spec.num:
            ratio *= x + j
        for y in spec.den:
            if y + j == 0:
                if j + 1 < spec.terms:
                    raise DomainError(f"denominator parameter {y} vanishes at index {j + 1}")
                ratio = None
                break
            ratio /= y + j
        if ratio is None:
            break
        t *= ratio
    return out


def hyper_sum(spec: HyperSpec) -> Fraction:
    return sum(hyper_terms(spec), Fraction(0))


def terminating_length(params: Sequence) -> int:
    """Number of nonzero terms forced by a nonpositive integer parameter."""
    bounds = [-Fraction(x) + 1 for x in params if Fraction(x) <= 0 and Fraction(x).denominator == 1]
    if not bounds:
        raise DomainError(f"no parameter in {list(params)} terminates the series")
    return int(min(bounds))


def pochhammer_ratio(num: Sequence, den: Sequence, n: int) -> Fraction:
    """prod (num)_n / prod (den)_n."""
    top = Fraction(1)
    for x in num:
        top *= pochhammer(x, n)
    bot = Fraction(1)
    for y in den:
        bot *= pochhammer(y, n)
    if bot == 0:
        raise DomainError(f"a denominator Pochhammer symbol of {list(den)} vanishes")
    return top / bot
