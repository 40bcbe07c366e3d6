"""Exhaustive checks of the uncrowding bijections and the lemmas they give."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..shapes import SHIFTED, DomainError, Diagram, add_cell, cell_in_shape, check_shape, ne_corners
from ..tableaux import (
    count_sbt_at,
    enumerate_sbt,
    enumerate_syt,
    g,
    iter_sbt,
    iter_syt,
    uncrowd_diag,
    uncrowd_left,
    uncrowd_right,
)


@dataclass(frozen=True)
class MapStep:
    """One application of a map to a whole class of tableaux."""

    label: str
    domain: int
    images: int
    target: int
    valid: bool

    @property
    def ok(self) -> bool:
        # injective (distinct images) into a target of the same size
        return self.valid and self.domain == self.images == self.target


@dataclass
class BijectionCheck:
    name: str
    shape: tuple[int, ...]
    steps: list[MapStep] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return all(s.ok for s in self.steps)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": {"shape": list(self.shape)},
            "steps": [
                {"label": s.label, "domain": s.domain, "images": s.images, "target": s.target, "valid": s.valid}
                for s in self.steps
            ],
            "equal": self.equal,
        }


def _column_cells(d: Diagram, k: int) -> list:
    return [x for x in d.cells() if x[1] == k]


def _column_bottom(lam: Sequence[int], k: int):
    """The addable cell directly below column k, if any."""
    rows = [r for r in range(1, len(lam) + 1) if cell_in_shape((r, k), lam, SHIFTED)]
    cell = (max(rows) + 1 if rows else 1, k)
    try:
        add_cell(lam, cell, SHIFTED)
    except DomainError:
        return None
    return cell


def check_k2(lam: Sequence[int]) -> BijectionCheck:
    """uncrowd_right: column k SBTs onto column k+1 SBTs plus fillings of lam + one cell."""
    lam = check_shape(lam, SHIFTED)
    d = Diagram.shifted(lam)
    n = len(lam)
    out = BijectionCheck("k2", lam)
    for k in range(n, lam[0] + 1):
        images = set()
        valid = True
        dom = 0
        for x in _column_cells(d, k):
            for t in iter_sbt(d, x):
                dom += 1
                u = uncrowd_right(t)
                images.add(u)
                if u.diagram == d:
                    valid &= u.is_sbt() and u.double_cell()[1] == k + 1
                else:
                    valid &= u.is_syt()
        target = sum(count_sbt_at(d, x) for x in _column_cells(d, k + 1))
        new = _column_bottom(lam, k + 1)
        if new is not None and new in ne_corners(lam):
            target += g(add_cell(lam, new, SHIFTED))
        out.steps.append(MapStep(f"column {k}", dom, len(images), target, valid))
    return out


def check_k1(lam: Sequence[int]) -> BijectionCheck:
    """uncrowd_left: off-diagonal column k SBTs onto column k-1 SBTs, k <= n."""
    lam = check_shape(lam, SHIFTED)
    d = Diagram.shifted(lam)
    n = len(lam)
    out = BijectionCheck("k1", lam)
    for k in range(2, n + 1):
        images = set()
        valid = True
        dom = 0
        for x in _column_cells(d, k):
            if x[0] == k:
                continue
            for t in iter_sbt(d, x):
                dom += 1
                u = uncrowd_left(t)
                images.add(u)
                valid &= u.is_sbt() and u.double_cell()[1] == k - 1
        target = sum(count_sbt_at(d, x) for x in _column_cells(d, k - 1))
        out.steps.append(MapStep(f"column {k}", dom, len(images), target, valid))
    return out


def check_diag(lam: Sequence[int]) -> BijectionCheck:
    """uncrowd_diag: fillings of lam + (i+1, i) onto SBTs doubled at (i, i) or (i+1, i+1)."""
    lam = check_shape(lam, SHIFTED)
    d = Diagram.shifted(lam)
    n = len(lam)
    out = BijectionCheck("diag", lam)
    for i in range(1, n):
        images = set()
        valid = True
        dom = 0
        for t in iter_syt(Diagram.extended(lam, i + 1)):
            dom += 1
            u = uncrowd_diag(t)
            images.add(u)
            valid &= u.is_sbt() and u.double_cell() in ((i, i), (i + 1, i + 1))
        target = count_sbt_at(d, (i, i)) + count_sbt_at(d, (i + 1, i + 1))
        out.steps.append(MapStep(f"i={i}", dom, len(images), target, valid))
    return out


BIJECTIONS = {"k2": check_k2, "k1": check_k1, "diag": check_diag}


def check_bijection(name: str, lam: Sequence[int]) -> BijectionCheck:
    try:
        fn = BIJECTIONS[name]
    except KeyError:
        raise DomainError(f"unknown bijection {name!r}") from None
    return fn(lam)


@dataclass(frozen=True)
class CountCheck:
    name: str
    shape: tuple[int, ...]
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": {"shape": list(self.shape)},
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "equal": self.equal,
        }


def _ext(lam, i: int) -> int:
    """Standard fillings of lam plus the cell (i, i-1)."""
    return enumerate_syt(Diagram.extended(lam, i))


def low_column_sum(lam: Sequence[int]) -> CountCheck:
    """Column counts in the first n columns against corner and extended-diagram counts."""
    lam = check_shape(lam, SHIFTED)
    n = len(lam)
    ref = enumerate_sbt(Diagram.shifted(lam))
    lhs = sum(ref.by_column.get(k, 0) for k in range(1, n + 1))
    rhs = Fraction(sum(enumerate_syt(Diagram.shifted(add_cell(lam, x, SHIFTED))) for x in ne_corners(lam)), 2)
    rhs += Fraction(sum((n - i) * _ext(lam, i + 1) for i in range(n)), 2)
    return CountCheck("low-column-sum", lam, Fraction(lhs), rhs)


def extended_weighted_sum(lam: Sequence[int]) -> CountCheck:
    """Weighted extended-diagram counts against the SYT count and the corner sum."""
    lam = check_shape(lam, SHIFTED)
    n = len(lam)
    lhs = sum((n - i) * _ext(lam, i + 1) for i in range(n))
    rhs = n * (sum(lam) + 1) * enumerate_syt(Diagram.shifted(lam))
    rhs -= sum(lam[i - 1] * enumerate_syt(Diagram.shifted(add_cell(lam, (i, j), SHIFTED))) for i, j in ne_corners(lam))
    return CountCheck("extended-weighted-sum", lam, Fraction(lhs), Fraction(rhs))


def extended_weighted_sum_reindexed(lam: Sequence[int]) -> CountCheck:
    """The weighted sum sum_i i * g^{lam + (n-i+1, n-i)} via its reversed indexing."""
    lam = check_shape(lam, SHIFTED)
    n = len(lam)
    lhs = sum((n - i) * _ext(lam, i + 1) for i in range(n))
    rhs = sum(i * _ext(lam, n - i + 1) for i in range(1, n + 1))
    return CountCheck("extended-weighted-sum-reindexed", lam, Fraction(lhs), Fraction(rhs))


def check_lemmas(lam: Sequence[int]) -> list:
    return [check_k2(lam), check_k1(lam), check_diag(lam), low_column_sum(lam), extended_weighted_sum(lam)]
