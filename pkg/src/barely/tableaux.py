"""Standard and barely set-valued tableaux: counts, enumeration, uncrowding.

Brute-force counts treat a diagram as the poset on its cells where (r, c)
precedes (r, c+1) and (r+1, c).  A barely set-valued tableau with double
cell x is the same thing as a linear extension of the poset in which x is
split into a two-element chain x_a < x_b.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

from .shapes import (
    EXTENDED,
    SHIFTED,
    STRAIGHT,
    Cell,
    Diagram,
    DomainError,
    Shape,
    add_cell,
    check_shape,
    conjugate,
    ne_corners,
)

# -- closed forms -------------------------------------------------------------


def hook_count(lam: Sequence[int]) -> int:
    """f^lambda via the hook-length formula."""
    lam = check_shape(lam, STRAIGHT)
    conj = conjugate(lam)
    hooks = 1
    for i, p in enumerate(lam, start=1):
        for j in range(1, p + 1):
            hooks *= p + conj[j - 1] - i - j + 1
    n = sum(lam)
    assert factorial(n) % hooks == 0
    return factorial(n) // hooks


def thrall_count(lam: Sequence[int]) -> int:
    """g^lambda via the product formula for shifted shapes."""
    lam = check_shape(lam, SHIFTED)
    val = Fraction(factorial(sum(lam)), prod(factorial(p) for p in lam))
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            val *= Fraction(lam[i] - lam[j], lam[i] + lam[j])
    assert val.denominator == 1, f"non-integral count for {lam}"
    return int(val)


def count_syt_formula(lam: Sequence[int], kind: str = STRAIGHT) -> int:
    if kind == STRAIGHT:
        return hook_count(lam)
    if kind == SHIFTED:
        return thrall_count(lam)
    raise DomainError("no product formula for extended diagrams; use enumerate_syt")


def count_sbt_straight(lam: Sequence[int], method: str = "rows") -> int:
    """f^lambda(+1) for a straight shape.

    ``rows``: sum over rows k with lam_k < lam_{k-1} of lam_k f^{lam + e_k}.
    ``content``: the same sum with each ratio f^{lam+e_k}/f^lam written as a
    product over content differences c_k - c_i, c_i = lam_i - i.
    """
    lam = check_shape(lam, STRAIGHT)
    n = len(lam)
    rows = [k for k in range(1, n + 1) if k == 1 or lam[k - 1] < lam[k - 2]]
    if method == "rows":
        return sum(lam[k - 1] * hook_count(add_cell(lam, (k, lam[k - 1] + 1))) for k in rows)
    if method == "content":
        return int(expect_y_straight_content(lam) * (sum(lam) + 1) * hook_count(lam))
    raise ValueError(f"unknown method {method!r}")


def expect_y_straight_content(lam: Sequence[int]) -> Fraction:
    """E(Y) = sum_k lam_k/(lam_k+n-k+1) prod_{i != k} (c_k-c_i+1)/(c_k-c_i)."""
    lam = check_shape(lam, STRAIGHT)
    n = len(lam)
    c = [lam[i] - (i + 1) for i in range(n)]
    total = Fraction(0)
    for k in range(1, n + 1):
        if k > 1 and lam[k - 1] == lam[k - 2]:
            continue
        term = Fraction(lam[k - 1], lam[k - 1] + n - k + 1)
        for i in range(n):
            if i != k - 1:
                d = c[k - 1] - c[i]
                term *= Fraction(d + 1, d)
        total += term
    return total


def expect_y_shifted_product(lam: Sequence[int]) -> Fraction:
    """E(Y) for a shifted shape from the explicit product-sum formula."""
    lam = check_shape(lam, SHIFTED)
    n = len(lam)
    inner = Fraction(n)
    for k in range(1, n + 1):
        lk = lam[k - 1]
        if k > 1 and lk > lam[k - 2] - 2:
            continue
        term = Fraction(lk - 2 * n + 2 * k - 1, lk + 1)
        for i in range(1, n + 1):
            if i != k:
                li = lam[i - 1]
                term *= Fraction(lk + li, lk - li) * Fraction(lk - li + 1, lk + li + 1)
        inner += term
    return inner / 2


def count_sbt_shifted(lam: Sequence[int], method: str = "product") -> int:
    """g^lambda(+1) by the product form or by the northeast-corner sum."""
    lam = check_shape(lam, SHIFTED)
    if not lam:
        raise DomainError("empty shape")
    n, size = len(lam), sum(lam)
    g = thrall_count(lam)
    if method == "product":
        val = expect_y_shifted_product(lam) * (size + 1) * g
    elif method == "ne-sum":
        val = Fraction(n * (size + 1), 2) * g
        for i, j in ne_corners(lam):
            val += Fraction(2 * j - 2 * n - 1 - lam[i - 1], 2) * thrall_count(add_cell(lam, (i, j), SHIFTED))
    else:
        raise ValueError(f"unknown method {method!r}")
    assert val.denominator == 1, f"non-integral SBT count for {lam}"
    return int(val)


# -- cell posets and linear extensions ------------------------------------------


def _poset(cells: Sequence[Cell], split: Cell | None = None) -> tuple[list, list[int]]:
    """Elements and predecessor bitmasks; a split cell becomes two elements."""
    index = {x: k for k, x in enumerate(cells)}
    elems: list = list(cells)
    preds = [0] * len(cells)
    top = dict(index)  # element that later cells must follow
    if split is not None:
        if split not in index:
            raise DomainError(f"{split} is not a cell")
        b = len(elems)
        elems.append(split)
        preds.append(1 << index[split])
        top[split] = b
    for x, k in index.items():
        r, c = x
        for nb in ((r, c - 1), (r - 1, c)):
            if nb in index:
                preds[k] |= 1 << top[nb]
    return elems, preds


def count_linear_extensions(preds: Sequence[int]) -> int:
    """Number of linear extensions, by dynamic programming over order ideals."""
    m = len(preds)
    full = (1 << m) - 1
    level = {0: 1}
    for _ in range(m):
        nxt: dict[int, int] = defaultdict(int)
        for mask, cnt in level.items():
            free = full & ~mask
            while free:
                low = free & -free
                k = low.bit_length() - 1
                if preds[k] & mask == preds[k]:
                    nxt[mask | low] += cnt
                free ^= low
        level = nxt
    return level.get(full, 0)


def iter_linear_extensions(preds: Sequence[int]) -> Iterator[list[int]]:
    """All linear extensions as element sequences, in lexicographic order."""
    m = len(preds)
    order: list[int] = []

    def rec(mask: int):
        if len(order) == m:
            yield list(order)
            return
        for k in range(m):
            if not mask >> k & 1 and preds[k] & mask == preds[k]:
                order.append(k)
                yield from rec(mask | 1 << k)
                order.pop()

    yield from rec(0)


@lru_cache(maxsize=None)
def _count_cached(kind: str, shape: Shape, extra, split) -> int:
    d = Diagram(kind, shape, extra)
    _, preds = _poset(d.cells(), split)
    return count_linear_extensions(preds)


def enumerate_syt(d: Diagram) -> int:
    """Number of standard fillings of any diagram, by brute force."""
    return _count_cached(d.kind, d.shape, d.extra, None)


def count_sbt_at(d: Diagram, cell: Cell) -> int:
    """Barely set-valued tableaux of d whose double cell is ``cell``."""
    return _count_cached(d.kind, d.shape, d.extra, cell)


@dataclass
class SbtRefinement:
    """SBT counts by double cell, by its column, and on the diagonal."""

    total: int = 0
    by_cell: dict[Cell, int] = field(default_factory=dict)
    by_column: dict[int, int] = field(default_factory=dict)
    diagonal: dict[int, int] = field(default_factory=dict)


def enumerate_sbt(d: Diagram) -> SbtRefinement:
    if d.kind == EXTENDED:
        raise DomainError("barely set-valued tableaux are counted on straight or shifted shapes")
    out = SbtRefinement()
    for x in d.cells():
        cnt = count_sbt_at(d, x)
        out.by_cell[x] = cnt
        out.by_column[x[1]] = out.by_column.get(x[1], 0) + cnt
        if d.kind == SHIFTED and x[0] == x[1]:
            out.diagonal[x[0]] = cnt
        out.total += cnt
    return out


# -- explicit tableaux --------------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    """A filling of a diagram; each cell holds a sorted tuple of entries."""

    diagram: Diagram
    entries: tuple[tuple[Cell, tuple[int, ...]], ...]

    @classmethod
    def from_dict(cls, diagram: Diagram, fill: dict) -> "Tableau":
        items = []
        for x in diagram.cells():
            v = fill[x]
            v = (v,) if isinstance(v, int) else tuple(sorted(v))
            items.append((x, v))
        return cls(diagram, tuple(items))

    def as_dict(self) -> dict[Cell, tuple[int, ...]]:
        return dict(self.entries)

    def __getitem__(self, cell: Cell) -> tuple[int, ...]:
        return self.as_dict()[cell]

    def double_cell(self) -> Cell | None:
        doubles = [x for x, v in self.entries if len(v) == 2]
        if len(doubles) > 1:
            raise DomainError("more than one double cell")
        return doubles[0] if doubles else None

    def is_standard(self) -> bool:
        """Increasing rows and columns, entries 1..N each used once."""
        fill = self.as_dict()
        flat = sorted(e for v in fill.values() for e in v)
        if flat != list(range(1, len(flat) + 1)):
            return False
        for (r, c), v in fill.items():
            for nb in ((r, c + 1), (r + 1, c)):
                if nb in fill and max(v) >= min(fill[nb]):
                    return False
        return True

    def is_syt(self) -> bool:
        return all(len(v) == 1 for _, v in self.entries) and self.is_standard()

    def is_sbt(self) -> bool:
        return sum(len(v) == 2 for _, v in self.entries) == 1 and all(
            len(v) <= 2 for _, v in self.entries
        ) and self.is_standard()

    def to_json(self) -> str:
        return json.dumps(
            {
                "shape": list(self.diagram.shape),
                "kind": self.diagram.kind,
                "cells": [{"r": r, "c": c, "e": list(v)} for (r, c), v in self.entries],
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "Tableau":
        data = json.loads(text)
        cells = {(x["r"], x["c"]): tuple(x["e"]) for x in data["cells"]}
        kind = data["kind"]
        extra = None
        if kind == EXTENDED:
            extra = next(x for x in cells if x[1] == x[0] - 1)
        return cls.from_dict(Diagram(kind, tuple(data["shape"]), extra), cells)


def iter_syt(d: Diagram) -> Iterator[Tableau]:
    cells = d.cells()
    _, preds = _poset(cells)
    for order in iter_linear_extensions(preds):
        yield Tableau.from_dict(d, {cells[k]: i for i, k in enumerate(order, start=1)})


def iter_sbt(d: Diagram, cell: Cell | None = None) -> Iterator[Tableau]:
    """All SBTs of d, optionally only those with the given double cell."""
    cells = d.cells()
    for x in [cell] if cell is not None else cells:
        elems, preds = _poset(cells, x)
        for order in iter_linear_extensions(preds):
            fill: dict[Cell, list[int]] = {}
            for i, k in enumerate(order, start=1):
                fill.setdefault(elems[k], []).append(i)
            yield Tableau.from_dict(d, fill)


# -- refined shifted counts -------------------------------------------------------


def g(lam: Sequence[int]) -> int:
    return thrall_count(lam)


def g_extended(lam: Sequence[int], i: int) -> int:
    """Standard fillings of the shifted diagram lam plus the cell (i, i-1)."""
    return enumerate_syt(Diagram.extended(lam, i))


def sbt_refined_shifted(lam: Sequence[int]) -> SbtRefinement:
    """Column and diagonal SBT counts from SYT counts of enlarged shapes.

    Columns k >= n use northeast corners to the right of k; columns k <= n
    are prefix sums of the diagonal counts, which come from the extended
    diagrams with a cell just left of the diagonal.
    """
    lam = check_shape(lam, SHIFTED)
    n = len(lam)
    ne = ne_corners(lam)
    diag: dict[int, int] = {1: g_extended(lam, 1)}
    for i in range(1, n):
        diag[i + 1] = g_extended(lam, i + 1) - diag[i]
    cols: dict[int, int] = {}
    acc = 0
    for k in range(1, n + 1):
        acc += diag[k]
        cols[k] = acc
    for k in range(n, lam[0] + 1):
        val = sum(g(add_cell(lam, x, SHIFTED)) for x in ne if x[1] > k)
        if k == n:
            assert val == cols[n], f"column {n} counts disagree for {lam}"
        cols[k] = val
    return SbtRefinement(sum(cols.values()), {}, cols, diag)


# -- uncrowding maps ------------------------------------------------------------


def _column(fill: dict, k: int) -> list[tuple[Cell, tuple[int, ...]]]:
    return sorted((x, v) for x, v in fill.items() if x[1] == k)


def uncrowd_right(t: Tableau) -> Tableau:
    """Push the larger entry of a double cell in column k >= n one column right.

    It replaces the smallest entry c > b of column k+1 as a second entry in
    that cell; if there is none, b starts a new cell at the bottom of column
    k+1 and the result is a standard tableau of the enlarged shape.
    """
    d = t.diagram
    if d.kind != SHIFTED:
        raise DomainError("uncrowd_right needs a shifted SBT")
    x = t.double_cell()
    if x is None:
        raise DomainError("tableau has no double cell")
    n = len(d.shape)
    k = x[1]
    if k < n:
        raise DomainError(f"double cell in column {k} < {n}")
    fill = t.as_dict()
    a, b = fill[x]
    col = _column(fill, k + 1)
    bigger = [(v[0], y) for y, v in col if v[0] > b]
    fill[x] = (a,)
    if bigger:
        _, y = min(bigger)
        fill[y] = tuple(sorted(fill[y] + (b,)))
        return Tableau.from_dict(d, fill)
    new = (len(col) + 1, k + 1)
    shape = add_cell(d.shape, new, SHIFTED)
    fill[new] = (b,)
    return Tableau.from_dict(Diagram.shifted(shape), fill)


def uncrowd_left(t: Tableau) -> Tableau:
    """Move the smaller entry a of an off-diagonal double cell in column k <= n
    into the cell of column k-1 holding the largest entry c < a.

    Comparing with a rather than b is what makes the map injective; on
    tableaux where both choices agree the results coincide.
    """
    d = t.diagram
    if d.kind != SHIFTED:
        raise DomainError("uncrowd_left needs a shifted SBT")
    x = t.double_cell()
    if x is None:
        raise DomainError("tableau has no double cell")
    n = len(d.shape)
    r, k = x
    if k > n:
        raise DomainError(f"double cell in column {k} > {n}")
    if r == k:
        raise DomainError("double cell on the diagonal")
    fill = t.as_dict()
    a, b = fill[x]
    smaller = [(v[-1], y) for y, v in _column(fill, k - 1) if v[-1] < a]
    _, y = max(smaller)
    fill[x] = (b,)
    fill[y] = tuple(sorted(fill[y] + (a,)))
    return Tableau.from_dict(d, fill)


def uncrowd_diag(t: Tableau) -> Tableau:
    """Turn a standard filling of lam plus (i+1, i) into an SBT of lam.

    With a in (i+1, i) and b in (i, i+1), a joins (i, i) if a < b and
    (i+1, i+1) otherwise.
    """
    d = t.diagram
    if d.kind != EXTENDED:
        raise DomainError("uncrowd_diag needs an extended diagram")
    row, _ = d.extra
    i = row - 1
    if i < 1:
        raise DomainError("the extra cell must sit in row 2 or lower")
    fill = t.as_dict()
    (a,) = fill.pop(d.extra)
    (b,) = fill[(i, i + 1)] if (i, i + 1) in fill else (None,)
    target = (i, i) if b is not None and a < b else (i + 1, i + 1)
    fill[target] = tuple(sorted(fill[target] + (a,)))
    return Tableau.from_dict(Diagram.shifted(d.shape), fill)
