"""Lower intervals [empty, lam] of Young's lattice and the shifted lattice."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .shapes import (
    SHIFTED,
    STRAIGHT,
    DomainError,
    Shape,
    border,
    check_shape,
    contract,
    shape_cells,
    trapezoid,
)


def _sub_shapes(lam: Shape, kind: str) -> list[Shape]:
    out: list[Shape] = []

    def rec(i: int, prefix: list[int]):
        out.append(tuple(prefix))
        if i == len(lam):
            return
        if kind == STRAIGHT:
            top = min(lam[i], prefix[-1]) if prefix else lam[i]
        else:
            top = min(lam[i], prefix[-1] - 1) if prefix else lam[i]
        for v in range(1, top + 1):
            prefix.append(v)
            rec(i + 1, prefix)
            prefix.pop()

    rec(0, [])
    return out


def removable_rows(mu: Sequence[int], kind: str) -> list[int]:
    """0-based rows whose last cell can be deleted."""
    rows = []
    for i, p in enumerate(mu):
        nxt = mu[i + 1] if i + 1 < len(mu) else 0
        if kind == STRAIGHT:
            ok = p > nxt
        else:
            ok = nxt == 0 or p - 1 > nxt
        if ok:
            rows.append(i)
    return rows


def remove_from_row(mu: Sequence[int], i: int) -> Shape:
    out = list(mu)
    out[i] -= 1
    return tuple(p for p in out if p)


def down_degree(mu: Sequence[int], kind: str = STRAIGHT) -> int:
    return len(removable_rows(mu, kind))


@dataclass(frozen=True)
class IntervalIndex:
    """All shapes below lam, ordered by size then lexicographically."""

    shape: Shape
    kind: str
    elements: tuple[Shape, ...]
    index: dict
    down: tuple[tuple[int, ...], ...]
    up: tuple[tuple[int, ...], ...]

    @property
    def ddeg(self) -> list[int]:
        return [len(d) for d in self.down]

    def __len__(self) -> int:
        return len(self.elements)


def enumerate_interval(lam: Sequence[int], kind: str = STRAIGHT) -> IntervalIndex:
    lam = check_shape(lam, kind)
    elems = sorted(_sub_shapes(lam, kind), key=lambda m: (sum(m), m))
    index = {m: k for k, m in enumerate(elems)}
    down = []
    up: list[list[int]] = [[] for _ in elems]
    for k, mu in enumerate(elems):
        ds = tuple(index[remove_from_row(mu, i)] for i in removable_rows(mu, kind))
        down.append(ds)
        for j in ds:
            up[j].append(k)
    return IntervalIndex(lam, kind, tuple(elems), index, tuple(down), tuple(tuple(u) for u in up))


@dataclass(frozen=True)
class ChainWeights:
    """Saturated chain counts from the bottom to mu and from mu to the top."""

    c_down: tuple[int, ...]
    c_up: tuple[int, ...]

    @property
    def maximal_chains(self) -> int:
        return self.c_down[-1]


def chain_weights(idx: IntervalIndex) -> ChainWeights:
    n = len(idx.elements)
    c_down = [0] * n
    c_down[0] = 1
    for k in range(1, n):
        c_down[k] = sum(c_down[j] for j in idx.down[k])
    c_up = [0] * n
    c_up[n - 1] = 1
    for k in range(n - 2, -1, -1):
        c_up[k] = sum(c_up[j] for j in idx.up[k])
    return ChainWeights(tuple(c_down), tuple(c_up))


def r_counts(lam: Sequence[int], kind: str = SHIFTED, method: str = "dp") -> tuple[int, int]:
    """(R, R_plus): interval size and total down-degree.

    ``dp`` runs a row-by-row transfer over the value of the current part;
    ``enumerate`` builds the whole interval.
    """
    lam = check_shape(lam, kind)
    if method == "enumerate":
        idx = enumerate_interval(lam, kind)
        return len(idx), sum(idx.ddeg)
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")
    if not lam:
        return 1, 0
    # state: value u of the current row -> (count, total down-degree so far)
    state = {u: (1, 0) for u in range(lam[0] + 1)}
    for i in range(1, len(lam)):
        nxt: dict[int, list[int]] = {}
        for u, (cnt, dd) in state.items():
            if kind == STRAIGHT:
                top = min(u, lam[i])
            else:
                top = min(u - 1, lam[i]) if u > 0 else 0
            for v in range(top + 1):
                if kind == STRAIGHT:
                    rem = u > v
                else:
                    rem = u > 0 and (v == 0 or u - 1 > v)
                acc = nxt.setdefault(v, [0, 0])
                acc[0] += cnt
                acc[1] += dd + (cnt if rem else 0)
        state = {v: (c, d) for v, (c, d) in nxt.items()}
    total = sum(c for c, _ in state.values())
    plus = sum(d + (c if u > 0 else 0) for u, (c, d) in state.items())
    return total, plus


def r_plus_via_border(lam: Sequence[int]) -> int:
    """Total down-degree as a sum of interval sizes of contracted shapes."""
    lam = check_shape(lam, SHIFTED)
    return sum(r_counts(contract(lam, x), SHIFTED)[0] for x in border(lam))


def trapezoid_closed(N: int, n: int) -> tuple[int, int, Fraction]:
    """(R, R_plus, E_X) for the trapezoid (N, N-2, ..., N-2n+2)."""
    lam = trapezoid(N, n)
    size = sum(lam)
    r = comb(N + 1, n)
    plus = Fraction(size, N + 1) * r
    assert plus.denominator == 1
    return r, int(plus), Fraction(size, N + 1)


def antichain_counts(lam: Sequence[int], kind: str = SHIFTED) -> list[int]:
    """Number of antichains of each size in the cell poset of lam.

    Two cells are comparable exactly when one is weakly southeast of the
    other, so an antichain is a set of cells with strictly increasing rows
    and strictly decreasing columns.
    """
    lam = check_shape(lam, kind)
    cells = shape_cells(lam, kind)
    counts = [0] * (len(cells) + 1)

    def rec(start: int, last_row: int, last_col: int, size: int):
        counts[size] += 1
        for k in range(start, len(cells)):
            r, c = cells[k]
            if r > last_row and c < last_col:
                rec(k + 1, r, c, size + 1)

    rec(0, 0, 10**9, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def antichain_average(lam: Sequence[int], kind: str = SHIFTED) -> Fraction:
    counts = antichain_counts(lam, kind)
    return Fraction(sum(k * c for k, c in enumerate(counts)), sum(counts))


def stembridge_pair(m: int, n: int) -> tuple[Shape, Shape]:
    """The trapezoid (m+n-1, m+n-3, ..., n-m+1) and the rectangle (n^m)."""
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
    return trapezoid(m + n - 1, m), (n,) * m
