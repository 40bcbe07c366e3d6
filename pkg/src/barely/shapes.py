"""Partitions, strict partitions, diagrams and their geometry.

Shapes are plain tuples of positive integers.  Cells are ``(row, col)``
pairs, 1-based.  A shifted diagram puts row ``i`` in columns
``i .. i + lam_i - 1``; an extended shifted diagram adds one cell
``(i, i - 1)`` just left of the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

Shape = tuple[int, ...]
Cell = tuple[int, int]

STRAIGHT = "straight"
SHIFTED = "shifted"
EXTENDED = "extended"


class DomainError(ValueError):
    """Input outside the domain of an operation."""


# -- validation and parsing ------------------------------------------------


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def is_strict(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] > parts[i + 1] for i in range(len(parts) - 1)
    )


def check_shape(lam: Sequence[int], kind: str = STRAIGHT) -> Shape:
    lam = tuple(int(p) for p in lam)
    if kind == STRAIGHT:
        if not is_partition(lam):
            raise DomainError(f"{lam} is not a partition")
    elif kind in (SHIFTED, EXTENDED):
        if not is_strict(lam):
            raise DomainError(f"{lam} is not a strict partition")
    else:
        raise DomainError(f"unknown shape kind {kind!r}")
    return lam


def parse_shape(text: str, kind: str = STRAIGHT) -> Shape:
    """Parse "8,6,5,3" into (8, 6, 5, 3); the empty string is the empty shape."""
    text = text.strip()
    if not text:
        return ()
    parts = []
    pos = 0
    for piece in text.split(","):
        stripped = piece.strip()
        if not stripped.isdigit():
            raise DomainError(f"bad part {piece!r} at position {pos} in {text!r}")
        parts.append(int(stripped))
        pos += len(piece) + 1
    return check_shape(parts, kind)


def format_shape(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def conjugate(lam: Sequence[int]) -> Shape:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def add_shapes(lam: Sequence[int], mu: Sequence[int]) -> Shape:
    """Componentwise sum, padding the shorter one with zeros."""
    n = max(len(lam), len(mu))
    a = list(lam) + [0] * (n - len(lam))
    b = list(mu) + [0] * (n - len(mu))
    return tuple(x + y for x, y in zip(a, b) if x + y)


def staircase(d: int) -> Shape:
    """delta_d = (d-1, d-2, ..., 1)."""
    return tuple(range(d - 1, 0, -1))


def rect_staircase(d: int, a: int, b: int) -> Shape:
    """delta_d with every cell blown up to an a-by-b block."""
    return tuple(b * p for p in staircase(d) for _ in range(a))


# -- enumeration of shapes ------------------------------------------------


def partitions(n: int, max_part: int | None = None) -> Iterator[Shape]:
    """Partitions of n in lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, max_part) + 1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def strict_partitions(n: int, max_part: int | None = None) -> Iterator[Shape]:
    """Strict partitions of n in lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, max_part) + 1):
        for rest in strict_partitions(n - first, first - 1):
            yield (first,) + rest


# -- diagrams ---------------------------------------------------------------


@dataclass(frozen=True)
class Diagram:
    """A straight, shifted or extended shifted diagram."""

    kind: str
    shape: Shape
    extra: Cell | None = None

    def __post_init__(self):
        object.__setattr__(self, "shape", check_shape(self.shape, self.kind))
        if self.kind == EXTENDED:
            if self.extra is None:
                raise DomainError("extended diagram needs its extra cell")
            i, j = self.extra
            n = len(self.shape)
            if j != i - 1 or not 1 <= i <= n:
                raise DomainError(f"extra cell {self.extra} must be (i, i-1) with 1 <= i <= {n}")
        elif self.extra is not None:
            raise DomainError("only extended diagrams carry an extra cell")

    @classmethod
    def straight(cls, lam) -> "Diagram":
        return cls(STRAIGHT, tuple(lam))

    @classmethod
    def shifted(cls, lam) -> "Diagram":
        return cls(SHIFTED, tuple(lam))

    @classmethod
    def extended(cls, lam, i: int) -> "Diagram":
        """Shifted diagram of lam with the cell (i, i-1) added."""
        return cls(EXTENDED, tuple(lam), (i, i - 1))

    def cells(self) -> list[Cell]:
        """Cells in row-major order."""
        out: list[Cell] = []
        for r, p in enumerate(self.shape, start=1):
            start = 1 if self.kind == STRAIGHT else r
            if self.extra is not None and self.extra[0] == r:
                out.append(self.extra)
            out.extend((r, c) for c in range(start, start + p))
        return out

    def __len__(self) -> int:
        return sum(self.shape) + (1 if self.extra else 0)


def shape_cells(lam: Sequence[int], kind: str = STRAIGHT) -> list[Cell]:
    out = []
    for r, p in enumerate(lam, start=1):
        start = 1 if kind == STRAIGHT else r
        out.extend((r, c) for c in range(start, start + p))
    return out


def cell_in_shape(cell: Cell, lam: Sequence[int], kind: str = STRAIGHT) -> bool:
    r, c = cell
    if r < 1 or r > len(lam):
        return False
    start = 1 if kind == STRAIGHT else r
    return start <= c < start + lam[r - 1]


def add_cell(lam: Sequence[int], cell: Cell, kind: str = STRAIGHT) -> Shape:
    """The shape with ``cell`` added; DomainError unless it is an addable cell."""
    r, c = cell
    lam = list(lam)
    if r == len(lam) + 1:
        lam.append(0)
    if not 1 <= r <= len(lam):
        raise DomainError(f"cannot add {cell}")
    start = 1 if kind == STRAIGHT else r
    if c != start + lam[r - 1]:
        raise DomainError(f"{cell} is not at the end of row {r}")
    lam[r - 1] += 1
    out = tuple(lam)
    check_shape(out, kind)
    return out


# -- corners, border, contraction ----------------------------------------


def inner_corners(mu: Sequence[int]) -> list[Cell]:
    """Cells that can be added to the straight shape mu, top to bottom."""
    out = []
    for r in range(1, len(mu) + 2):
        cur = mu[r - 1] if r <= len(mu) else 0
        above = mu[r - 2] if r >= 2 else None
        if above is None or cur < above:
            out.append((r, cur + 1))
    return out


def ne_corners(lam: Sequence[int]) -> list[Cell]:
    """Addable cells (k, k + lam_k) with lam_k <= lam_{k-1} - 2, k <= n."""
    lam = check_shape(lam, SHIFTED)
    if not lam:
        raise DomainError("empty shape has no northeast corners")
    out = []
    for k in range(1, len(lam) + 1):
        if k == 1 or lam[k - 1] <= lam[k - 2] - 2:
            out.append((k, k + lam[k - 1]))
    return out


def border(lam: Sequence[int]) -> list[Cell]:
    """Cells (i, j) of the shifted shape with (i+1, j+1) outside it."""
    lam = check_shape(lam, SHIFTED)
    if not lam:
        raise DomainError("empty shape has no border")
    return [x for x in shape_cells(lam, SHIFTED) if not cell_in_shape((x[0] + 1, x[1] + 1), lam, SHIFTED)]


def contract(lam: Sequence[int], x: Cell) -> Shape:
    """The shape lambda(x) obtained by cutting out the border cell x."""
    lam = check_shape(lam, SHIFTED)
    if x not in border(lam):
        raise DomainError(f"{x} is not on the border of {lam}")
    n = len(lam)
    i, j = x
    if x == (n, n):
        parts = [p - 1 for p in lam[: n - 1]]
    else:
        parts = [p - 2 for p in lam[: i - 1]]
        for t in range(i + 1, n + 1):
            p = lam[t - 1]
            parts.append(p - 1 if p + t - 1 == j else p)
    return tuple(p for p in parts if p > 0)


# -- classification ---------------------------------------------------------


def is_balanced(mu: Sequence[int]) -> bool:
    """Every inner corner (i, j) satisfies l(j-1) + w(i-1) = wl."""
    if not mu:
        return True
    w, ell = mu[0], len(mu)
    return all(ell * (j - 1) + w * (i - 1) == w * ell for i, j in inner_corners(mu))


def shifted_offset(lam: Sequence[int]) -> tuple[int, ...] | None:
    """lam - delta_{n+1} if lam_n = 1 else lam - delta_n; None if not a partition."""
    n = len(lam)
    if n == 0:
        return ()
    if lam[-1] == 1:
        diff = [lam[i] - (n - i) for i in range(n)]
    else:
        diff = [lam[i] - (n - 1 - i) for i in range(n)]
    if any(d < 0 for d in diff) or any(diff[i] < diff[i + 1] for i in range(n - 1)):
        return None
    return tuple(d for d in diff if d)


def is_shifted_balanced(lam: Sequence[int]) -> bool:
    mu = shifted_offset(lam)
    return mu is not None and is_balanced(mu) and (not mu or mu[0] == len(mu))


def is_trapezoidal(lam: Sequence[int]) -> bool:
    return bool(lam) and all(lam[i] - lam[i + 1] == 2 for i in range(len(lam) - 1))


@dataclass(frozen=True)
class Classification:
    kind: str
    balanced: bool
    slope: Fraction | None = None
    trapezoidal: bool = False

    @property
    def label(self) -> str:
        if self.kind == STRAIGHT:
            return f"balanced(slope={self.slope})" if self.balanced else "none"
        tags = [t for t, on in (("balanced", self.balanced), ("trapezoidal", self.trapezoidal)) if on]
        return "+".join(tags) or "none"

    @property
    def predicted_cde(self) -> bool:
        return self.balanced or self.trapezoidal


def classify(lam: Sequence[int], kind: str = STRAIGHT) -> Classification:
    lam = check_shape(lam, kind)
    if kind == STRAIGHT:
        ok = is_balanced(lam)
        slope = Fraction(len(lam), lam[0]) if ok and lam else None
        return Classification(STRAIGHT, ok, slope)
    return Classification(SHIFTED, is_shifted_balanced(lam), None, is_trapezoidal(lam))


# -- shape families -------------------------------------------------------


def delta_sum(a: int, d: int, e: int) -> Shape:
    """delta_d + delta_e(a^a), requiring d > a(e-1) + 1."""
    if min(a, d, e) < 1:
        raise DomainError("need a, d, e >= 1")
    if not d > a * (e - 1) + 1:
        raise DomainError(f"need d > a(e-1)+1, got d={d}, a(e-1)+1={a * (e - 1) + 1}")
    return add_shapes(staircase(d), rect_staircase(e, a, a))


def trapezoid(N: int, n: int) -> Shape:
    """(N, N-2, ..., N-2n+2), requiring N - 2n + 2 >= 1."""
    if n < 1 or N - 2 * n + 2 < 1:
        raise DomainError(f"need n >= 1 and N-2n+2 >= 1, got N={N}, n={n}")
    return tuple(N - 2 * i for i in range(n))


def square_balanced(nu: Sequence[int]) -> int:
    """Side k of nu when nu is balanced with equal height and width; else error."""
    nu = check_shape(nu)
    if not is_balanced(nu) or (nu and nu[0] != len(nu)):
        raise DomainError(f"{nu} is not balanced with equal height and width")
    return len(nu)


def nu_from_composition(comp: Sequence[int]) -> Shape:
    """((a_1+...+a_l)^{a_1}, (a_2+...+a_l)^{a_2}, ..., a_l^{a_l})."""
    if any(c < 1 for c in comp):
        raise DomainError("composition parts must be positive")
    out = []
    for t in range(len(comp)):
        out.extend([sum(comp[t:])] * comp[t])
    return tuple(out)


def balanced_shifted_1(n: int, nu: Sequence[int]) -> Shape:
    """delta_{n+1} + nu with nu a balanced k-by-k shape, k < n."""
    k = square_balanced(nu)
    if not 0 <= k < n:
        raise DomainError(f"need 0 <= k < n, got k={k}, n={n}")
    return add_shapes(staircase(n + 1), nu)


def balanced_shifted_2(n: int, k: int, nu: Sequence[int]) -> Shape:
    """delta_{n+1} + (n-1-k)^n + nu with nu a balanced k-by-k shape."""
    if square_balanced(nu) != k:
        raise DomainError(f"{tuple(nu)} does not have side {k}")
    if not 0 <= k < n:
        raise DomainError(f"need 0 <= k < n, got k={k}, n={n}")
    return add_shapes(add_shapes(staircase(n + 1), (n - 1 - k,) * n), nu)


def rectangle(a: int, b: int) -> Shape:
    """(a^b): b rows of length a."""
    if a < 1 or b < 1:
        raise DomainError("rectangle sides must be positive")
    return (a,) * b


def make_family(name: str, *args) -> Shape:
    """Build a named shape family from integer (or shape) parameters."""
    builders = {
        "delta-sum": delta_sum,
        "trapezoid": trapezoid,
        "balanced-shifted-1": balanced_shifted_1,
        "balanced-shifted-2": balanced_shifted_2,
        "rect-staircase": lambda d, a, b: rect_staircase(d, a, b),
        "rectangle": rectangle,
    }
    if name not in builders:
        raise DomainError(f"unknown family {name!r}; choose from {sorted(builders)}")
    return builders[name](*args)


def recognize_delta_sum(lam: Sequence[int]) -> tuple[int, int, int] | None:
    """(a, d, e) with lam = delta_d + delta_e(a^a), if any."""
    n = len(lam)
    if n == 0:
        return None
    d = n + 1
    nu = [lam[i] - (n - i) for i in range(n)]
    if any(x < 0 for x in nu):
        return None
    nu = tuple(x for x in nu if x)
    if not nu:
        return (1, d, 1)
    for a in range(1, len(nu) + 1):
        if len(nu) % a or nu[-1] != a:
            continue
        e = len(nu) // a + 1
        if rect_staircase(e, a, a) == nu and d > a * (e - 1) + 1:
            return (a, d, e)
    return None
