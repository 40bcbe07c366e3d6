"""Down-degree expectations E(X) and E(Y), the CDE test, and scans."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from . import interval, tableaux
from .shapes import (
    SHIFTED,
    STRAIGHT,
    Diagram,
    check_shape,
    classify,
    is_shifted_balanced,
    is_trapezoidal,
    partitions,
    recognize_delta_sum,
    shifted_offset,
    strict_partitions,
)


@dataclass(frozen=True)
class Expectations:
    e_x: Fraction
    e_y: Fraction

    @property
    def cde(self) -> bool:
        return self.e_x == self.e_y


def expect_x(lam: Sequence[int], kind: str = STRAIGHT, method: str = "dp") -> Fraction:
    """Mean down-degree over the interval, uniformly weighted.

    ``dp`` and ``enumerate`` count the interval; ``antichain`` averages
    antichain sizes of the cell poset instead.
    """
    lam = check_shape(lam, kind)
    if method == "antichain":
        return interval.antichain_average(lam, kind)
    r, plus = interval.r_counts(lam, kind, method)
    return Fraction(plus, r)


def expect_y(lam: Sequence[int], kind: str = STRAIGHT, method: str = "formula") -> Fraction:
    """Mean down-degree weighted by maximal chains through each element.

    ``formula`` uses closed-form SBT and SYT counts, ``chains`` the chain
    counts of the interval, ``sbt`` brute-force tableau enumeration.
    """
    lam = check_shape(lam, kind)
    if not lam:
        return Fraction(0)
    size = sum(lam)
    if method == "formula":
        if kind == STRAIGHT:
            sbt = tableaux.count_sbt_straight(lam)
        else:
            sbt = tableaux.count_sbt_shifted(lam)
        return Fraction(sbt, (size + 1) * tableaux.count_syt_formula(lam, kind))
    if method == "chains":
        idx = interval.enumerate_interval(lam, kind)
        w = interval.chain_weights(idx)
        num = sum(d * a * b for d, a, b in zip(idx.ddeg, w.c_down, w.c_up))
        return Fraction(num, (size + 1) * w.maximal_chains)
    if method == "sbt":
        d = Diagram(kind, lam)
        return Fraction(tableaux.enumerate_sbt(d).total, (size + 1) * tableaux.enumerate_syt(d))
    raise ValueError(f"unknown method {method!r}")


def expectations(lam, kind=STRAIGHT, x_method="dp", y_method="formula") -> Expectations:
    return Expectations(expect_x(lam, kind, x_method), expect_y(lam, kind, y_method))


def is_cde(lam, kind=STRAIGHT) -> tuple[bool, Expectations]:
    ex = expectations(lam, kind)
    return ex.cde, ex


@dataclass(frozen=True)
class ClosedForm:
    value: Fraction
    sources: tuple[str, ...]


def closed_form(lam: Sequence[int], kind: str = STRAIGHT) -> ClosedForm | None:
    """The common value of E(X) and E(Y) predicted for known CDE families."""
    lam = check_shape(lam, kind)
    if not lam:
        return None
    hits: list[tuple[str, Fraction]] = []
    if kind == STRAIGHT:
        if classify(lam, STRAIGHT).balanced:
            w, ell = lam[0], len(lam)
            hits.append(("balanced", Fraction(w * ell, w + ell)))
    else:
        n = len(lam)
        ds = recognize_delta_sum(lam)
        if ds is not None:
            a, d, e = ds
            hits.append(("delta-sum", Fraction(d + a * (e - 1), 4)))
        if is_shifted_balanced(lam):
            mu = shifted_offset(lam)
            if lam[-1] == 1:
                k = mu[0] if mu else 0
                hits.append(("shifted-balanced-staircase", Fraction(n + 1 + k, 4)))
            else:
                hits.append(("shifted-balanced-square", Fraction(n, 2)))
            hits.append(("shifted-balanced", Fraction(lam[0] + 1, 4)))
        if is_trapezoidal(lam):
            hits.append(("trapezoid", Fraction(sum(lam), lam[0] + 1)))
    if not hits:
        return None
    values = {v for _, v in hits}
    assert len(values) == 1, f"closed forms disagree for {lam}: {hits}"
    return ClosedForm(hits[0][1], tuple(s for s, _ in hits))


@dataclass(frozen=True)
class ScanRecord:
    size: int
    shape: tuple[int, ...]
    kind: str
    e_x: Fraction
    e_y: Fraction
    cde: bool
    classification: str
    conjecture_ok: bool


def scan_one(args: tuple[tuple[int, ...], str]) -> ScanRecord:
    lam, kind = args
    ex = expectations(lam, kind)
    cls = classify(lam, kind)
    return ScanRecord(
        size=sum(lam),
        shape=lam,
        kind=kind,
        e_x=ex.e_x,
        e_y=ex.e_y,
        cde=ex.cde,
        classification=cls.label,
        conjecture_ok=ex.cde == cls.predicted_cde,
    )


def scan_shapes(max_size: int, kind: str = STRAIGHT, min_size: int = 1) -> Iterator[tuple[int, ...]]:
    gen = partitions if kind == STRAIGHT else strict_partitions
    for n in range(min_size, max_size + 1):
        yield from gen(n)


def scan(
    max_size: int,
    kind: str = STRAIGHT,
    workers: int = 1,
    min_size: int = 1,
    on_counterexample: Callable[[ScanRecord], None] | None = None,
) -> Iterator[ScanRecord]:
    """Check "CDE iff predicted family" for every shape up to max_size.

    Records come out in (size, lexicographic) order regardless of workers.
    """
    jobs = ((lam, kind) for lam in scan_shapes(max_size, kind, min_size))
    if workers <= 1:
        results: Iterator[ScanRecord] = map(scan_one, jobs)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(scan_one, jobs, chunksize=32)
    try:
        for rec in results:
            if not rec.conjecture_ok and on_counterexample is not None:
                on_counterexample(rec)
            yield rec
    finally:
        if pool is not None:
            pool.shutdown()


@dataclass
class ScanReport:
    records: list[ScanRecord]

    @property
    def counterexamples(self) -> list[ScanRecord]:
        return [r for r in self.records if not r.conjecture_ok]

    @property
    def cde_shapes(self) -> list[ScanRecord]:
        return [r for r in self.records if r.cde]


def run_scan(max_size: int, kind: str = STRAIGHT, workers: int = 1, **kw) -> ScanReport:
    return ScanReport(list(scan(max_size, kind, workers, **kw)))
