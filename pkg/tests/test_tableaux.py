from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from barely.shapes import SHIFTED, STRAIGHT, Diagram, DomainError, partitions, strict_partitions
from barely.tableaux import (
    Tableau,
    count_sbt_shifted,
    count_sbt_straight,
    count_syt_formula,
    enumerate_sbt,
    enumerate_syt,
    hook_count,
    iter_sbt,
    iter_syt,
    sbt_refined_shifted,
    thrall_count,
    uncrowd_diag,
    uncrowd_left,
    uncrowd_right,
)


def shifted(shape, rows):
    """Tableau from rows of a shifted shape; a tuple entry is a double cell."""
    fill = {}
    for r, row in enumerate(rows, start=1):
        for c, v in enumerate(row, start=r):
            fill[(r, c)] = v
    return Tableau.from_dict(Diagram.shifted(shape), fill)


def test_syt_counts():
    assert hook_count((4, 3, 1)) == 70
    assert enumerate_syt(Diagram.straight((4, 3, 1))) == 70
    assert thrall_count((4, 3, 1)) == 12
    assert enumerate_syt(Diagram.shifted((4, 3, 1))) == 12
    assert enumerate_syt(Diagram.shifted((2, 1))) == 1
    assert count_syt_formula((3, 1), SHIFTED) == 2
    assert count_syt_formula((1,)) == 1


def test_sbt_counts():
    assert enumerate_sbt(Diagram.straight((2, 1))).total == 8
    assert enumerate_sbt(Diagram.shifted((2,))).total == 2
    assert enumerate_sbt(Diagram.straight((1,))).total == 1
    assert count_sbt_straight((2, 1)) == 8
    assert count_sbt_straight((2,)) == 2
    assert count_sbt_straight((1,)) == 1
    assert count_sbt_shifted((2,)) == 2
    # E(Y) = 6/5 for the trapezoid (4, 2)
    assert Fraction(count_sbt_shifted((4, 2)), 7 * thrall_count((4, 2))) == Fraction(6, 5)
    assert Fraction(count_sbt_shifted((3, 1)), 5 * thrall_count((3, 1))) == 1


def test_sbt_by_column_for_one_row():
    ref = enumerate_sbt(Diagram.shifted((2,)))
    assert ref.by_column == {1: 1, 2: 1}


def test_iterators_agree_with_counts():
    d = Diagram.shifted((4, 2))
    syts = list(iter_syt(d))
    assert len(syts) == enumerate_syt(d) and all(t.is_syt() for t in syts)
    sbts = list(iter_sbt(d))
    assert len(sbts) == enumerate_sbt(d).total and all(t.is_sbt() for t in sbts)


def test_tableau_json_round_trip():
    t = next(iter(iter_sbt(Diagram.shifted((3, 1)))))
    assert Tableau.from_json(t.to_json()) == t


@pytest.mark.parametrize("lam", [lam for n in range(1, 9) for lam in strict_partitions(n)])
def test_refined_counts_match_enumeration(lam):
    ref = enumerate_sbt(Diagram.shifted(lam))
    fast = sbt_refined_shifted(lam)
    assert fast.by_column == {k: ref.by_column.get(k, 0) for k in fast.by_column}
    assert fast.diagonal == ref.diagonal
    assert fast.total == ref.total


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9).flatmap(lambda n: st.sampled_from(list(partitions(n)))))
def test_straight_sbt_formulas(lam):
    e = enumerate_sbt(Diagram.straight(lam)).total
    assert count_sbt_straight(lam) == e == count_sbt_straight(lam, "content")


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 11).flatmap(lambda n: st.sampled_from(list(strict_partitions(n)))))
def test_shifted_sbt_formulas(lam):
    e = enumerate_sbt(Diagram.shifted(lam)).total
    assert count_sbt_shifted(lam) == e == count_sbt_shifted(lam, "ne-sum")


# -- uncrowding on fixed tableaux -------------------------------------------------

SHAPE = (7, 5, 4, 2)


def test_uncrowd_right_moves_into_next_column():
    t = shifted(SHAPE, [[1, 2, 3, 6, 7, 8, 12], [4, 5, 9, 11, 17], [10, 13, (14, 16), 18], [15, 19]])
    want = shifted(SHAPE, [[1, 2, 3, 6, 7, 8, 12], [4, 5, 9, 11, (16, 17)], [10, 13, 14, 18], [15, 19]])
    assert uncrowd_right(t) == want


def test_uncrowd_right_grows_the_shape():
    t = shifted(SHAPE, [[1, 2, 3, 6, 7, 8, 19], [4, 5, 9, 11, 14], [10, 12, 13, 15], [16, (17, 18)]])
    out = uncrowd_right(t)
    assert out.diagram.shape == (7, 5, 4, 3)
    assert out == shifted((7, 5, 4, 3), [[1, 2, 3, 6, 7, 8, 19], [4, 5, 9, 11, 14], [10, 12, 13, 15], [16, 17, 18]])
    assert out.is_syt()


def test_uncrowd_right_single_row():
    t = shifted((2,), [[(1, 2), 3]])
    assert uncrowd_right(t) == shifted((2,), [[1, (2, 3)]])


def test_uncrowd_left_moves_double_cell_down():
    t = shifted(SHAPE, [[1, 2, 3, 5, 8, 10, 11], [4, 6, (9, 12), 15, 16], [7, 13, 17, 19], [14, 18]])
    want = shifted(SHAPE, [[1, 2, 3, 5, 8, 10, 11], [4, 6, 12, 15, 16], [(7, 9), 13, 17, 19], [14, 18]])
    assert uncrowd_left(t) == want


def test_uncrowd_left_rejects_diagonal():
    t = shifted((3, 1), [[1, 2, 3], [(4, 5)]])
    with pytest.raises(DomainError):
        uncrowd_left(t)


def test_uncrowd_left_is_injective_where_the_larger_entry_rule_is_not():
    a = shifted((3, 2, 1), [[1, 2, (3, 5)], [4, 6], [7]])
    b = shifted((3, 2, 1), [[1, 2, (4, 5)], [3, 6], [7]])
    assert uncrowd_left(a) != uncrowd_left(b)


def extended(shape, i, rows, extra):
    d = Diagram.extended(shape, i)
    fill = {d.extra: extra}
    for r, row in enumerate(rows, start=1):
        for c, v in enumerate(row, start=r):
            fill[(r, c)] = v
    return Tableau.from_dict(d, fill)


def test_uncrowd_diag_splits_extra_cell():
    left = extended((4, 3, 1), 3, [[1, 2, 4, 7], [3, 6, 9], [8]], 5)
    assert uncrowd_diag(left) == shifted((4, 3, 1), [[1, 2, 4, 7], [(3, 5), 6, 9], [8]])
    right = extended((4, 3, 1), 3, [[1, 2, 4, 7], [3, 5, 9], [8]], 6)
    assert uncrowd_diag(right) == shifted((4, 3, 1), [[1, 2, 4, 7], [3, 5, 9], [(6, 8)]])


def test_uncrowd_needs_a_double_cell():
    t = shifted((2,), [[1, 2]])
    with pytest.raises(DomainError):
        uncrowd_right(t)
    with pytest.raises(DomainError):
        uncrowd_right(Tableau.from_dict(Diagram.straight((2,)), {(1, 1): (1, 2), (1, 2): 3}))
