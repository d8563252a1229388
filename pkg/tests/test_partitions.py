from itertools import product

import pytest
from hypothesis import given, strategies as st

from odefock.errors import NotWeaklyDecreasing
from odefock.partitions import (Partition, add_vertical_strip, make_partition,
                                partitions_up_to, remove_vertical_strip)


def test_normal_form_strips_trailing_zeros():
    assert make_partition([3, 2, 0, 0]) == (3, 2)
    assert make_partition([]) == ()
    assert make_partition([5]) == (5,)


def test_rejects_increasing_pair():
    with pytest.raises(NotWeaklyDecreasing):
        make_partition([2, 3])
    with pytest.raises(NotWeaklyDecreasing):
        make_partition([3, 0, 2])


def test_length_weight_part():
    lam = Partition((4, 2, 1))
    assert lam.length() == 3
    assert lam.weight() == 7
    assert lam.part(0) == 4
    assert lam.part(3) == 0


def test_string_round_trip():
    assert str(Partition((3, 2, 1))) == "3,2,1"
    assert str(Partition()) == "0"
    assert Partition.parse("3,2,1") == (3, 2, 1)
    assert Partition.parse("0") == ()
    assert Partition.parse("3,2,0") == (3, 2)


def test_add_strip_display_example():
    got = add_vertical_strip(Partition((3, 2)), 2, 3)
    assert got == [(4, 3), (4, 2, 1), (3, 3, 1)]


def test_add_strip_identity_and_small():
    assert add_vertical_strip(Partition(), 0, 2) == [()]
    assert add_vertical_strip(Partition((1,)), 2, 2) == [(2, 1)]


def test_add_strip_empty_when_size_exceeds_rows():
    assert add_vertical_strip(Partition((2, 1)), 3, 2) == []


def test_remove_strip_display_example():
    assert remove_vertical_strip(Partition((3, 2)), 1) == [(3, 1), (2, 2)]
    assert remove_vertical_strip(Partition((2,)), 0) == [(2,)]
    assert remove_vertical_strip(Partition((1, 1)), 2) == [()]


def _brute_force_add(lam, i, r):
    found = set()
    padded = tuple(lam.part(k) for k in range(r))
    for moves in product((0, 1), repeat=r):
        if sum(moves) != i:
            continue
        grown = tuple(a + m for a, m in zip(padded, moves))
        if all(a >= b for a, b in zip(grown, grown[1:])):
            found.add(Partition(grown))
    return found


def test_add_strip_against_brute_force():
    for r in range(1, 6):
        for lam in partitions_up_to(8, r):
            for i in range(r + 1):
                got = add_vertical_strip(lam, i, r)
                assert len(got) == len(set(got))
                assert set(got) == _brute_force_add(lam, i, r)


def test_add_then_remove_recovers_source():
    for r in range(1, 4):
        for lam in partitions_up_to(6, r):
            for i in range(r + 1):
                for mu in add_vertical_strip(lam, i, r):
                    assert lam in remove_vertical_strip(mu, i)


def test_canonical_order_is_descending():
    for r in range(1, 4):
        for lam in partitions_up_to(6, r):
            for i in range(r + 1):
                got = add_vertical_strip(lam, i, r)
                assert got == sorted(got, reverse=True)


part_lists = st.lists(st.integers(min_value=0, max_value=9), max_size=6)


@given(part_lists)
def test_normal_form_idempotent(parts):
    try:
        lam = make_partition(parts)
    except NotWeaklyDecreasing:
        return
    assert make_partition(lam) == lam
    assert Partition.parse(str(lam)) == lam


@given(part_lists, st.integers(min_value=0, max_value=4),
       st.integers(min_value=1, max_value=4))
def test_strip_results_are_columnwise_moves(parts, i, r):
    try:
        lam = make_partition(sorted(parts, reverse=True))
    except NotWeaklyDecreasing:
        return
    for mu in add_vertical_strip(lam, i, r):
        deltas = [mu.part(k) - lam.part(k) for k in range(max(len(mu), len(lam)))]
        assert all(d in (0, 1) for d in deltas)
        assert sum(deltas) == i
        assert mu.length() <= r
