import itertools
from collections import Counter

import pytest

from arrangement_spectra import InvalidInputError
from arrangement_spectra.cycletypes import (
    CycleType,
    cell_size,
    count_c,
    enumerate_types,
    falling_factorial,
    identity_type,
    integer_partitions,
    partition_count,
    partition_sum_check,
)
from arrangement_spectra.kperm import all_kpermutations, cycle_type


def test_k2_types():
    assert {t.compact() for t in enumerate_types(2)} == {"11", "2", "11'", "1'1'", "2'"}


def test_k1_types():
    assert [str(t) for t in enumerate_types(1)] == ["1", "1'"]


def test_k3_has_ten_types_identity_first():
    types = enumerate_types(3)
    assert len(types) == 10
    assert types[0] == identity_type(3)


def test_paper_ordering_is_a_permutation():
    for k in (3, 4):
        assert sorted(enumerate_types(k, "paper"), key=CycleType.sort_key) == enumerate_types(k)
    assert [t.compact() for t in enumerate_types(4, "paper")][:6] == ["1111", "112", "22", "13", "4", "1111'"]


def test_count_c():
    assert [count_c(k) for k in range(10)] == [1, 2, 5, 10, 20, 36, 65, 110, 185, 300]
    assert [partition_count(m) for m in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


@pytest.mark.parametrize("k", range(1, 11))
def test_enumeration_matches_convolution(k):
    types = enumerate_types(k)
    assert len(types) == count_c(k) == len(set(types))
    assert all(t.k == k for t in types)


def test_integer_partitions_order():
    assert list(integer_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_cell_size_examples():
    assert cell_size(CycleType((), (3,)), 5) == 12
    assert all(cell_size(identity_type(k), n) == 1 for k in range(1, 5) for n in range(k, 9))
    assert cell_size(CycleType((), (1, 1, 1)), 6) == 6


def test_cell_size_rejects_small_n():
    with pytest.raises(InvalidInputError):
        cell_size(identity_type(4), 3)


def test_partition_sums():
    assert partition_sum_check(5, 3)
    assert sum(cell_size(t, 3) for t in enumerate_types(3)) == 6
    assert sum(cell_size(t, 10) for t in enumerate_types(7)) == 604800
    assert falling_factorial(10, 7) == 604800
    assert falling_factorial(4, 0) == 1


@pytest.mark.parametrize("k", range(1, 5))
def test_cell_sizes_match_census(k):
    for n in range(k, 9):
        census = Counter(cycle_type(p) for p in all_kpermutations(n, k))
        for t in enumerate_types(k):
            assert cell_size(t, n) == census.get(t, 0)


def test_cell_size_monotone_and_zero_exactly_when_too_few_points():
    for k in range(1, 6):
        for t in enumerate_types(k):
            sizes = [cell_size(t, n) for n in range(k, 3 * k + 2)]
            assert sizes == sorted(sizes)
            for n, size in zip(range(k, 3 * k + 2), sizes):
                assert (size == 0) == (n - k < t.s)


def test_rendering_and_parsing():
    t = CycleType.from_mults({1: 2}, {2: 1})
    assert str(t) == "1 1 2'"
    assert t.compact() == "112'"
    assert CycleType.parse("1 1 2'") == t
    assert CycleType.parse_compact("112'") == t
    assert CycleType.parse_compact("21'1'") == CycleType((2,), (1, 1))
    assert t.cycle_mults == {1: 2} and t.path_mults == {2: 1} and t.s == 1


@pytest.mark.parametrize("text", ["", "0", "1 x", "2''"])
def test_parse_rejects(text):
    with pytest.raises(InvalidInputError):
        CycleType.parse(text)


def test_parts_are_normalized():
    assert CycleType((1, 2), (1, 3)) == CycleType((2, 1), (3, 1))
    assert len({CycleType(p, ()) for p in itertools.permutations((1, 2, 3))}) == 1
