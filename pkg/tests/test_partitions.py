"""Partition enumeration and diagram statistics."""

from math import factorial

import pytest

from localgw.partitions import (
    Partition,
    all_partitions,
    parse_partition,
    parse_partition_list,
    stats,
    zed,
)


def test_enumeration_order_and_counts():
    assert [p.parts for p in all_partitions(2)] == [(2,), (1, 1)]
    assert len(all_partitions(4)) == 5
    assert len(all_partitions(8)) == 22
    # reverse-lexicographic: (d) first, (1^d) last
    ps = all_partitions(6)
    assert ps[0].parts == (6,)
    assert ps[-1].parts == (1,) * 6
    assert all(ps[i].parts > ps[i + 1].parts for i in range(len(ps) - 1))


def test_rejects_nonpositive_degree():
    with pytest.raises(ValueError):
        all_partitions(0)
    with pytest.raises(ValueError):
        all_partitions(-3)


def test_zed_examples():
    assert zed(Partition((2, 1, 1))) == 4
    for d in range(1, 7):
        assert zed(Partition((d,))) == d
        assert zed(Partition((1,) * d)) == factorial(d)


def test_stats_examples():
    assert stats(Partition((3, 2, 2, 1, 1)))["conjugate"] == Partition((5, 3, 1))
    assert stats(Partition((2,)))["total_content"] == 1
    st = stats(Partition((2, 1)))
    assert st["hooks"] == [1, 1, 3]
    assert st["n_lambda"] == 1
    conj = st["conjugate"]
    assert conj.n_stat() == 1
    assert Partition((2, 1)).total_content() == 0
    assert sum(st["hooks"]) == 1 + 1 + 3


def test_diagram_identities_through_10():
    for d in range(1, 11):
        for lam in all_partitions(d):
            conj = lam.conjugate()
            assert conj.conjugate() == lam
            assert lam.total_content() == conj.n_stat() - lam.n_stat()
            assert sum(lam.hooks()) == lam.n_stat() + conj.n_stat() + d


def test_class_sizes_sum_to_group_order():
    for d in range(1, 11):
        assert sum(factorial(d) // zed(lam) for lam in all_partitions(d)) == factorial(d)


def test_parse_round_trip():
    lam = parse_partition("2,1,1")
    assert lam == Partition((2, 1, 1))
    assert str(lam) == "2,1,1"
    assert parse_partition_list("2;1,1") == [Partition((2,)), Partition((1, 1))]
    with pytest.raises(ValueError):
        parse_partition("")
    with pytest.raises(ValueError):
        parse_partition("0,1")
