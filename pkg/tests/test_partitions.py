from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st
from sympy.utilities.iterables import partitions as sympy_partitions

from orbitres.partitions import (
    Composition,
    Partition,
    PartitionError,
    dominates,
    dual,
    ordering_count,
    orderings,
    parse_parts,
    partitions_of,
    reversal_classes,
)


def young_transpose(parts):
    """Oracle: transpose the set of boxes and count row lengths."""
    boxes = {(i, j) for i, p in enumerate(parts) for j in range(p)}
    flipped = {(j, i) for i, j in boxes}
    rows = {}
    for i, _ in flipped:
        rows[i] = rows.get(i, 0) + 1
    return [rows[i] for i in sorted(rows)]


def all_partitions(n):
    for p in sympy_partitions(n):
        yield Partition.from_unsorted([k for k, m in p.items() for _ in range(m)])


partition_strategy = st.lists(st.integers(1, 7), max_size=8).map(Partition.from_unsorted)


def test_partition_invariants():
    with pytest.raises(PartitionError):
        Partition([1, 2])
    with pytest.raises(PartitionError):
        Partition([2, 0])
    assert Partition().n == 0
    assert Partition([3, 2, 1]).n == 6


@pytest.mark.parametrize("text, parts", [
    ("3,2,1", [3, 2, 1]),
    ("3,1^5", [3, 1, 1, 1, 1, 1]),
    ("[2,2]", [2, 2]),
    ("", []),
    (" 4 , 2^2 ", [4, 2, 2]),
])
def test_parse_parts(text, parts):
    assert parse_parts(text) == parts


def test_parse_reports_position():
    with pytest.raises(PartitionError, match="position 2"):
        parse_parts("3,x")


def test_dual_examples():
    assert dual(Partition([3, 2, 1])) == Partition(young_transpose([3, 2, 1])) == Partition([3, 2, 1])
    assert dual(Partition([1, 1, 1])) == Partition([3])
    assert dual(Partition()) == Partition()
    for n in range(1, 10):
        d = Partition([2] + [1] * (n - 1))
        assert d.n == n + 1
        assert dual(d) == Partition(young_transpose(d.parts)) == Partition([n, 1])


def test_dominance_examples():
    assert dominates(Partition([3, 1]), Partition([2, 2]))
    assert not dominates(Partition([2, 2]), Partition([3, 1]))
    for n in range(1, 8):
        assert dominates(Partition([n]), Partition([1] * n))
    with pytest.raises(PartitionError, match="incomparable sizes"):
        dominates(Partition([2]), Partition([1]))


def test_partitions_of_matches_sympy():
    for n in range(0, 13):
        mine = list(partitions_of(n))
        assert len(mine) == len(set(mine))
        assert set(mine) == set(all_partitions(n)) if n else mine == [Partition()]


@given(partition_strategy)
def test_dual_matches_box_transpose(d):
    assert dual(d).parts == tuple(young_transpose(d.parts))


def test_dual_involution_and_antitone_exhaustive():
    for n in range(0, 11):
        ps = list(partitions_of(n))
        for p in ps:
            assert dual(dual(p)) == p
        for p in ps:
            for q in ps:
                assert dominates(p, q) == dominates(dual(q), dual(p))


def test_orderings_examples():
    assert len(orderings(Partition([3, 2, 1]))) == 6
    assert orderings(Partition([2, 2])) == [Composition([2, 2])]
    for n in range(2, 8):
        assert orderings(Partition([n, 1])) == [Composition([1, n]), Composition([n, 1])]


@given(st.lists(st.integers(1, 4), max_size=6).map(Partition.from_unsorted))
def test_orderings_against_permutations(s):
    brute = sorted(set(permutations(s.parts)))
    got = [c.parts for c in orderings(s)]
    assert got == brute
    count = factorial(len(s))
    for v in set(s.parts):
        count //= factorial(s.parts.count(v))
    assert len(got) == count == ordering_count(s)


def test_reversal_classes_examples():
    classes = reversal_classes(orderings(Partition([3, 2, 1])))
    assert len(classes) == 3 and all(len(c) == 2 for c in classes)
    assert reversal_classes(orderings(Partition([2, 2]))) == [(Composition([2, 2]),)]
    classes = reversal_classes(orderings(Partition([5, 1])))
    assert classes == [(Composition([1, 5]), Composition([5, 1]))]


@given(st.lists(st.integers(1, 4), max_size=6).map(Partition.from_unsorted))
def test_reversal_class_accounting(s):
    comps = orderings(s)
    classes = reversal_classes(comps)
    assert sum(len(c) for c in classes) == len(comps)
    for c in classes:
        assert len(c) in (1, 2)
        if len(c) == 1:
            assert c[0] == c[0].reverse()
        else:
            assert c[1] == c[0].reverse()
