from math import comb

import pytest

from regdigraph.transforms import (
    TransformMismatch,
    assemble_unlabeled_table,
    bell_numbers,
    bell_table,
    bell_transform,
    compositions,
    egf_table,
    multiset_transform,
    partition_numbers,
    partitions,
    partitions_into_parts,
    stirling2,
    verify_egf,
)


def bell_by_binomial_recurrence(upto):
    # B(n+1) = sum_k C(n, k) B(k)
    b = [1]
    for n in range(upto):
        b.append(sum(comb(n, k) * b[k] for k in range(n + 1)))
    return b


def partitions_by_enumeration(n):
    return sum(1 for _ in partitions(n))


def test_partition_and_composition_generators():
    assert list(partitions(4, 2)) == [(3, 1), (2, 2)]
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert [partitions_by_enumeration(n) for n in range(10)] == partition_numbers(9)
    assert partition_numbers(8) == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_multiset_transform_examples():
    assert multiset_transform([1, 2, 5, 14], 4, 2) == 8
    assert multiset_transform([1, 2, 5, 14, 50], 5, 3) == 8
    assert multiset_transform([1], 1, 1) == 1
    for n in range(1, 10):
        for c in range(1, n + 1):
            assert multiset_transform([1] * n, n, c) == partitions_into_parts(n, c) == sum(1 for _ in partitions(n, c))


def test_multiset_transform_needs_prefix():
    with pytest.raises(ValueError):
        multiset_transform([1, 2], 4, 2)


def test_bell_transform_examples():
    assert bell_transform([1, 2, 14, 201], 4, 2) == 68
    assert bell_transform([1, 2, 14, 201, 4704], 5, 2) == 1285
    for n in range(1, 9):
        for c in range(1, n + 1):
            assert bell_transform([1] * n, n, c) == stirling2(n, c)


def test_bell_transform_composition_sum_divisible():
    from math import factorial

    from regdigraph.transforms import multinomial

    seq = [1, 2, 14, 201, 4704, 160890, 7538040, 7, 5]
    for n in range(1, 10):
        for c in range(1, n + 1):
            raw = 0
            for comp in compositions(n, c):
                term = multinomial(n, comp)
                for part in comp:
                    term *= seq[part - 1]
                raw += term
            assert raw % factorial(c) == 0
            assert bell_transform(seq, n, c) == raw // factorial(c)


def test_verify_egf():
    table = verify_egf([1, 2, 14, 201, 4704, 160890, 7538040], 7)
    assert table.row(7) == [7538040, 1422288, 160594, 13755, 910, 42, 1]
    assert table.total(7) == 9135630
    k1 = verify_egf([1] * 6, 6)
    assert [k1.total(n) for n in range(1, 7)] == [1, 2, 5, 15, 52, 203] == bell_by_binomial_recurrence(6)[1:]
    assert verify_egf([1], 1).entries == {(1, 1): 1}


def test_egf_and_bell_agree_on_arbitrary_input():
    seq = [3, 1, 4, 1, 5, 9, 2, 6]
    assert egf_table(seq, 8) == bell_table(seq, 8)


def test_bell_numbers_oracles():
    assert bell_numbers(8) == bell_by_binomial_recurrence(8)


def test_assemble_unlabeled_table(records_by_n):
    table = assemble_unlabeled_table({n: records_by_n[n] for n in range(1, 8)})
    assert [table.total(n) for n in range(0, 7)] == [1, 1, 3, 8, 25, 85, 397]
    assert table.row(7) == [1601, 435, 108, 28, 8, 2, 1]
    for n in range(2, 8):
        assert table[n, n] == 1
        assert table[n, n - 1] == 2


def test_assemble_detects_mismatch(records_by_n):
    broken = {n: list(records_by_n[n]) for n in range(1, 5)}
    broken[4] = broken[4][:-1]
    with pytest.raises(TransformMismatch):
        assemble_unlabeled_table(broken)


def test_assemble_one_regular():
    from regdigraph.enumerate import enumerate_unlabeled

    table = assemble_unlabeled_table({n: enumerate_unlabeled(n, 1) for n in range(1, 9)})
    assert [table.total(n) for n in range(1, 9)] == partition_numbers(8)[1:]
