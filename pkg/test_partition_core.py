#!/usr/bin/env python3
"""
Tests for partitions, the weight/partition dictionary and LR coefficients
"""

import pytest

from src.representation.errors import InternalInconsistencyError, PartitionError
from src.representation.partition_core import (
    EMPTY,
    Isotypic,
    Partition,
    hooks_and_contents,
    lr_coefficient,
    partition_to_weight,
    partitions_of,
    partitions_up_to,
    skew_expansion,
    transpose,
    weight_to_partition,
)


def P(*parts):
    return Partition(parts)


def is_horizontal_strip(lam: Partition, mu: Partition) -> bool:
    """λ/μ has at most one box per column"""
    return lam.contains(mu) and all(lam[i + 1] <= mu[i] for i in range(lam.length))


class TestPartition:
    def test_trailing_zeros_are_trimmed(self):
        assert P(4, 2, 0, 0) == P(4, 2)
        assert P(4, 2, 0).length == 2

    def test_rejects_increasing_parts(self):
        with pytest.raises(PartitionError):
            P(1, 2)

    def test_rejects_negative_parts(self):
        with pytest.raises(PartitionError):
            P(2, -1)

    @pytest.mark.parametrize("text,expected", [
        ("4,2", (4, 2)),
        ("4,2,0", (4, 2)),
        ("", ()),
        ("0", ()),
        ("1,1,1", (1, 1, 1)),
    ])
    def test_parse(self, text, expected):
        assert Partition.parse(text).parts == expected

    def test_parse_rejects_garbage(self):
        with pytest.raises(PartitionError):
            Partition.parse("2,x")
        with pytest.raises(PartitionError):
            Partition.parse("1,3")

    def test_padded_too_long(self):
        assert P(2, 1).padded(4) == (2, 1, 0, 0)
        with pytest.raises(PartitionError, match="too long"):
            P(1, 1, 1).padded(2)

    def test_str(self):
        assert str(EMPTY) == "∅"
        assert str(P(4, 2)) == "(4,2)"

    def test_indexing_past_the_end(self):
        assert P(3, 1)[5] == 0


class TestWeightDictionary:
    def test_weight_to_partition(self):
        assert weight_to_partition((1, 0, 2)) == P(3, 2, 2)
        assert weight_to_partition((0, 0)) == EMPTY
        assert weight_to_partition((2, 2, 2, 0)) == P(6, 4, 2)

    def test_round_trip(self):
        for lam in partitions_up_to(6, max_length=3):
            assert weight_to_partition(partition_to_weight(lam, 3)) == lam

    def test_negative_coefficient(self):
        with pytest.raises(PartitionError):
            weight_to_partition((1, -1))

    def test_transpose(self):
        assert transpose(P(3, 1)) == P(2, 1, 1)
        assert transpose(EMPTY) == EMPTY
        for lam in partitions_up_to(7):
            assert transpose(transpose(lam)) == lam


class TestEnumeration:
    def test_partitions_of(self):
        assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert [p.parts for p in partitions_of(4, max_length=2)] == [(4,), (3, 1), (2, 2)]
        assert [p.parts for p in partitions_of(4, max_part=1)] == [(1, 1, 1, 1)]

    def test_partition_counts(self):
        assert [sum(1 for _ in partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]

    def test_hooks_and_contents(self):
        assert sorted(hooks_and_contents(P(2, 1))) == [(1, -1), (1, 1), (3, 0)]


class TestLittlewoodRichardson:
    @pytest.mark.parametrize("lam,mu,nu,expected", [
        ((2, 2, 2), (2, 1, 1), (1, 1), 1),
        ((2, 1), (1,), (1, 1), 1),
        ((2, 1), (1,), (2,), 1),
        ((3, 2, 1), (2, 1), (2, 1), 2),
        ((2, 2), (1, 1), (1, 1), 1),
        ((2, 2), (2,), (1, 1), 0),
        ((4, 2), (2,), (2,), 0),
    ])
    def test_known_values(self, lam, mu, nu, expected):
        assert lr_coefficient(Partition(lam), Partition(mu), Partition(nu)) == expected

    def test_size_mismatch_is_zero(self):
        assert lr_coefficient(P(2, 1), P(1), P(1)) == 0

    def test_symmetry(self):
        for lam in partitions_of(6, max_length=3):
            for size in range(7):
                for mu in partitions_of(size):
                    for nu in partitions_of(6 - size):
                        assert lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu)

    def test_support_requires_containment(self):
        for lam in partitions_of(5):
            for mu in partitions_of(3):
                for nu in partitions_of(2):
                    if lr_coefficient(lam, mu, nu):
                        assert lam.contains(mu) and lam.contains(nu)

    def test_pieri_rule(self):
        for lam in partitions_of(6):
            for r in range(1, 4):
                for mu in partitions_of(6 - r):
                    expected = 1 if is_horizontal_strip(lam, mu) else 0
                    assert lr_coefficient(lam, mu, P(r)) == expected

    def test_skew_expansion(self):
        assert skew_expansion(P(2, 1), P(1)) == {P(2): 1, P(1, 1): 1}
        assert skew_expansion(P(2, 2, 2), P(2, 2)) == {P(2): 1}
        assert skew_expansion(P(3, 1), EMPTY) == {P(3, 1): 1}

    def test_skew_expansion_matches_coefficients(self):
        lam, nu = P(3, 2, 1), P(2, 1)
        expansion = skew_expansion(lam, nu)
        for mu in partitions_of(3):
            assert expansion[mu] == lr_coefficient(lam, mu, nu)

    def test_skew_expansion_needs_subdiagram(self):
        with pytest.raises(PartitionError, match="not a subdiagram"):
            skew_expansion(P(2), P(1, 1))


class TestIsotypic:
    def test_zero_multiplicities_dropped(self):
        iso = Isotypic({"a": 2, "b": 0})
        assert len(iso) == 1 and "b" not in iso

    def test_negative_multiplicity_is_fatal(self):
        with pytest.raises(InternalInconsistencyError):
            Isotypic({"a": -1})
        with pytest.raises(InternalInconsistencyError, match="negative"):
            Isotypic.from_signed({"a": 1, "b": -2}, context="test")

    def test_arithmetic(self):
        iso = Isotypic({"a": 1}) + Isotypic({"a": 2, "b": 1})
        assert iso == {"a": 3, "b": 1}
        assert iso.scaled(2) == {"a": 6, "b": 2}
        assert iso.total(lambda key: 10) == 40
