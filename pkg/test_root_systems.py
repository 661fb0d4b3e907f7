#!/usr/bin/env python3
"""
Tests for root data, levels, duality and the Weyl/GL dimension formulas
"""

import pytest

from src.representation.errors import PartitionError, RankValidityError
from src.representation.partition_core import Partition
from src.representation.root_systems import (
    DominantWeight,
    RootSystem,
    dual_weight,
    gl_dim,
    level,
    level_from_highest_root,
    level_k_weights,
    weyl_dim,
)


def W(family, rank, *coeffs):
    return DominantWeight(RootSystem(family, rank), coeffs)


class TestRootSystem:
    @pytest.mark.parametrize("family,rank", [('A', 0), ('B', 1), ('C', 0), ('D', 2), ('E', 6)])
    def test_invalid_ranks(self, family, rank):
        with pytest.raises(RankValidityError):
            RootSystem(family, rank)

    def test_d_rank_message(self):
        with pytest.raises(RankValidityError, match="D requires rank ≥ 3"):
            RootSystem('D', 2)

    def test_family_is_normalized(self):
        assert RootSystem('c', 2) == RootSystem('C', 2)
        assert str(RootSystem('c', 2)) == "C2"

    @pytest.mark.parametrize("family,rank,comarks", [
        ('A', 3, (1, 1, 1)),
        ('B', 2, (1, 1)),
        ('B', 3, (1, 2, 1)),
        ('C', 3, (1, 1, 1)),
        ('D', 3, (1, 1, 1)),
        ('D', 5, (1, 2, 2, 1, 1)),
    ])
    def test_comarks(self, family, rank, comarks):
        assert RootSystem(family, rank).comarks == comarks

    @pytest.mark.parametrize("family,rank,count", [('A', 2, 3), ('B', 3, 9), ('C', 3, 9), ('D', 4, 12)])
    def test_positive_root_counts(self, family, rank, count):
        assert len(RootSystem(family, rank).positive_roots()) == count

    def test_weyl_orbit(self):
        assert RootSystem('C', 2).weyl_orbit((1, 0)) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
        # spin weights keep the parity of their minus signs
        assert sorted(RootSystem('D', 3).weyl_orbit((1, 1, -1))) == [(-1, -1, -1), (-1, 1, 1), (1, -1, 1), (1, 1, -1)]
        assert RootSystem('D', 3).dominant_conjugate((-1, 1, 1)) == (1, 1, -1)


class TestDominantWeight:
    def test_validation(self):
        with pytest.raises(RankValidityError):
            W('C', 2, 1)
        with pytest.raises(RankValidityError):
            W('C', 2, 1, -1)
        with pytest.raises(RankValidityError):
            DominantWeight.parse(RootSystem('C', 2), "1,x")
        with pytest.raises(RankValidityError):
            DominantWeight.fundamental(RootSystem('C', 2), 3)

    def test_str(self):
        assert str(W('C', 2, 2, 1)) == "2ω1+ω2"
        assert str(W('C', 2, 0, 0)) == "0"

    def test_eps_round_trip(self):
        for family, rank in [('A', 3), ('B', 3), ('C', 3), ('D', 4)]:
            rs = RootSystem(family, rank)
            for lam in level_k_weights(rs, 3):
                assert DominantWeight.from_eps(rs, lam.eps()) == lam
                assert rs.is_dominant_eps(lam.eps())

    def test_spin_coordinates(self):
        assert W('B', 2, 0, 1).eps() == (1, 1)
        assert W('D', 3, 0, 1, 0).eps() == (1, 1, -1)
        assert W('D', 3, 0, 0, 1).eps() == (1, 1, 1)


class TestLevels:
    @pytest.mark.parametrize("lam,expected", [
        (W('C', 3, 1, 1, 1), 3),
        (W('B', 3, 0, 1, 0), 2),
        (W('D', 4, 0, 1, 0, 0), 2),
        (W('D', 4, 0, 0, 1, 1), 2),
        (W('A', 2, 1, 1), 2),
    ])
    def test_level(self, lam, expected):
        assert level(lam) == expected

    def test_comarks_agree_with_highest_root(self):
        for family, rank in [('A', 3), ('B', 2), ('B', 4), ('C', 3), ('D', 3), ('D', 5)]:
            for lam in level_k_weights(RootSystem(family, rank), 2):
                assert level_from_highest_root(lam) == level(lam)

    def test_level_k_weights(self):
        assert [w.coeffs for w in level_k_weights(RootSystem('C', 2), 1)] == [(0, 0), (0, 1), (1, 0)]
        assert len(level_k_weights(RootSystem('D', 3), 1)) == 4
        assert level_k_weights(RootSystem('B', 2), 0) == [W('B', 2, 0, 0)]
        with pytest.raises(RankValidityError):
            level_k_weights(RootSystem('C', 2), -1)

    @pytest.mark.parametrize("family,rank", [('A', 2), ('B', 2), ('B', 3), ('C', 2), ('C', 3), ('D', 3), ('D', 4)])
    def test_level_sets_are_nested(self, family, rank):
        rs = RootSystem(family, rank)
        for k in range(3):
            smaller, larger = level_k_weights(rs, k), level_k_weights(rs, k + 1)
            assert set(smaller) < set(larger)
            assert all(level(lam) <= k for lam in smaller)
            assert all(level(lam) == k + 1 for lam in set(larger) - set(smaller))


class TestDimensions:
    @pytest.mark.parametrize("lam,expected", [
        (W('A', 1, 3), 4),
        (W('A', 2, 1, 0), 3),
        (W('A', 2, 1, 1), 8),
        (W('B', 2, 1, 0), 5),
        (W('B', 2, 0, 1), 4),
        (W('B', 3, 0, 0, 1), 8),
        (W('C', 1, 1), 2),
        (W('C', 2, 1, 0), 4),
        (W('C', 2, 0, 1), 5),
        (W('C', 4, 0, 0, 0, 1), 42),
        (W('C', 4, 0, 0, 0, 2), 594),
        (W('D', 3, 1, 0, 0), 6),
        (W('D', 3, 0, 1, 0), 4),
        (W('D', 4, 0, 0, 0, 2), 35),
        (W('D', 6, 0, 0, 0, 0, 0, 1), 32),
        (W('D', 6, 0, 0, 0, 0, 0, 2), 462),
    ])
    def test_weyl_dim(self, lam, expected):
        assert weyl_dim(lam) == expected

    def test_sp_adjoint(self):
        for m in range(1, 5):
            assert weyl_dim(DominantWeight.fundamental(RootSystem('C', m), 1, 2)) == 2 * m * m + m

    @pytest.mark.parametrize("n,parts,expected", [
        (4, (2, 2, 2), 10),
        (4, (2, 2), 20),
        (4, (2,), 10),
        (2, (1, 1), 1),
        (3, (2, 1), 8),
        (5, (), 1),
    ])
    def test_gl_dim(self, n, parts, expected):
        assert gl_dim(n, Partition(parts)) == expected

    def test_gl_dim_too_long(self):
        with pytest.raises(PartitionError):
            gl_dim(2, Partition((1, 1, 1)))


class TestDuality:
    def test_type_a_reverses(self):
        assert dual_weight(W('A', 2, 1, 0)) == W('A', 2, 0, 1)

    def test_odd_d_swaps_spins(self):
        assert dual_weight(W('D', 3, 0, 1, 0)) == W('D', 3, 0, 0, 1)
        assert dual_weight(W('D', 5, 1, 0, 0, 2, 1)) == W('D', 5, 1, 0, 0, 1, 2)

    def test_self_dual_families(self):
        for lam in [W('B', 3, 1, 0, 1), W('C', 3, 0, 2, 1), W('D', 4, 0, 0, 1, 0)]:
            assert dual_weight(lam) == lam

    @pytest.mark.parametrize("family,rank", [('A', 3), ('B', 2), ('B', 3), ('C', 2), ('C', 3), ('D', 3), ('D', 4), ('D', 5)])
    def test_dual_has_same_dimension(self, family, rank):
        for lam in level_k_weights(RootSystem(family, rank), 3):
            dual = dual_weight(lam)
            assert weyl_dim(dual) == weyl_dim(lam)
            assert level(dual) == level(lam)
            assert dual_weight(dual) == lam
