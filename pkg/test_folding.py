#!/usr/bin/env python3
"""
Tests for the Sp_2m folding rule and the combinatorial GL_2m -> Sp_2m restriction
"""

import pytest

from src.representation.character_oracle import restrict_gl_to_sp
from src.representation.errors import RankValidityError, TheoremHypothesisError
from src.representation.folding import ZERO, Signed, Zero, fold_sp, restrict_gl_to_sp_kt
from src.representation.partition_core import Partition, partitions_of, partitions_up_to
from src.representation.root_systems import DominantWeight, RootSystem, gl_dim, weyl_dim


def P(*parts):
    return Partition(parts)


def C(m, *coeffs):
    return DominantWeight(RootSystem('C', m), coeffs)


class TestFoldSp:
    @pytest.mark.parametrize("m,lam,expected", [
        (2, (2, 1), Signed(P(2, 1), 1)),
        (1, (1, 1), ZERO),
        (1, (1, 1, 1), Signed(P(1), -1)),
        (2, (2, 2, 2), ZERO),
        (1, (1, 1, 1, 1), Signed(P(), -1)),
        (1, (2, 2, 2, 2), Signed(P(2), -1)),
        (2, (1, 1, 1, 1), Signed(P(1, 1), -1)),
    ])
    def test_known_folds(self, m, lam, expected):
        assert fold_sp(m, Partition(lam)) == expected

    def test_identity_regime(self):
        for m in (1, 2, 3):
            for lam in partitions_up_to(8, max_length=m):
                assert fold_sp(m, lam) == Signed(lam, 1)

    def test_first_column_of_length_m_plus_one_vanishes(self):
        for m in (1, 2, 3):
            for lam in partitions_up_to(9):
                if lam.length == m + 1:
                    assert isinstance(fold_sp(m, lam), Zero)

    def test_folded_partitions_fit(self):
        for m in (1, 2):
            for lam in partitions_up_to(8):
                result = fold_sp(m, lam)
                if isinstance(result, Signed):
                    assert result.folded.length <= m
                    assert result.sign in (1, -1)

    def test_rank_must_be_positive(self):
        with pytest.raises(RankValidityError):
            fold_sp(0, P(1))


class TestRestriction:
    def test_empty_partition(self):
        for m in (1, 2, 3):
            assert restrict_gl_to_sp_kt(m, P()) == {C(m, *([0] * m)): 1}

    def test_determinant_restricts_trivially(self):
        assert restrict_gl_to_sp_kt(1, P(1, 1)) == {C(1, 0): 1}
        assert restrict_gl_to_sp_kt(2, P(1, 1, 1, 1)) == {C(2, 0, 0): 1}

    def test_known_restrictions(self):
        assert restrict_gl_to_sp_kt(2, P(2, 2)) == {C(2, 0, 2): 1, C(2, 0, 1): 1, C(2, 0, 0): 1}
        assert restrict_gl_to_sp_kt(2, P(2, 2, 2)) == {C(2, 2, 0): 1}

    def test_too_many_parts(self):
        with pytest.raises(TheoremHypothesisError, match="hypothesis"):
            restrict_gl_to_sp_kt(1, P(1, 1, 1))

    def test_dimension_is_conserved(self):
        for m in (1, 2, 3):
            for lam in partitions_up_to(7, max_length=2 * m):
                assert restrict_gl_to_sp_kt(m, lam).total(weyl_dim) == gl_dim(2 * m, lam)

    @pytest.mark.parametrize("m,max_size", [(1, 10), (2, 10), (3, 8)])
    def test_matches_torus_oracle(self, m, max_size):
        for lam in partitions_up_to(max_size, max_length=2 * m):
            assert restrict_gl_to_sp_kt(m, lam) == restrict_gl_to_sp(m, lam), f"mismatch at {lam}"

    def test_single_rows_restrict_irreducibly(self):
        for m in (1, 2):
            for r in range(5):
                (lam,) = partitions_of(r, max_length=1)
                expected = C(m, *([r] + [0] * (m - 1)))
                assert restrict_gl_to_sp_kt(m, lam) == {expected: 1}
