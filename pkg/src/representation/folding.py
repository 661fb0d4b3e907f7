"""
Folding of Young diagrams for Sp_2m and the combinatorial GL_2m -> Sp_2m restriction rule.

A partition with more than m rows does not index an Sp_2m module directly; its
universal symplectic character equals ±char V(π(λ)) or vanishes. The folding is the
boundary-strip modification rule: remove a rim strip of length 2(p - m - 1) starting at
the foot of the first column (p = ℓ(λ)), pick up a factor (-1)^(columns of the strip),
and repeat until at most m rows remain.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Set, Tuple, Union

from src.representation.errors import InternalInconsistencyError, RankValidityError, TheoremHypothesisError
from src.representation.partition_core import (
    Isotypic,
    Partition,
    partition_to_weight,
    partitions_of,
    skew_expansion,
    transpose,
)
from src.representation.root_systems import DominantWeight, RootSystem, gl_dim, weyl_dim

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


@dataclass(frozen=True)
class Zero:
    """The universal character vanishes on Sp_2m"""

    def __str__(self) -> str:
        return "0"


@dataclass(frozen=True)
class Signed:
    folded: Partition
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InternalInconsistencyError(f"fold sign must be ±1, got {self.sign}")

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}{self.folded}"


FoldResult = Union[Zero, Signed]
ZERO = Zero()


def _rim_strip(parts: List[int], h: int) -> Optional[List[Cell]]:
    """First h rim cells walking from the foot of the first column towards (1, λ_1); None if the rim is shorter"""
    i, j = len(parts), 1
    strip: List[Cell] = []
    while len(strip) < h:
        if i < 1:
            return None
        strip.append((i, j))
        if j < parts[i - 1]:
            j += 1
        else:
            i -= 1
    return strip


def _remove_strip(parts: List[int], strip: List[Cell]) -> Optional[Partition]:
    removed: Set[Cell] = set(strip)
    rows = []
    for i, row in enumerate(parts, start=1):
        kept = [j for j in range(1, row + 1) if (i, j) not in removed]
        if kept != list(range(1, len(kept) + 1)):
            return None
        rows.append(len(kept))
    if any(a < b for a, b in zip(rows, rows[1:])):
        return None
    return Partition(tuple(rows))


def fold_sp(m: int, lam: Partition) -> FoldResult:
    """(π(λ), sign(λ)) for Sp_2m, or Zero"""
    if m < 1:
        raise RankValidityError(f"Sp_2m needs m ≥ 1 (got {m})")
    current, sign = lam, 1
    while current.length > m:
        h = 2 * (current.length - m - 1)
        if h == 0:
            logger.debug(f"fold {lam} on Sp_{2 * m}: first column of length {m + 1}, vanishes")
            return ZERO
        parts = list(current.parts)
        strip = _rim_strip(parts, h)
        remainder = None if strip is None else _remove_strip(parts, strip)
        if remainder is None:
            logger.debug(f"fold {lam} on Sp_{2 * m}: strip of length {h} off {current} is not removable")
            return ZERO
        if len({j for _, j in strip}) % 2:
            sign = -sign
        current = remainder
    return Signed(current, sign)


def _doubled_columns(nu: Partition) -> Partition:
    """(2ν)ᵗ: columns of even length 2ν_1, 2ν_2, ..."""
    return transpose(nu.doubled())


def restrict_gl_to_sp_kt(m: int, lam: Partition) -> Isotypic:
    """
    Restrict the GL_2m module indexed by λ to Sp_2m:

        Σ_ν Σ_μ N^λ_{μ,(2ν)ᵗ} · fold_sp(m, μ)

    accumulated with signs. Every final multiplicity must come out nonnegative.
    """
    if m < 1:
        raise RankValidityError(f"Sp_2m needs m ≥ 1 (got {m})")
    if lam.length > 2 * m:
        raise TheoremHypothesisError(
            f"theorem hypothesis violated: {lam} has {lam.length} parts, restriction needs at most {2 * m}")
    rs = RootSystem('C', m)
    signed: Counter = Counter()
    for size in range(lam.size // 2 + 1):
        for nu in partitions_of(size, max_length=lam[0], max_part=lam.length // 2):
            columns = _doubled_columns(nu)
            if not lam.contains(columns):
                continue
            for mu, coeff in skew_expansion(lam, columns).items():
                folded = fold_sp(m, mu)
                if isinstance(folded, Zero):
                    continue
                weight = DominantWeight(rs, partition_to_weight(folded.folded, m))
                signed[weight] += folded.sign * coeff
    result = Isotypic.from_signed(dict(signed), context=f"restricting {lam} from GL_{2 * m}")
    expected = gl_dim(2 * m, lam)
    if result.total(weyl_dim) != expected:
        raise InternalInconsistencyError(
            f"restriction of {lam} to Sp_{2 * m} has dim {result.total(weyl_dim)}, expected {expected}")
    logger.debug(f"restricted {lam} to Sp_{2 * m}: {len(result)} summands, dim {expected}")
    return result
