"""
Zhu algebras, the graded C₂-algebra of type C, and the Sp/Spin branching and quotient formulas.

All decompositions are Isotypic maps. Bimodule decompositions are keyed by
(left, right) weight pairs; graded ones carry one Isotypic per degree.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Tuple

from sympy import Symbol

from src.representation.errors import DegreeOutOfRangeError, RankValidityError
from src.representation.folding import restrict_gl_to_sp_kt
from src.representation.partition_core import Isotypic, Partition, weight_to_partition
from src.representation.root_systems import (
    DominantWeight,
    RootSystem,
    bounded_vectors,
    dual_weight,
    gl_dim,
    level_k_weights,
    weyl_dim,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class GLSummand:
    """One GL_2m summand 𝕍(λ) ⊗ det^twist of the C₂-algebra, sitting in degree j"""
    degree: int
    partition: Partition
    det_twist: int
    source: Tuple[int, ...]


@dataclass(frozen=True)
class GradedDecomposition:
    m: int
    k: int
    components: Dict[int, Isotypic] = field(default_factory=dict)

    @property
    def dims(self) -> List[int]:
        return [isotypic_dim(self.components[j]) for j in sorted(self.components)]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def palindromic(self) -> bool:
        # exploratory only
        return self.dims == self.dims[::-1]

    def poincare_polynomial(self, variable: str = 't'):
        t = Symbol(variable)
        return sum((dim * t ** j for j, dim in enumerate(self.dims)), 0 * t)


def isotypic_dim(iso: Isotypic) -> int:
    """Σ mult · dim over weights, weight pairs, or (n, partition) GL labels"""
    return iso.total(_label_dim)


def _label_dim(label: Hashable) -> int:
    if isinstance(label, DominantWeight):
        return weyl_dim(label)
    if isinstance(label, tuple) and len(label) == 2 and isinstance(label[1], Partition):
        return gl_dim(label[0], label[1])
    if isinstance(label, tuple):
        result = 1
        for part in label:
            result *= weyl_dim(part)
        return result
    raise TypeError(f"cannot take the dimension of {label!r}")


# --- Zhu algebra -------------------------------------------------------------

def zhu_decomposition(rs: RootSystem, k: int) -> Isotypic:
    """A(𝔤; k) ≅ ⊕_{λ ∈ P⁺_k} V(λ) ⊗ V(λ)*"""
    return Isotypic({(lam, dual_weight(lam)): 1 for lam in level_k_weights(rs, k)})


def zhu_dimension(rs: RootSystem, k: int) -> int:
    return isotypic_dim(zhu_decomposition(rs, k))


# --- C₂-algebra of type C ------------------------------------------------------

def _check_mk(m: int, k: int) -> None:
    if m < 1:
        raise RankValidityError(f"C requires rank ≥ 1 (got {m})")
    if k < 0:
        raise RankValidityError(f"level must be ≥ 0 (got {k})")


def c2_gl_decomposition(m: int, k: int) -> List[GLSummand]:
    """GL_2m summands indexed by tuples (a_1..a_2m) with Σ a_i ≤ k, sorted by degree"""
    _check_mk(m, k)
    summands = []
    for a in bounded_vectors((1,) * (2 * m), k):
        partition = weight_to_partition([2 * x for x in a[:-1]] + [0])
        weighted = sum(i * x for i, x in enumerate(a, start=1))
        summands.append(GLSummand(degree=2 * m * k - weighted,
                                  partition=partition,
                                  det_twist=2 * (a[-1] - k),
                                  source=tuple(a)))
    return sorted(summands)


def c2_graded_character(m: int, k: int, j: int) -> Isotypic:
    """Degree-j component of the C₂-algebra as an Sp_2m module"""
    _check_mk(m, k)
    if not 0 <= j <= 2 * m * k:
        raise DegreeOutOfRangeError(f"degree out of range: j={j} not in 0..{2 * m * k} for m={m}, k={k}")
    component = Isotypic()
    for summand in c2_gl_decomposition(m, k):
        if summand.degree == j:
            component = component + restrict_gl_to_sp_kt(m, summand.partition)
    return component


def c2_graded_dims(m: int, k: int) -> GradedDecomposition:
    _check_mk(m, k)
    by_degree: Dict[int, List[GLSummand]] = defaultdict(list)
    for summand in c2_gl_decomposition(m, k):
        by_degree[summand.degree].append(summand)
    components = {}
    for j in range(2 * m * k + 1):
        component = Isotypic()
        for summand in by_degree.get(j, []):
            component = component + restrict_gl_to_sp_kt(m, summand.partition)
        components[j] = component
    graded = GradedDecomposition(m, k, components)
    logger.debug(f"C₂-algebra m={m} k={k}: dims {graded.dims}")
    return graded


# --- branching and quotient formulas -----------------------------------------

def sp_branching(m: int, k: int) -> Isotypic:
    """Restriction of V(kω_2m) from sp_4m to sp_2m ⊕ sp_2m: ⊕_{Σa_i ≤ k} V(λ) ⊗ V(λ)"""
    _check_mk(m, k)
    rs = RootSystem('C', m)
    return Isotypic({(lam, lam): 1 for lam in (DominantWeight(rs, a) for a in bounded_vectors((1,) * m, k))})


def _orthogonal_index_set(rs: RootSystem, k: int) -> List[DominantWeight]:
    """λ with 2(a_1 + ... ) + (spin coefficients) ≤ k and k - (spin coefficients) even"""
    m = rs.rank
    spin = 2 if rs.family == 'D' else 1
    weights = (2,) * (m - spin) + (1,) * spin
    selected = []
    for a in bounded_vectors(weights, k):
        if (k - sum(a[m - spin:])) % 2 == 0:
            selected.append(DominantWeight(rs, a))
    return selected


def so_even_branching(m: int, k: int, dual_form: bool = False) -> Isotypic:
    """
    Restriction of V(kω_2m) (dual_form: V(kω_2m-1)) from so_4m to so_2m ⊕ so_2m.

    Summands are V(λ) ⊗ V(λ), respectively V(λ) ⊗ V(λ)*.
    """
    if m < 3:
        raise RankValidityError(f"D requires rank ≥ 3 (got {m})")
    rs = RootSystem('D', m)
    return Isotypic({(lam, dual_weight(lam) if dual_form else lam): 1 for lam in _orthogonal_index_set(rs, k)})


def so_quotient_decomposition(rs: RootSystem, k: int) -> Isotypic:
    """Decomposition of the controlled quotient of the orthogonal C₂-algebra"""
    if rs.family not in ('B', 'D'):
        raise RankValidityError(f"quotient formula applies to orthogonal families only (got {rs.family})")
    if k < 0:
        raise RankValidityError(f"level must be ≥ 0 (got {k})")
    if rs.family == 'D':
        return so_even_branching(rs.rank, k, dual_form=bool(rs.rank % 2))
    return Isotypic({(lam, dual_weight(lam)): 1 for lam in _orthogonal_index_set(rs, k)})
