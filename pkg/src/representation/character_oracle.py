"""
Brute-force character oracle at small rank.

Formal Laurent characters on the standard torus, Freudenthal weight
multiplicities, Schur polynomials, highest-weight peeling, and the torus
specializations behind the GL/Sp restriction checks. Everything here is exact
and refuses inputs beyond ORACLE_CONFIG instead of approximating.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from config.settings import ORACLE_CONFIG
from src.representation.errors import (
    InternalInconsistencyError,
    OracleScaleExceeded,
    PartitionError,
    RankValidityError,
)
from src.representation.partition_core import Isotypic, Partition
from src.representation.root_systems import DominantWeight, RootSystem, inner, level, weyl_dim

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]
WeightPair = Tuple[DominantWeight, DominantWeight]


@dataclass(frozen=True)
class LaurentCharacter:
    """Finite map exponent vector -> nonzero integer coefficient"""
    rank: int                          # number of torus variables
    terms: Dict[Vector, int] = field(default_factory=dict)
    scale: int = 1                     # 2 when exponents are stored in half-units (B, D)

    def __post_init__(self):
        clean = {}
        for exponent, coeff in self.terms.items():
            if len(exponent) != self.rank:
                raise InternalInconsistencyError(f"exponent {exponent} does not have {self.rank} entries")
            if coeff:
                clean[tuple(exponent)] = int(coeff)
        object.__setattr__(self, 'terms', clean)

    @property
    def dimension(self) -> int:
        return sum(self.terms.values())

    def coefficient(self, exponent: Sequence[int]) -> int:
        return self.terms.get(tuple(exponent), 0)

    def _combine(self, other: "LaurentCharacter", sign: int) -> "LaurentCharacter":
        if (self.rank, self.scale) != (other.rank, other.scale):
            raise InternalInconsistencyError("characters live on different tori")
        total = Counter(self.terms)
        for exponent, coeff in other.terms.items():
            total[exponent] += sign * coeff
        return LaurentCharacter(self.rank, dict(total), self.scale)

    def __add__(self, other: "LaurentCharacter") -> "LaurentCharacter":
        return self._combine(other, 1)

    def __sub__(self, other: "LaurentCharacter") -> "LaurentCharacter":
        return self._combine(other, -1)

    def __mul__(self, other: "LaurentCharacter") -> "LaurentCharacter":
        if (self.rank, self.scale) != (other.rank, other.scale):
            raise InternalInconsistencyError("characters live on different tori")
        product: Counter = Counter()
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                product[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return LaurentCharacter(self.rank, dict(product), self.scale)

    def specialize(self, rank: int, substitution: Callable[[Vector], Vector]) -> "LaurentCharacter":
        """Push every monomial through a torus map; coefficient sums are preserved"""
        image: Counter = Counter()
        for exponent, coeff in self.terms.items():
            image[substitution(exponent)] += coeff
        return LaurentCharacter(rank, dict(image), self.scale)


def character_to_json(chi: LaurentCharacter) -> List[dict]:
    return [{'exponents': list(exponent), 'coeff': str(coeff)} for exponent, coeff in sorted(chi.terms.items())]


def _check_scale(rs: RootSystem, lam_level: int, max_rank: int, max_level: int) -> None:
    if rs.rank > max_rank:
        raise OracleScaleExceeded(f"oracle scale exceeded: rank {rs.rank} of {rs} > {max_rank}")
    if lam_level > max_level:
        raise OracleScaleExceeded(f"oracle scale exceeded: level {lam_level} > {max_level} on {rs}")


# --- irreducible characters -------------------------------------------------

@lru_cache(maxsize=None)
def _dominant_multiplicities(lam: DominantWeight) -> Tuple[Tuple[Vector, int], ...]:
    """Freudenthal recursion restricted to dominant weights"""
    rs = lam.system
    top = lam.eps()
    roots = rs.positive_roots()
    rho = rs.rho()

    dominant = {top}
    frontier = [top]
    while frontier:
        mu = frontier.pop()
        for alpha in roots:
            nu = tuple(a - b for a, b in zip(mu, alpha))
            if nu not in dominant and rs.is_dominant_eps(nu):
                dominant.add(nu)
                frontier.append(nu)

    def norm_shifted(x: Vector) -> int:
        shifted = [a + b for a, b in zip(x, rho)]
        return inner(shifted, shifted)

    top_norm = norm_shifted(top)
    mult: Dict[Vector, int] = {top: 1}
    for mu in sorted(dominant - {top}, key=lambda x: (-norm_shifted(x), x)):
        numerator = 0
        for alpha in roots:
            j = 1
            while True:
                raised = tuple(a + j * b for a, b in zip(mu, alpha))
                conj = rs.dominant_conjugate(raised)
                if conj not in dominant:
                    break
                numerator += 2 * mult[conj] * inner(raised, alpha)
                j += 1
        denominator = top_norm - norm_shifted(mu)
        if denominator <= 0 or numerator % denominator:
            raise InternalInconsistencyError(f"Freudenthal step at {mu} for {lam} is not exact")
        mult[mu] = numerator // denominator
        logger.debug(f"Freudenthal {lam} on {rs}: m{mu} = {mult[mu]}")
    return tuple(sorted(mult.items()))


@lru_cache(maxsize=None)
def _irreducible_terms(lam: DominantWeight) -> Tuple[Tuple[Vector, int], ...]:
    rs = lam.system
    terms = {}
    for mu, m in _dominant_multiplicities(lam):
        if m:
            for w in rs.weyl_orbit(mu):
                terms[w] = m
    return tuple(sorted(terms.items()))


def _irreducible(lam: DominantWeight) -> LaurentCharacter:
    rs = lam.system
    return LaurentCharacter(rs.n_coords, dict(_irreducible_terms(lam)), rs.scale)


def irreducible_character(lam: DominantWeight,
                          max_rank: int = ORACLE_CONFIG['max_rank'],
                          max_level: int = ORACLE_CONFIG['max_level']) -> LaurentCharacter:
    """Weight-multiplicity generating function of V(λ)"""
    _check_scale(lam.system, level(lam), max_rank, max_level)
    return _irreducible(lam)


# --- GL characters ------------------------------------------------------------

def _semistandard_contents(p: Partition, n: int) -> Counter:
    """Contents of all semistandard tableaux of shape p with entries 1..n"""
    cells = [(r, c) for r, row in enumerate(p.parts) for c in range(row)]
    tableau: Dict[Tuple[int, int], int] = {}
    counts = [0] * n
    contents: Counter = Counter()

    def place(i: int) -> None:
        if i == len(cells):
            contents[tuple(counts)] += 1
            return
        r, c = cells[i]
        lo = max(tableau.get((r, c - 1), 1), tableau.get((r - 1, c), 0) + 1)
        for v in range(lo, n + 1):
            tableau[(r, c)] = v
            counts[v - 1] += 1
            place(i + 1)
            counts[v - 1] -= 1
        tableau.pop((r, c), None)

    place(0)
    return contents


def gl_schur_character(n: int, p: Partition,
                       max_size: int = ORACLE_CONFIG['max_partition_size']) -> LaurentCharacter:
    """Monomial expansion of s_p(x_1..x_n)"""
    if p.length > n:
        raise PartitionError(f"partition too long for rank: {p} has {p.length} parts, GL_{n}")
    if p.size > max_size:
        raise OracleScaleExceeded(f"oracle scale exceeded: |{p}| = {p.size} > {max_size}")
    return LaurentCharacter(n, dict(_semistandard_contents(p, n)))


# --- peeling ----------------------------------------------------------------

def decompose(chi: LaurentCharacter, rs: RootSystem) -> Isotypic:
    """Peel off irreducible characters from the top; a negative residual is a hard error"""
    if (chi.rank, chi.scale) != (rs.n_coords, rs.scale):
        raise InternalInconsistencyError(f"character torus does not match {rs}")
    rho = rs.rho()
    residual = Counter(chi.terms)
    result = {}
    while residual:
        candidates = [x for x in residual if rs.is_dominant_eps(x)]
        if not candidates:
            raise InternalInconsistencyError(f"residual without dominant terms while peeling on {rs}")
        top = max(candidates, key=lambda x: (inner(x, rho), x))
        mult = residual[top]
        if mult < 0:
            raise InternalInconsistencyError(f"negative residual {mult} at {top} while peeling on {rs}")
        lam = DominantWeight.from_eps(rs, top)
        # type A characters may sit in a shifted degree; the offset is constant across coordinates
        shift = tuple(a - b for a, b in zip(top, lam.eps()))
        for exponent, coeff in _irreducible_terms(lam):
            shifted = tuple(a + b for a, b in zip(exponent, shift))
            residual[shifted] -= mult * coeff
            if not residual[shifted]:
                del residual[shifted]
        result[lam] = result.get(lam, 0) + mult
    return Isotypic(result)


def decompose_pair(chi: LaurentCharacter, left: RootSystem, right: RootSystem) -> Isotypic:
    """Peeling for the product group left × right on split torus coordinates"""
    split = left.n_coords
    rho_l, rho_r = left.rho(), right.rho()
    residual = Counter(chi.terms)
    result = {}
    while residual:
        candidates = [x for x in residual
                      if left.is_dominant_eps(x[:split]) and right.is_dominant_eps(x[split:])]
        if not candidates:
            raise InternalInconsistencyError(f"residual without dominant terms while peeling on {left} × {right}")
        top = max(candidates, key=lambda x: (inner(x[:split], rho_l) + inner(x[split:], rho_r), x))
        mult = residual[top]
        if mult < 0:
            raise InternalInconsistencyError(f"negative residual {mult} at {top} on {left} × {right}")
        pair = (DominantWeight.from_eps(left, top[:split]), DominantWeight.from_eps(right, top[split:]))
        for e1, c1 in _irreducible_terms(pair[0]):
            for e2, c2 in _irreducible_terms(pair[1]):
                exponent = e1 + e2
                residual[exponent] -= mult * c1 * c2
                if not residual[exponent]:
                    del residual[exponent]
        result[pair] = result.get(pair, 0) + mult
    return Isotypic(result)


def tensor_decompose(lam: DominantWeight, mu: DominantWeight,
                     max_level: int = ORACLE_CONFIG['max_tensor_level']) -> Isotypic:
    """V(λ) ⊗ V(μ) by multiplying characters and peeling"""
    if lam.system != mu.system:
        raise RankValidityError(f"tensor factors live on different algebras: {lam.system}, {mu.system}")
    if level(lam) + level(mu) > max_level:
        raise OracleScaleExceeded(f"oracle scale exceeded: level {level(lam)} + {level(mu)} > {max_level}")
    product = irreducible_character(lam) * irreducible_character(mu)
    result = decompose(product, lam.system)
    expected = weyl_dim(lam) * weyl_dim(mu)
    if result.total(weyl_dim) != expected:
        raise InternalInconsistencyError(f"tensor decomposition of {lam} ⊗ {mu} lost dimension")
    return result


# --- torus specializations ----------------------------------------------------

def fold_torus(m: int) -> Callable[[Vector], Vector]:
    """x_i -> y_i (i ≤ m), x_{m+i} -> y_{m+1-i}^{-1}"""
    def substitution(x: Vector) -> Vector:
        return tuple(x[j] - x[2 * m - 1 - j] for j in range(m))
    return substitution


def restrict_gl_to_sp(m: int, p: Partition,
                      max_size: int = ORACLE_CONFIG['max_partition_size']) -> Isotypic:
    """GL_2m module indexed by p restricted to Sp_2m, via specialization and peeling"""
    if m < 1:
        raise RankValidityError(f"Sp_2m needs m ≥ 1 (got {m})")
    small = RootSystem('C', m)
    check_limits(small, 0)
    chi = gl_schur_character(2 * m, p, max_size).specialize(m, fold_torus(m))
    logger.debug(f"restricting GL_{2 * m} {p} (dim {chi.dimension}) to {small}")
    return decompose(chi, small)


def restrict_big_to_small_sp(m: int, lam: DominantWeight) -> Isotypic:
    """res^{sp_4m}_{sp_2m} V(λ) through the Levi-embedded symplectic subgroup"""
    big = RootSystem('C', 2 * m)
    if lam.system != big:
        raise RankValidityError(f"expected a weight of {big}, got one of {lam.system}")
    chi = irreducible_character(lam).specialize(m, fold_torus(m))
    return decompose(chi, RootSystem('C', m))


def restrict_to_pair(family: str, m: int, lam: DominantWeight) -> Isotypic:
    """
    Restriction of V(λ) from C_2m (D_2m) to the block subalgebra C_m + C_m (D_m + D_m).

    Both factors share the big torus: the first sees coordinates 1..m, the second m+1..2m.
    """
    family = family.upper()
    if family not in ('C', 'D'):
        raise RankValidityError(f"pair restriction is defined for families C and D, not {family}")
    small = RootSystem(family, m)
    big = RootSystem(family, 2 * m)
    if lam.system != big:
        raise RankValidityError(f"expected a weight of {big}, got one of {lam.system}")
    result = decompose_pair(irreducible_character(lam), small, small)
    total = result.total(weight_pair_dim)
    if total != weyl_dim(lam):
        raise InternalInconsistencyError(f"pair restriction of {lam} lost dimension ({total} vs {weyl_dim(lam)})")
    return result


# --- exterior-power identities -----------------------------------------------

def _exterior_power(vectors: Sequence[Vector], p: int, rank: int, scale: int) -> LaurentCharacter:
    if p < 0:
        return LaurentCharacter(rank, {}, scale)
    terms: Counter = Counter()
    for chosen in combinations(vectors, p):
        terms[tuple(sum(column) for column in zip(*chosen)) if chosen else (0,) * rank] += 1
    return LaurentCharacter(rank, dict(terms), scale)


def _standard_weights(rs: RootSystem) -> List[Vector]:
    """Weights of the defining representation (ℂ^{2n}) of C_n or D_n"""
    n, s = rs.rank, rs.scale
    weights = []
    for i in range(n):
        for sign in (1, -1):
            v = [0] * n
            v[i] = sign * s
            weights.append(tuple(v))
    return weights


def sp_fundamental_character(n: int, p: int) -> LaurentCharacter:
    """char V(ω_p) of C_n as e_p - e_{p-2} in (y_1..y_n, y_n^{-1}..y_1^{-1})"""
    if n < 1 or not 1 <= p <= n:
        raise RankValidityError(f"ω_{p} does not exist for C{n}")
    rs = RootSystem('C', n)
    weights = _standard_weights(rs)
    return _exterior_power(weights, p, n, 1) - _exterior_power(weights, p - 2, n, 1)


def so_exterior_identity_check(m: int) -> bool:
    """Λ^{2m} ℂ^{4m} = V(2ω_2m) ⊕ V(2ω_{2m-1}) as D_2m characters"""
    if m < 2:
        raise RankValidityError(f"the exterior identity needs m ≥ 2 (got {m})")
    rs = RootSystem('D', 2 * m)
    wedge = _exterior_power(_standard_weights(rs), 2 * m, rs.n_coords, rs.scale)
    halves = (irreducible_character(DominantWeight.fundamental(rs, 2 * m, 2))
              + irreducible_character(DominantWeight.fundamental(rs, 2 * m - 1, 2)))
    logger.debug(f"Λ^{2 * m} ℂ^{4 * m}: dim {wedge.dimension} vs half-spin squares {halves.dimension}")
    return wedge == halves


def weight_pair_dim(pair: WeightPair) -> int:
    return weyl_dim(pair[0]) * weyl_dim(pair[1])


def check_limits(rs: RootSystem, lam_level: int, max_rank: Optional[int] = None, max_level: Optional[int] = None) -> None:
    """Public guard so callers can validate a request before dispatching work"""
    _check_scale(rs, lam_level,
                 ORACLE_CONFIG['max_rank'] if max_rank is None else max_rank,
                 ORACLE_CONFIG['max_level'] if max_level is None else max_level)
