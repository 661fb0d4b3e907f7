"""
Classical root data (types A, B, C, D), dominant weights, levels, duality
and the Weyl dimension formula in exact arithmetic.

Weights are carried in two coordinate systems: fundamental-weight coefficients
(Bourbaki numbering) and ε-coordinates. For B and D the ε-coordinates are stored
doubled (`RootSystem.scale == 2`) so that spin weights stay integral; all inner
products below are taken in those stored coordinates, which only rescales them.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, List, Sequence, Tuple

from sympy import Rational
from sympy.utilities.iterables import multiset_permutations

from src.representation.errors import InternalInconsistencyError, PartitionError, RankValidityError
from src.representation.partition_core import Partition, hooks_and_contents

logger = logging.getLogger(__name__)

FAMILIES = ('A', 'B', 'C', 'D')
MIN_RANK = {'A': 1, 'B': 2, 'C': 1, 'D': 3}

Vector = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class RootSystem:
    """A simple classical Lie algebra: family A/B/C/D and rank"""
    family: str
    rank: int

    def __post_init__(self):
        family = str(self.family).upper()
        object.__setattr__(self, 'family', family)
        if family not in FAMILIES:
            raise RankValidityError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if not isinstance(self.rank, int) or self.rank < MIN_RANK[family]:
            raise RankValidityError(f"{family} requires rank ≥ {MIN_RANK[family]} (got {self.rank})")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def scale(self) -> int:
        return 2 if self.family in ('B', 'D') else 1

    @property
    def n_coords(self) -> int:
        return self.rank + 1 if self.family == 'A' else self.rank

    @property
    def comarks(self) -> Tuple[int, ...]:
        n = self.rank
        if self.family in ('A', 'C'):
            return (1,) * n
        if self.family == 'B':
            return (1,) + (2,) * (n - 2) + (1,)
        return (1,) + (2,) * (n - 3) + (1, 1)

    def positive_roots(self) -> Tuple[Vector, ...]:
        return _positive_roots(self)

    def rho(self) -> Vector:
        n, s = self.rank, self.scale
        if self.family == 'A':
            return tuple(range(n, -1, -1))
        if self.family == 'B':
            return tuple(2 * (n - i) - 1 for i in range(n))
        if self.family == 'C':
            return tuple(range(n, 0, -1))
        return tuple(s * (n - 1 - i) for i in range(n))

    def highest_root(self) -> Vector:
        v = [0] * self.n_coords
        if self.family == 'A':
            v[0], v[-1] = 1, -1
        elif self.family == 'C':
            v[0] = 2
        else:
            v[0] = v[1] = self.scale
        return tuple(v)

    # --- coordinate changes -------------------------------------------------

    def to_eps(self, coeffs: Sequence[int]) -> Vector:
        """Fundamental-weight coefficients to (stored) ε-coordinates"""
        n = self.rank
        a = list(coeffs)
        if self.family in ('A', 'C'):
            tails = [sum(a[j:]) for j in range(n)]
            return tuple(tails + [0]) if self.family == 'A' else tuple(tails)
        if self.family == 'B':
            return tuple(2 * sum(a[j:n - 1]) + a[n - 1] for j in range(n))
        head = [2 * sum(a[j:n - 2]) + a[n - 2] + a[n - 1] for j in range(n - 1)]
        return tuple(head + [a[n - 1] - a[n - 2]])

    def from_eps(self, x: Sequence[int]) -> Vector:
        """(Stored) ε-coordinates of an integral weight back to fundamental coefficients"""
        n = self.rank
        x = list(x)
        if self.family in ('A', 'C'):
            padded = x + [0] if self.family == 'C' else x
            return tuple(padded[i] - padded[i + 1] for i in range(n))
        if self.family == 'B':
            halves = [x[i] - x[i + 1] for i in range(n - 1)]
            tail = [x[n - 1]]
        else:
            halves = [x[i] - x[i + 1] for i in range(n - 2)] + [x[n - 2] - x[n - 1], x[n - 2] + x[n - 1]]
            tail = []
        if any(d % 2 for d in halves):
            raise InternalInconsistencyError(f"{x} is not an integral weight of {self}")
        return tuple(d // 2 for d in halves) + tuple(tail)

    # --- Weyl group in ε-coordinates ----------------------------------------

    def is_dominant_eps(self, x: Sequence[int]) -> bool:
        if self.family == 'D':
            head = list(x[:-1])
            return all(a >= b for a, b in zip(head, head[1:])) and head[-1] >= abs(x[-1])
        if any(a < b for a, b in zip(x, x[1:])):
            return False
        return self.family == 'A' or x[-1] >= 0

    def dominant_conjugate(self, x: Sequence[int]) -> Vector:
        if self.family == 'A':
            return tuple(sorted(x, reverse=True))
        absolute = sorted((abs(v) for v in x), reverse=True)
        if self.family == 'D' and 0 not in absolute and sum(1 for v in x if v < 0) % 2:
            absolute[-1] = -absolute[-1]
        return tuple(absolute)

    def weyl_orbit(self, dominant: Sequence[int]) -> List[Vector]:
        """Orbit of a dominant weight (signed permutations, restricted by type)"""
        if self.family == 'A':
            return [tuple(p) for p in multiset_permutations(list(dominant))]
        absolute = [abs(v) for v in dominant]
        nonzero = [i for i, v in enumerate(absolute) if v]
        parity = sum(1 for v in dominant if v < 0) % 2
        restrict_parity = self.family == 'D' and len(nonzero) == len(absolute)
        orbit = set()
        for signs in product((1, -1), repeat=len(nonzero)):
            if restrict_parity and signs.count(-1) % 2 != parity:
                continue
            signed = list(absolute)
            for i, sign in zip(nonzero, signs):
                signed[i] *= sign
            orbit.update(tuple(p) for p in multiset_permutations(signed))
        return sorted(orbit)


@lru_cache(maxsize=None)
def _positive_roots(rs: RootSystem) -> Tuple[Vector, ...]:
    n, s = rs.n_coords, rs.scale
    roots = []

    def unit(*pairs: Tuple[int, int]) -> Vector:
        v = [0] * n
        for i, c in pairs:
            v[i] += c
        return tuple(v)

    for i in range(n):
        for j in range(i + 1, n):
            roots.append(unit((i, s), (j, -s)))
            if rs.family != 'A':
                roots.append(unit((i, s), (j, s)))
        if rs.family == 'B':
            roots.append(unit((i, s)))
        elif rs.family == 'C':
            roots.append(unit((i, 2)))
    return tuple(roots)


def inner(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


@dataclass(frozen=True, order=True)
class DominantWeight:
    """λ = Σ a_i ω_i with nonnegative integer coefficients"""
    system: RootSystem
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(a) for a in self.coeffs)
        object.__setattr__(self, 'coeffs', coeffs)
        if len(coeffs) != self.system.rank:
            raise RankValidityError(f"{self.system} needs {self.system.rank} coefficients, got {len(coeffs)}")
        if any(a < 0 for a in coeffs):
            raise RankValidityError(f"dominant weight coefficients must be ≥ 0: {coeffs}")

    @classmethod
    def zero(cls, rs: RootSystem) -> "DominantWeight":
        return cls(rs, (0,) * rs.rank)

    @classmethod
    def fundamental(cls, rs: RootSystem, i: int, multiple: int = 1) -> "DominantWeight":
        """multiple · ω_i (1-based index)"""
        if not 1 <= i <= rs.rank:
            raise RankValidityError(f"ω_{i} does not exist for {rs}")
        coeffs = [0] * rs.rank
        coeffs[i - 1] = multiple
        return cls(rs, tuple(coeffs))

    @classmethod
    def parse(cls, rs: RootSystem, text: str) -> "DominantWeight":
        try:
            coeffs = tuple(int(piece) for piece in text.split(','))
        except ValueError as e:
            raise RankValidityError(f"cannot read weight coefficients from {text!r}") from e
        return cls(rs, coeffs)

    @classmethod
    def from_eps(cls, rs: RootSystem, x: Sequence[int]) -> "DominantWeight":
        return cls(rs, rs.from_eps(x))

    def eps(self) -> Vector:
        return self.system.to_eps(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        terms = [f"{a if a > 1 else ''}ω{i}" for i, a in enumerate(self.coeffs, start=1) if a]
        return '+'.join(terms) if terms else '0'

    def to_json(self) -> dict:
        return {'family': self.system.family, 'rank': self.system.rank, 'coeffs': list(self.coeffs)}


def level(lam: DominantWeight) -> int:
    """(λ, θ) with (θ, θ) = 2, via the comark vector"""
    return sum(a * c for a, c in zip(lam.coeffs, lam.system.comarks))


def level_from_highest_root(lam: DominantWeight) -> Rational:
    """(λ, θ) computed directly in ε-coordinates; cross-checks the comark table"""
    theta = lam.system.highest_root()
    return Rational(2 * inner(lam.eps(), theta), inner(theta, theta))


def bounded_vectors(weights: Sequence[int], budget: int) -> Iterator[Tuple[int, ...]]:
    """Nonnegative integer vectors a with Σ a_i·w_i ≤ budget"""
    if not weights:
        yield ()
        return
    head, rest = weights[0], weights[1:]
    for a in range(budget // head + 1):
        for tail in bounded_vectors(rest, budget - a * head):
            yield (a,) + tail


def level_k_weights(rs: RootSystem, k: int) -> List[DominantWeight]:
    """All dominant λ with (λ, θ) ≤ k, sorted by coefficient vector"""
    if k < 0:
        raise RankValidityError(f"level must be ≥ 0 (got {k})")
    return sorted(DominantWeight(rs, a) for a in bounded_vectors(rs.comarks, k))


@lru_cache(maxsize=None)
def weyl_dim(lam: DominantWeight) -> int:
    """dim V(λ) = Π_{α>0} (λ+ρ, α) / (ρ, α)"""
    rs = lam.system
    rho = rs.rho()
    shifted = tuple(a + b for a, b in zip(lam.eps(), rho))
    result = Rational(1)
    for alpha in rs.positive_roots():
        result *= Rational(inner(shifted, alpha), inner(rho, alpha))
    if not result.is_integer:
        raise InternalInconsistencyError(f"Weyl product for {lam} of {rs} is not an integer: {result}")
    return int(result)


def gl_dim(n: int, p: Partition) -> int:
    """Hook-content formula for the GL_n module indexed by p"""
    if n < 1:
        raise RankValidityError(f"GL_n needs n ≥ 1 (got {n})")
    if p.length > n:
        raise PartitionError(f"partition too long for rank: {p} has {p.length} parts, GL_{n}")
    result = Rational(1)
    for hook, content in hooks_and_contents(p):
        result *= Rational(n + content, hook)
    return int(result)


def dual_weight(lam: DominantWeight) -> DominantWeight:
    """-w₀λ"""
    rs = lam.system
    coeffs = lam.coeffs
    if rs.family == 'A':
        return DominantWeight(rs, tuple(reversed(coeffs)))
    if rs.family == 'D' and rs.rank % 2:
        return DominantWeight(rs, coeffs[:-2] + (coeffs[-1], coeffs[-2]))
    return lam
