"""
Partition arithmetic, the weight/partition dictionary and Littlewood-Richardson coefficients
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

from src.representation.errors import InternalInconsistencyError, PartitionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive integers (trailing zeros normalized away)"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise PartitionError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated command-line form, e.g. '4,2' ('' is the empty partition)"""
        text = text.strip()
        if not text or text == '0':
            return cls(())
        try:
            return cls(tuple(int(piece) for piece in text.split(',')))
        except ValueError as e:
            if isinstance(e, PartitionError):
                raise
            raise PartitionError(f"cannot read a partition from {text!r}") from e

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def __str__(self) -> str:
        return '(' + ','.join(str(p) for p in self.parts) + ')' if self.parts else '∅'

    def padded(self, n: int) -> Tuple[int, ...]:
        if self.length > n:
            raise PartitionError(f"partition too long for rank: {self} has {self.length} parts, rank {n}")
        return self.parts + (0,) * (n - self.length)

    def contains(self, other: "Partition") -> bool:
        """Diagram containment other ⊆ self"""
        return other.length <= self.length and all(b <= self[i] for i, b in enumerate(other.parts))

    def doubled(self) -> "Partition":
        return Partition(tuple(2 * p for p in self.parts))

    def to_json(self) -> List[int]:
        return list(self.parts)


EMPTY = Partition(())


class Isotypic:
    """Finite multiset of module labels with positive multiplicities"""

    def __init__(self, mults: Optional[Dict[Hashable, int]] = None):
        clean = {}
        for key, mult in (mults or {}).items():
            if mult < 0:
                raise InternalInconsistencyError(f"negative multiplicity {mult} for {key}")
            if mult:
                clean[key] = int(mult)
        self._mults = clean

    @classmethod
    def from_signed(cls, signed: Dict[Hashable, int], context: str = "") -> "Isotypic":
        """Accept a signed accumulation, failing hard if any coefficient stayed negative"""
        negative = {key: mult for key, mult in signed.items() if mult < 0}
        if negative:
            raise InternalInconsistencyError(f"negative multiplicities {negative} {context}".strip())
        return cls(signed)

    def __getitem__(self, key: Hashable) -> int:
        return self._mults.get(key, 0)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._mults

    def __len__(self) -> int:
        return len(self._mults)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Isotypic):
            return self._mults == other._mults
        if isinstance(other, dict):
            return self._mults == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __add__(self, other: "Isotypic") -> "Isotypic":
        total = Counter(self._mults)
        total.update(other._mults)
        return Isotypic(total)

    def __repr__(self) -> str:
        body = ', '.join(f"{key}: {mult}" for key, mult in self.items())
        return f"Isotypic({{{body}}})"

    def scaled(self, factor: int) -> "Isotypic":
        return Isotypic({key: factor * mult for key, mult in self._mults.items()})

    def items(self) -> List[Tuple[Hashable, int]]:
        return sorted(self._mults.items())

    def keys(self) -> List[Hashable]:
        return sorted(self._mults)

    def total(self, dim: Callable[[Hashable], int]) -> int:
        """Σ mult · dim(key)"""
        return sum(mult * dim(key) for key, mult in self._mults.items())


def transpose(p: Partition) -> Partition:
    """Conjugate partition (columns become rows)"""
    if not p.parts:
        return EMPTY
    return Partition(tuple(sum(1 for part in p.parts if part > i) for i in range(p.parts[0])))


def weight_to_partition(coeffs: Sequence[int]) -> Partition:
    """λ_j = Σ_{i≥j} a_i"""
    if any(a < 0 for a in coeffs):
        raise PartitionError(f"negative fundamental-weight coefficient in {tuple(coeffs)}")
    tails = []
    running = 0
    for a in reversed(coeffs):
        running += a
        tails.append(running)
    return Partition(tuple(reversed(tails)))


def partition_to_weight(p: Partition, n: int) -> Tuple[int, ...]:
    """Inverse of weight_to_partition: a_i = λ_i - λ_{i+1}"""
    padded = p.padded(n) + (0,)
    return tuple(padded[i] - padded[i + 1] for i in range(n))


def partitions_of(size: int, max_length: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of `size`, largest first, optionally bounded in length and part size"""
    def build(remaining: int, cap: int, slots: Optional[int]) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for head in range(min(remaining, cap), 0, -1):
            for tail in build(remaining - head, head, None if slots is None else slots - 1):
                yield (head,) + tail

    cap = size if max_part is None else max_part
    for parts in build(size, cap, max_length):
        yield Partition(parts)


def partitions_up_to(max_size: int, max_length: Optional[int] = None) -> Iterator[Partition]:
    for size in range(max_size + 1):
        yield from partitions_of(size, max_length)


def _lr_fillings(outer: Partition, inner: Partition, content: Optional[Partition] = None) -> Iterator[Tuple[int, ...]]:
    """
    Enumerate Littlewood-Richardson fillings of outer/inner.

    Cells are filled in reading order (rows top to bottom, each row right to left);
    rows weakly increase, columns strictly increase, and every prefix of the reading
    word is a lattice word. Yields the content of each filling.
    """
    rows = outer.length
    cells = [(r, c) for r in range(rows) for c in range(outer[r] - 1, inner[r] - 1, -1)]
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (rows + 2)
    target = None if content is None else content.padded(max(content.length, rows + 1))

    def place(i: int) -> Iterator[Tuple[int, ...]]:
        if i == len(cells):
            yield tuple(counts[1:])
            return
        r, c = cells[i]
        hi = r + 1
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        above = filling.get((r - 1, c))
        lo = 1 if above is None else above + 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            if target is not None and counts[v] >= target[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            yield from place(i + 1)
            del filling[(r, c)]
            counts[v] -= 1

    yield from place(0)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """N^λ_{μ,ν}: multiplicity of the λ-module in the μ ⊗ ν tensor product"""
    if lam.size != mu.size + nu.size or not lam.contains(mu) or not lam.contains(nu):
        return 0
    return sum(1 for _ in _lr_fillings(lam, mu, nu))


@lru_cache(maxsize=None)
def _skew_expansion_cached(lam: Partition, nu: Partition) -> Tuple[Tuple[Partition, int], ...]:
    contents = Counter(Partition(content) for content in _lr_fillings(lam, nu))
    return tuple(sorted(contents.items()))


def skew_expansion(lam: Partition, nu: Partition) -> Isotypic:
    """{μ: N^λ_{μ,ν}}, collected from a single pass over the fillings of λ/ν"""
    if not lam.contains(nu):
        raise PartitionError(f"not a subdiagram: {nu} ⊄ {lam}")
    return Isotypic(dict(_skew_expansion_cached(lam, nu)))


def hooks_and_contents(p: Partition) -> Iterable[Tuple[int, int]]:
    """(hook length, content) for every box of the diagram"""
    columns = transpose(p)
    for i, row in enumerate(p.parts):
        for j in range(row):
            yield row - j + columns[j] - i - 1, j - i
