"""Partitions and Grassmannian bookkeeping

A :class:`GrassContext` fixes the Grassmannian G(k, n) of projective
k-planes in P^n. Schubert classes of G(k, n) are indexed by partitions
with ``k + 1`` parts, each at most ``n - k``. Partitions are always stored
at full length (trailing zeros included) once they are tied to a context.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import (
    Iterable,
    Iterator,
    List,
    Tuple,
)

from .exceptions import ClusteredError

__all__ = [
    'GrassContext',
    'Partition',
    'make_context',
    'SHIFT_MODES',
    'enumerate_partitions',
    'partitions_of_size',
    'partition_order',
    'dual_partition',
    'shift_partition',
]

lgr = logging.getLogger('datalad.clustered.grassmann')

SHIFT_MODES = ('h', 'p')


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of nonnegative integers"""
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ClusteredError(
                'inadmissible', f'negative part in partition {parts}')
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ClusteredError(
                'inadmissible', f'partition {parts} is not weakly decreasing')
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, *parts: int) -> 'Partition':
        return cls(tuple(parts))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, idx):
        return self.parts[idx]

    def __str__(self) -> str:
        return f"({','.join(str(p) for p in self.parts)})"

    @property
    def size(self) -> int:
        """|λ|, the codimension of the indexed Schubert class"""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts"""
        return sum(1 for p in self.parts if p)

    def trimmed(self) -> Tuple[int, ...]:
        """Parts without trailing zeros"""
        return self.parts[:self.length]

    def padded(self, length: int) -> 'Partition':
        if self.length > length:
            raise ClusteredError(
                'inadmissible',
                f'partition {self} has more than {length} nonzero parts')
        trimmed = self.trimmed()
        return Partition(trimmed + (0,) * (length - len(trimmed)))


@dataclass(frozen=True)
class GrassContext:
    """The Grassmannian G(plane_dim, ambient_dim)"""
    plane_dim: int
    ambient_dim: int

    def __post_init__(self):
        if self.plane_dim < 0 or self.ambient_dim < 0:
            raise ClusteredError(
                'invalid-context',
                f'negative dimension in G({self.plane_dim},{self.ambient_dim})')
        if self.plane_dim >= self.ambient_dim:
            raise ClusteredError(
                'invalid-context',
                f'plane dimension {self.plane_dim} must be smaller than '
                f'ambient dimension {self.ambient_dim}')

    def __str__(self) -> str:
        return f'G({self.plane_dim},{self.ambient_dim})'

    @property
    def num_parts(self) -> int:
        return self.plane_dim + 1

    @property
    def max_part(self) -> int:
        return self.ambient_dim - self.plane_dim

    @property
    def dimension(self) -> int:
        return self.num_parts * self.max_part

    def partition(self, parts: Iterable[int]) -> Partition:
        """Build an admissible full-length partition from ``parts``

        Missing trailing parts are filled with zeros.
        """
        return self.check(Partition(tuple(parts)))

    def check(self, lam: Partition) -> Partition:
        """Return ``lam`` at full length, or fail if it does not fit the box"""
        if lam.length > self.num_parts:
            raise ClusteredError(
                'inadmissible',
                f'partition {lam} has more than {self.num_parts} parts '
                f'for {self}')
        if lam.length and lam[0] > self.max_part:
            raise ClusteredError(
                'inadmissible',
                f'partition {lam} has a part larger than {self.max_part} '
                f'for {self}')
        return lam if len(lam) == self.num_parts else lam.padded(self.num_parts)

    def admits(self, parts: Iterable[int]) -> bool:
        try:
            self.partition(parts)
        except ClusteredError:
            return False
        return True

    def zero(self) -> Partition:
        return Partition((0,) * self.num_parts)

    def rectangle(self, rows: int) -> Partition:
        """(max_part^rows, 0, ..., 0)"""
        if not 0 <= rows <= self.num_parts:
            raise ClusteredError(
                'inadmissible',
                f'{self} has no rectangle partition with {rows} rows')
        return Partition(
            (self.max_part,) * rows + (0,) * (self.num_parts - rows))

    def column(self) -> Partition:
        """(1, ..., 1), the class of planes inside a fixed hyperplane"""
        return Partition((1,) * self.num_parts)

    def row(self, width: int) -> Partition:
        """(width, 0, ..., 0)"""
        return self.partition((width,))


def make_context(plane_dim: int, ambient_dim: int) -> GrassContext:
    """Context for G(plane_dim, ambient_dim)

    Raises ``ClusteredError('invalid-context')`` unless
    ``0 <= plane_dim < ambient_dim``.
    """
    return GrassContext(int(plane_dim), int(ambient_dim))


def partition_order(lam: Partition) -> Tuple[int, Tuple[int, ...]]:
    """Sort key: size ascending, then lexicographically descending"""
    return lam.size, tuple(-p for p in lam.parts)


def enumerate_partitions(ctx: GrassContext) -> List[Partition]:
    """All admissible partitions of ``ctx`` in ``partition_order``

    The number of partitions is ``binomial(ambient_dim + 1, plane_dim + 1)``.
    """
    return list(_enumerate_partitions(ctx))


@lru_cache(maxsize=None)
def _enumerate_partitions(ctx: GrassContext) -> Tuple[Partition, ...]:
    parts = [
        Partition(tuple(reversed(c)))
        for c in combinations_with_replacement(
            range(ctx.max_part + 1), ctx.num_parts)
    ]
    parts.sort(key=partition_order)
    lgr.debug('enumerated %i partitions for %s', len(parts), ctx)
    return tuple(parts)


def partitions_of_size(ctx: GrassContext, size: int) -> List[Partition]:
    return [p for p in _enumerate_partitions(ctx) if p.size == size]


def dual_partition(ctx: GrassContext, lam: Partition) -> Partition:
    """λ*_i = max_part - λ_{num_parts + 1 - i}

    ``|λ| + |λ*|`` equals the dimension of the Grassmannian, and the
    operation is an involution.
    """
    lam = ctx.check(lam)
    return Partition(tuple(ctx.max_part - p for p in reversed(lam.parts)))


def shift_partition(ctx: GrassContext, lam: Partition, mode: str) -> Partition:
    """λ^h (add one to every part) or λ^p (prepend a full row)

    λ^h needs λ_1 != max_part, λ^p needs a trailing zero part.
    """
    lam = ctx.check(lam)
    if mode == 'h':
        if lam[0] == ctx.max_part:
            raise ClusteredError(
                'h-undefined',
                f'{lam} already has a full first row in {ctx}')
        return Partition(tuple(p + 1 for p in lam))
    elif mode == 'p':
        if lam[-1] != 0:
            raise ClusteredError(
                'p-undefined',
                f'{lam} has no trailing zero part in {ctx}')
        return Partition((ctx.max_part,) + lam.parts[:-1])
    raise ClusteredError(
        'out-of-range',
        f'unknown shift mode {mode!r}, expected one of {SHIFT_MODES}')
