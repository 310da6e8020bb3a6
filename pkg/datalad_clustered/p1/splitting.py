"""Splitting types of kernels of maps O(1)^N -> O(d) on P^1

The kernel E of a nonzero map given by N forms of degree d-1 is a vector
bundle of rank N-1. Its splitting type is recovered from the section
dimensions h(t) = h^0(E(t)), which are kernel dimensions of explicit
matrices over the rationals:

    #{i : a_i >= -t} = h(t) - h(t-1)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from random import Random
from typing import (
    Dict,
    Iterable,
    List,
    Tuple,
)

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..exceptions import ClusteredError
from .forms import BinaryForm

__all__ = [
    'GradedMap',
    'SplittingType',
    'build_osculating_map',
    'kernel_section_dimension',
    'kernel_splitting_type',
    'is_balanced',
    'random_form',
    'random_osculating_map',
]

lgr = logging.getLogger('datalad.clustered.p1.splitting')


@dataclass(frozen=True)
class GradedMap:
    """The map O(1)^source_rank -> O(target_degree) given by ``entries``"""
    entries: Tuple[BinaryForm, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ClusteredError('zero-map', 'a map needs at least one entry')
        degrees = {f.degree for f in entries}
        if len(degrees) != 1:
            raise ClusteredError(
                'degree-mismatch',
                f'entries have different degrees {sorted(degrees)}')
        if not any(entries):
            raise ClusteredError('zero-map', 'all entries are zero')
        object.__setattr__(self, 'entries', entries)

    @property
    def source_rank(self) -> int:
        return len(self.entries)

    @property
    def target_degree(self) -> int:
        return self.entries[0].degree + 1

    def base_locus_degree(self) -> int:
        """Degree of the common factor of all entries"""
        g = None
        for f in self.entries:
            if not f:
                continue
            p = f.as_poly()
            g = p if g is None else g.gcd(p)
        return g.total_degree()


@dataclass(frozen=True)
class SplittingType:
    """a_1 >= ... >= a_rank; E = O(a_1) + ... + O(a_rank)"""
    twists: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, 'twists', tuple(sorted((int(a) for a in self.twists),
                                         reverse=True)))

    def __iter__(self):
        return iter(self.twists)

    def __len__(self) -> int:
        return len(self.twists)

    @property
    def rank(self) -> int:
        return len(self.twists)

    @property
    def degree(self) -> int:
        return sum(self.twists)

    def section_dimension(self, t: int) -> int:
        """h^0(E(t)) = Σ max(a_i + 1 + t, 0)"""
        return sum(max(a + 1 + t, 0) for a in self.twists)


def build_osculating_map(p: BinaryForm, fs: Iterable[BinaryForm]) -> GradedMap:
    """The map (∂p/∂s, ∂p/∂t, f_2, ..., f_n)

    ``p`` must have at least two distinct roots, and every f_i the degree
    of the partial derivatives.
    """
    fs = tuple(fs)
    if not p or p.degree < 2 or p.distinct_roots() < 2:
        raise ClusteredError(
            'single-root', f'{p} does not have two distinct roots')
    for f in fs:
        if f.degree != p.degree - 1:
            raise ClusteredError(
                'degree-mismatch',
                f'{f} has degree {f.degree}, expected {p.degree - 1}')
    return GradedMap((p.d_s(), p.d_t()) + fs)


def kernel_section_dimension(m: GradedMap, t: int) -> int:
    """dim ker(H^0(O(1+t))^N -> H^0(O(d+t)))

    Columns are the images f_i · s^(1+t-a) t^a, written in the monomial
    basis of degree d + t.
    """
    src = 1 + t
    if src < 0:
        return 0
    rows = m.target_degree + t + 1
    columns: List[List] = []
    for f in m.entries:
        for a in range(src + 1):
            col = [QQ(0)] * rows
            for j, c in enumerate(f.coefficients):
                col[j + a] = QQ(c.p, c.q)
            columns.append(col)
    matrix = DomainMatrix(
        [[columns[c][r] for c in range(len(columns))] for r in range(rows)],
        (rows, len(columns)),
        QQ,
    )
    return len(columns) - matrix.rank()


def kernel_splitting_type(m: GradedMap) -> SplittingType:
    """Splitting type of the kernel bundle of ``m``

    Twists are at most 1 and at least 2 - d, so section dimensions for
    t = -1, ..., d - 1 determine them.
    """
    rank = m.source_rank - 1
    h: Dict[int, int] = {}

    def h0(t: int) -> int:
        if t not in h:
            h[t] = kernel_section_dimension(m, t)
        return h[t]

    twists: List[int] = []
    # count of twists >= twist + 1
    above = 0
    twist = 1
    lowest = -m.target_degree
    while len(twists) < rank:
        if twist < lowest:
            raise ClusteredError(
                'postcondition',
                f'section dimensions {h} do not determine a splitting type '
                f'of rank {rank}')
        at_least = h0(-twist) - h0(-twist - 1)
        twists.extend([twist] * (at_least - above))
        above = at_least
        twist -= 1
    lgr.debug('kernel section dimensions %s give twists %s', h, twists)
    return SplittingType(tuple(twists))


def is_balanced(st: SplittingType) -> bool:
    """|a_i - a_j| <= 1 for all i, j"""
    if not st.rank:
        raise ClusteredError('empty-type', 'balancedness of an empty type')
    return st.twists[0] - st.twists[-1] <= 1


def random_form(rng: Random, degree: int, bound: int = 10) -> BinaryForm:
    """Binary form with integer coefficients drawn from [-bound, bound]"""
    return BinaryForm(
        degree, tuple(rng.randint(-bound, bound) for _ in range(degree + 1)))


def random_osculating_map(rng: Random, n: int, d: int) -> GradedMap:
    """A random instance (∂p/∂s, ∂p/∂t, f_2, ..., f_n) with deg p = d

    p is redrawn until it has two distinct roots.
    """
    if d < 2:
        raise ClusteredError('single-root', f'degree {d} forms have one root')
    while True:
        p = random_form(rng, d)
        if p and p.distinct_roots() >= 2:
            break
    return build_osculating_map(
        p, [random_form(rng, d - 1) for _ in range(n - 1)])
