"""Integer cohomology of G(k, n) in the Schubert basis

Products are computed with Littlewood-Richardson coefficients, obtained by
enumerating LR skew tableaux. Partitions that do not fit the box of the
context are dropped from products (the ring of a fixed Grassmannian is a
quotient of the ring of symmetric functions).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import (
    Dict,
    Iterable,
    Iterator,
    Mapping,
    Sequence,
    Tuple,
)

from sympy import (
    Matrix,
    Poly,
    symbols,
)

from .exceptions import ClusteredError
from .grassmann import (
    GrassContext,
    Partition,
    partition_order,
    partitions_of_size,
)

__all__ = [
    'SchubertClass',
    'lr_coefficient',
    'multiply_classes',
    'product_nonzero',
    'is_rectangle_rigid',
    'pairing',
    'schur_product_oracle',
]

lgr = logging.getLogger('datalad.clustered.schubert')


@dataclass(frozen=True, eq=True)
class SchubertClass:
    """Finite integer combination of Schubert classes of one Grassmannian"""
    ctx: GrassContext
    coeffs: Mapping[Partition, int]

    def __post_init__(self):
        normalized: Dict[Partition, int] = {}
        for lam, c in self.coeffs.items():
            if not isinstance(lam, Partition):
                lam = Partition(tuple(lam))
            lam = self.ctx.check(lam)
            normalized[lam] = normalized.get(lam, 0) + int(c)
        object.__setattr__(self, 'coeffs', {
            lam: normalized[lam]
            for lam in sorted(normalized, key=partition_order)
            if normalized[lam]
        })

    @classmethod
    def sigma(cls, ctx: GrassContext, parts: Iterable[int], coeff: int = 1):
        return cls(ctx, {ctx.partition(parts): coeff})

    @classmethod
    def zero(cls, ctx: GrassContext):
        return cls(ctx, {})

    @classmethod
    def fundamental(cls, ctx: GrassContext):
        return cls(ctx, {ctx.zero(): 1})

    @classmethod
    def point(cls, ctx: GrassContext):
        return cls(ctx, {ctx.rectangle(ctx.num_parts): 1})

    def __str__(self) -> str:
        if not self.coeffs:
            return '0'
        return ' + '.join(
            f"{'' if c == 1 else c}σ{lam}" for lam, c in self.coeffs.items())

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __iter__(self) -> Iterator[Tuple[Partition, int]]:
        return iter(self.coeffs.items())

    def __add__(self, other: 'SchubertClass') -> 'SchubertClass':
        _check_same_context(self, other)
        summed = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            summed[lam] = summed.get(lam, 0) + c
        return SchubertClass(self.ctx, summed)

    def __neg__(self) -> 'SchubertClass':
        return self.scale(-1)

    def __sub__(self, other: 'SchubertClass') -> 'SchubertClass':
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SchubertClass):
            return multiply_classes(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor: int) -> 'SchubertClass':
        return SchubertClass(
            self.ctx, {lam: factor * c for lam, c in self.coeffs.items()})

    @property
    def support(self) -> Tuple[Partition, ...]:
        return tuple(self.coeffs)

    def coefficient(self, lam: Partition | Sequence[int]) -> int:
        if not isinstance(lam, Partition):
            lam = Partition(tuple(lam))
        return self.coeffs.get(self.ctx.check(lam), 0)

    def is_effective(self) -> bool:
        """All coefficients nonnegative, as for classes of subvarieties"""
        return all(c >= 0 for c in self.coeffs.values())

    def is_homogeneous(self) -> bool:
        return len({lam.size for lam in self.coeffs}) <= 1

    @property
    def codimension(self) -> int:
        """The common size ε of all supported partitions"""
        sizes = {lam.size for lam in self.coeffs}
        if len(sizes) != 1:
            raise ClusteredError(
                'not-homogeneous',
                f'class {self} has no single codimension')
        return sizes.pop()


def _check_same_context(a: SchubertClass, b: SchubertClass):
    if a.ctx != b.ctx:
        raise ClusteredError(
            'context-mismatch',
            f'cannot combine classes of {a.ctx} and {b.ctx}')


def lr_coefficient(
    lam: Partition | Sequence[int],
    mu: Partition | Sequence[int],
    nu: Partition | Sequence[int],
) -> int:
    """Littlewood-Richardson coefficient c^ν_{λ,μ}

    Counts LR skew tableaux of shape ν/λ and content μ. Trailing zeros
    are ignored; incompatible shapes yield 0.
    """
    lam, mu, nu = (_trim(p) for p in (lam, mu, nu))
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    return _lr(lam, mu, nu)


def _trim(p) -> Tuple[int, ...]:
    if not isinstance(p, Partition):
        p = Partition(tuple(p))
    return p.trimmed()


@lru_cache(maxsize=None)
def _lr(
    lam: Tuple[int, ...],
    mu: Tuple[int, ...],
    nu: Tuple[int, ...],
) -> int:
    if len(lam) > len(nu) or len(mu) > len(nu):
        return 0
    lam = lam + (0,) * (len(nu) - len(lam))
    if any(l > n for l, n in zip(lam, nu)):
        return 0

    # reading order: rows top to bottom, each row right to left
    cells = [
        (r, c)
        for r in range(len(nu))
        for c in range(nu[r] - 1, lam[r] - 1, -1)
    ]
    filling: Dict[Tuple[int, int], int] = {}
    # counts[v] is the number of entries v placed so far (1-based)
    counts = [0] * (len(mu) + 1)

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = len(mu)
        right = filling.get((r, c + 1))
        if right is not None:
            # rows weakly increase
            hi = min(hi, right)
        above = filling.get((r - 1, c))
        # columns strictly increase
        lo = 1 if above is None else above + 1
        found = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                # lattice word condition
                continue
            filling[(r, c)] = v
            counts[v] += 1
            found += place(idx + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return found

    return place(0)


def multiply_classes(a: SchubertClass, b: SchubertClass) -> SchubertClass:
    """Bilinear product, truncated to the partitions admissible in the context"""
    _check_same_context(a, b)
    ctx = a.ctx
    product: Dict[Partition, int] = {}
    for lam, ca in a.coeffs.items():
        for mu, cb in b.coeffs.items():
            for nu in partitions_of_size(ctx, lam.size + mu.size):
                c = lr_coefficient(lam, mu, nu)
                if c:
                    product[nu] = product.get(nu, 0) + ca * cb * c
    lgr.debug('Littlewood-Richardson memo: %s', _lr.cache_info())
    return SchubertClass(ctx, product)


def product_nonzero(ctx: GrassContext, lam: Partition, mu: Partition) -> bool:
    """σ_λ · σ_μ != 0 iff μ_i <= max_part - λ_{num_parts + 1 - i} for all i"""
    lam = ctx.check(lam)
    mu = ctx.check(mu)
    return all(
        m <= ctx.max_part - l
        for m, l in zip(mu, reversed(lam.parts))
    )


def is_rectangle_rigid(ctx: GrassContext, lam: Partition) -> bool:
    """True for (max_part^j, 0^(num_parts - j)), the multi-rigid rectangles"""
    lam = ctx.check(lam)
    return all(p in (0, ctx.max_part) for p in lam)


def pairing(a: SchubertClass, b: SchubertClass) -> int:
    """Intersection number: point-class coefficient of the product"""
    return multiply_classes(a, b).coefficient(a.ctx.rectangle(a.ctx.num_parts))


def schur_product_oracle(
    ctx: GrassContext,
    lam: Partition,
    mu: Partition,
) -> SchubertClass:
    """σ_λ · σ_μ via Schur polynomials in ``num_parts`` variables

    Independent of the tableau enumeration: s_λ is obtained as a quotient
    of alternants, and the coefficient of s_ν in s_λ s_μ is read off the
    monomial x^(ν+δ) of s_λ · a_(μ+δ).
    """
    lam = ctx.check(lam)
    mu = ctx.check(mu)
    coeffs = _schur_product(ctx.num_parts, lam.parts, mu.parts)
    return SchubertClass(ctx, {
        Partition(nu): c for nu, c in coeffs.items()
        if nu[0] <= ctx.max_part
    })


@lru_cache(maxsize=None)
def _schur_product(
    nvars: int,
    lam: Tuple[int, ...],
    mu: Tuple[int, ...],
) -> Dict[Tuple[int, ...], int]:
    xs = symbols(f'x0:{nvars}')
    delta = tuple(range(nvars - 1, -1, -1))
    product = _schur_poly(lam, xs) * _alternant(
        tuple(m + d for m, d in zip(mu, delta)), xs)
    coeffs = {}
    for exps, c in product.terms():
        if all(a > b for a, b in zip(exps, exps[1:])):
            coeffs[tuple(e - d for e, d in zip(exps, delta))] = int(c)
    return coeffs


def _alternant(exponents: Tuple[int, ...], xs) -> Poly:
    m = len(xs)
    return Poly(
        Matrix(m, m, lambda i, j: xs[i] ** exponents[j]).det(), *xs)


def _schur_poly(parts: Tuple[int, ...], xs) -> Poly:
    m = len(xs)
    delta = tuple(range(m - 1, -1, -1))
    return _alternant(
        tuple(p + d for p, d in zip(parts, delta)), xs
    ).exquo(_alternant(delta, xs))
