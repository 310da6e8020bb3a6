"""Class-level criteria for ℓ-clustered families of linear spaces

A family B of (k-1)-planes in P^n of codimension ε is ℓ-clustered when
the family C of k-planes containing a member of B has codimension ε - ℓ.
Only necessary conditions on the class [B] are computed here, together
with the classes of the model families (planes meeting a subvariety Z,
planes containing a fixed linear space).

Throughout, a context for G(k-1, n) has ``num_parts == k`` and
``max_part == n - k + 1``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from .exceptions import ClusteredError
from .grassmann import (
    GrassContext,
    Partition,
    dual_partition,
    make_context,
)
from .schubert import (
    SchubertClass,
    multiply_classes,
)

__all__ = [
    'ClusterReport',
    'ExtremalFamily',
    'MeetsZModel',
    'FixedSubspaceModel',
    'MuConstruction',
    'cluster_floor',
    'check_necessary',
    'extremal_classify',
    'mu_construction',
    'meets_z_model',
    'fixed_subspace_model',
    'hyperplane_slice',
    'hyperplane_slice_empty',
    'containing_codim',
    'clusteredness',
]

lgr = logging.getLogger('datalad.clustered.clustered')


@dataclass(frozen=True)
class ExtremalFamily:
    """Schubert variety of planes containing a fixed P^fixed_dim"""
    fixed_dim: int
    multiplicity: int

    @property
    def description(self) -> str:
        what = 'point' if self.fixed_dim == 0 else f'P^{self.fixed_dim}'
        desc = f'Schubert variety of planes containing a fixed {what}'
        if self.multiplicity != 1:
            desc += f' (multiplicity {self.multiplicity})'
        return desc


@dataclass(frozen=True)
class ClusterReport:
    epsilon: int
    ell: int
    ell_floor: int
    codim_bound: int
    satisfies_necessary: bool
    extremal: Optional[ExtremalFamily] = None


@dataclass(frozen=True)
class MuConstruction:
    """Partition μ of G(k, n) built from λ of G(k-1, n)"""
    source: GrassContext
    target: GrassContext
    lam: Partition
    ell: int
    dual: Partition
    mu: Partition
    kleiman_bound: int

    @property
    def codim_identity_holds(self) -> bool:
        """|λ| = ℓ(n-k+1) - Σ_{j=k-ℓ+1}^{k} λ*_j"""
        k = self.source.num_parts
        tail = sum(self.dual[j - 1] for j in range(k - self.ell + 1, k + 1))
        return self.lam.size == self.ell * self.source.max_part - tail


@dataclass(frozen=True)
class MeetsZModel:
    """(k-1)-planes of P^n meeting a subvariety Z of dimension m and degree e"""
    n: int
    k: int
    z_dim: int
    z_deg: int
    epsilon: int
    class_b: SchubertClass
    class_c: SchubertClass


@dataclass(frozen=True)
class FixedSubspaceModel:
    """(k-1)-planes of P^n containing a fixed P^(j-1)"""
    n: int
    k: int
    j: int
    class_b: SchubertClass
    class_c: SchubertClass


def _require_nonzero_effective(cls: SchubertClass):
    if not cls:
        raise ClusteredError('zero-class', 'the zero class has no support')
    if not cls.is_effective():
        raise ClusteredError(
            'not-effective',
            f'class {cls} has negative coefficients')


def cluster_floor(cls: SchubertClass) -> int:
    """Lower bound for ℓ certified by the class of B

    Any ℓ for which B could be ℓ-clustered is at least the largest
    number of nonzero parts among the supported partitions.
    """
    _require_nonzero_effective(cls)
    return max(lam.length for lam in cls.support)


def clusteredness(epsilon_b: int, epsilon_c: int) -> int:
    """ℓ for which B is ℓ-clustered, given codim B and codim C"""
    return epsilon_b - epsilon_c


def containing_codim(epsilon: int, ell: int) -> int:
    """Codimension of the containing family of an ℓ-clustered family"""
    return epsilon - ell


def check_necessary(cls: SchubertClass, ell: int) -> ClusterReport:
    """Test the necessary conditions for B to be ℓ-clustered

    Every supported partition has at most ℓ nonzero parts, and
    ε <= ℓ (n - k + 1).
    """
    _require_nonzero_effective(cls)
    if ell < 0:
        raise ClusteredError('invalid-ell', f'ℓ must be nonnegative, got {ell}')
    epsilon = cls.codimension
    floor = cluster_floor(cls)
    bound = ell * cls.ctx.max_part
    lgr.debug('%s: ε=%i, parts floor %i, ℓ=%i, bound %i',
              cls.ctx, epsilon, floor, ell, bound)
    return ClusterReport(
        epsilon=epsilon,
        ell=ell,
        ell_floor=floor,
        codim_bound=bound,
        satisfies_necessary=floor <= ell and epsilon <= bound,
        extremal=extremal_classify(cls, ell),
    )


def extremal_classify(
    cls: SchubertClass,
    ell: int,
) -> Optional[ExtremalFamily]:
    """Identify the extremal case ε = ℓ (n - k + 1)

    Returns the family of planes containing a fixed P^(ℓ-1) when the class
    is a multiple of the rectangle class (max_part^ℓ); ``None`` otherwise.
    """
    if not cls or ell < 1 or ell > cls.ctx.num_parts:
        return None
    epsilon = cls.codimension
    if epsilon != ell * cls.ctx.max_part:
        return None
    rect = cls.ctx.rectangle(ell)
    if cls.support != (rect,):
        return None
    return ExtremalFamily(fixed_dim=ell - 1, multiplicity=cls.coeffs[rect])


def mu_construction(ctx: GrassContext, lam: Partition) -> MuConstruction:
    """Build μ in G(k, n) from λ in G(k-1, n) = ``ctx``

    With ℓ the number of nonzero parts of λ, μ has ``n - k`` in its first
    ``k - ℓ + 1`` parts followed by λ*_{k-ℓ+1}, ..., λ*_k. The codimension
    of a general Schubert variety Σ_μ bounds the codimension of the
    containing family C from above (it meets C).
    """
    lam = ctx.check(lam)
    if not lam.length:
        raise ClusteredError('zero-class', 'μ is undefined for λ = 0')
    k, n = ctx.num_parts, ctx.ambient_dim
    if k >= n:
        raise ClusteredError(
            'invalid-context',
            f'{ctx} has no containing Grassmannian G({k},{n})')
    target = make_context(k, n)
    ell = lam.length
    dual = dual_partition(ctx, lam)
    mu = target.partition(
        (n - k,) * (k - ell + 1) + dual.parts[k - ell:k])
    return MuConstruction(
        source=ctx,
        target=target,
        lam=lam,
        ell=ell,
        dual=dual,
        mu=mu,
        kleiman_bound=target.dimension - mu.size,
    )


def meets_z_model(n: int, k: int, m: int, e: int) -> MeetsZModel:
    """Classes of the (k-1)-planes meeting Z ⊂ P^n, dim Z = m, deg Z = e

    B has class e·σ_(ε) in G(k-1, n) with ε = n - k + 1 - m, and its
    containing family (k-planes meeting Z) has class e·σ_(ε-1) in G(k, n).
    """
    if not 1 <= k <= n - 1:
        raise ClusteredError(
            'invalid-model', f'need 1 <= k <= n-1, got k={k}, n={n}')
    if e < 1:
        raise ClusteredError('invalid-model', f'degree must be positive, got {e}')
    if m < 0:
        raise ClusteredError(
            'invalid-model', f'dim Z must be nonnegative, got {m}')
    if m > n - k:
        raise ClusteredError(
            'invalid-model',
            f'dim Z = {m} leaves codimension {n - k + 1 - m} < 1')
    epsilon = n - k + 1 - m
    ctx_b = make_context(k - 1, n)
    ctx_c = make_context(k, n)
    return MeetsZModel(
        n=n,
        k=k,
        z_dim=m,
        z_deg=e,
        epsilon=epsilon,
        class_b=SchubertClass.sigma(ctx_b, (epsilon,), e),
        class_c=SchubertClass.sigma(ctx_c, (epsilon - 1,), e),
    )


def fixed_subspace_model(n: int, k: int, j: int) -> FixedSubspaceModel:
    if not 1 <= j < k < n:
        raise ClusteredError(
            'invalid-model', f'need 1 <= j < k < n, got j={j}, k={k}, n={n}')
    ctx_b = make_context(k - 1, n)
    ctx_c = make_context(k, n)
    return FixedSubspaceModel(
        n=n,
        k=k,
        j=j,
        class_b=SchubertClass(ctx_b, {ctx_b.rectangle(j): 1}),
        class_c=SchubertClass(ctx_c, {ctx_c.rectangle(j): 1}),
    )


def hyperplane_slice(cls: SchubertClass) -> SchubertClass:
    """Class of the members of B lying in a general hyperplane"""
    return multiply_classes(
        cls, SchubertClass(cls.ctx, {cls.ctx.column(): 1}))


def hyperplane_slice_empty(cls: SchubertClass) -> bool:
    """A general hyperplane contains no member of B

    Happens exactly when every supported partition has a full first row.
    """
    return all(lam[0] == cls.ctx.max_part for lam in cls.support)
