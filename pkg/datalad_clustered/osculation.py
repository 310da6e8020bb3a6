"""Osculation varieties and degree thresholds for very general hypersurfaces

Closed formulas only: dimensions of contact incidence varieties, the
canonical multidegrees of the osculation varieties Δ_r and Δ_{r,s}, and
the degree bounds above which the hyperbolicity-type statements for a
very general hypersurface X ⊂ P^n of degree d apply. All comparisons are
exact (integers and fractions).

Multidegrees are ordered (Grassmannian of lines, first P^n factor,
second P^n factor).
"""

from __future__ import annotations

import logging
from dataclasses import (
    dataclass,
    field,
)
from fractions import Fraction
from math import (
    ceil,
    comb,
    floor,
    isqrt,
)
from typing import (
    Callable,
    Dict,
    Optional,
    Tuple,
)

from .exceptions import ClusteredError

__all__ = [
    'IncidenceDimension',
    'OsculationReport',
    'GeneralTypeThresholds',
    'Threshold',
    'Verdict',
    'ThresholdReport',
    'incidence_dimension',
    'canonical_multidegree',
    'double_osculation_step',
    'general_type_thresholds',
    'injectivity_codimension',
    'codimension_chain',
    'CHAIN_LEVELS',
    'lang_thresholds',
    'lang_threshold_report',
]

lgr = logging.getLogger('datalad.clustered.osculation')


@dataclass(frozen=True)
class IncidenceDimension:
    n: int
    d: int
    i: int
    dim: int
    zi_empty_when: bool
    zi_proper_when: bool


@dataclass(frozen=True)
class OsculationReport:
    n: int
    d: int
    r: int
    s: Optional[int]
    total_dim: int
    fiber_dim: int
    multidegree: Tuple[int, ...]
    general_type: bool
    genus_coefficient: int

    @property
    def forms_dim(self) -> int:
        """Dimension of the space V of degree d forms"""
        return self.total_dim - self.fiber_dim


@dataclass(frozen=True)
class GeneralTypeThresholds:
    n: int
    delta_d: int
    delta_rs: int
    # least d where every Δ_{r,d-r} has a nonnegative Grassmannian twist
    # and positive point twists
    delta_rs_weak: int
    # least integers above sqrt(2n) + 1 and 2 sqrt(n) + 1
    bound_d: int
    bound_rs: int


def incidence_dimension(n: int, d: int, i: int) -> IncidenceDimension:
    """Dimension of lines with i marked points and prescribed contact

    The incidence of (line, p_1..p_i, X) with X cutting the line in a
    partition of d supported at the p_j has dimension
    2n - 3 + i + binomial(n + d, d) - d. Consequently Z_i is empty for a
    general X when d > 2n - 2 + i, and a proper subset when d > n - 1 + i.
    """
    if n < 2 or d < 1 or not 1 <= i <= d:
        raise ClusteredError(
            'out-of-range',
            f'need n >= 2, d >= 1, 1 <= i <= d; got n={n}, d={d}, i={i}')
    return IncidenceDimension(
        n=n,
        d=d,
        i=i,
        dim=2 * n - 3 + i + comb(n + d, d) - d,
        zi_empty_when=d > 2 * n - 2 + i,
        zi_proper_when=d > n - 1 + i,
    )


def _triangular(r: int) -> int:
    return r * (r - 1) // 2


def canonical_multidegree(
    n: int,
    d: int,
    r: int,
    s: Optional[int] = None,
) -> OsculationReport:
    """Canonical bundle twists of Δ_r, or of Δ_{r,s} when ``s`` is given

    ω(Δ_r)     = (r(r-1)/2 - n, rd - r(r-1) - 2)
    ω(Δ_{r,s}) = (r(r-1)/2 + s(s-1)/2 - n, r(d-r+1) - 2, s(d-s+1) - 2)

    General type is certified by all twists being positive.
    """
    if n < 1 or d < 1:
        raise ClusteredError(
            'out-of-range', f'need n >= 1 and d >= 1, got n={n}, d={d}')
    if not 1 <= r <= d:
        raise ClusteredError(
            'invalid-contact', f'need 1 <= r <= d, got r={r}, d={d}')
    forms = comb(n + d, d)
    if s is None:
        multidegree = (_triangular(r) - n, r * d - r * (r - 1) - 2)
        # lines with one marked point, r conditions on the form
        fiber = 2 * n - 1 - r
    else:
        if s < 1 or r + s > d:
            raise ClusteredError(
                'invalid-contact',
                f'need s >= 1 and r + s <= d, got r={r}, s={s}, d={d}')
        multidegree = (
            _triangular(r) + _triangular(s) - n,
            r * (d - r + 1) - 2,
            s * (d - s + 1) - 2,
        )
        fiber = 2 * n - r - s
    return OsculationReport(
        n=n,
        d=d,
        r=r,
        s=s,
        total_dim=fiber + forms,
        fiber_dim=fiber,
        multidegree=multidegree,
        general_type=all(m > 0 for m in multidegree),
        genus_coefficient=d - 2,
    )


def double_osculation_step(n: int, d: int, r: int) -> Tuple[int, int, int]:
    """Canonical twists of the intermediate Δ_{r,1}

    Δ_{r,1} is cut out of Δ_r × P^n by the second marked point lying on
    the line and on X.
    """
    if not 1 <= r < d:
        raise ClusteredError(
            'invalid-contact', f'need 1 <= r < d, got r={r}, d={d}')
    return (_triangular(r) - n + 1, r * d - r * (r - 1) - 2, d - 2)


def _ceil_sqrt(x: int) -> int:
    return 0 if x <= 0 else isqrt(x - 1) + 1


def _least_degree(n: int, accept: Callable[[Tuple[int, ...]], bool]) -> int:
    """Least d >= 2 with ``accept`` true on every Δ_{r,d-r} multidegree"""
    d = 2
    while not all(
            accept(canonical_multidegree(n, d, r, d - r).multidegree)
            for r in range(1, d)):
        d += 1
    return d


def general_type_thresholds(n: int) -> GeneralTypeThresholds:
    """Least degrees making Δ_d(X), resp. every Δ_{r,d-r}(X), of general type

    General type is certified by all canonical twists being positive. For
    Δ_{r,d-r} the balanced split can leave a zero Grassmannian twist at
    d = 2 sqrt(n) + 1 (n = 4, d = 5 gives (0, 6, 4) for r = 2), so
    ``delta_rs`` may exceed ``bound_rs`` by one; ``delta_rs_weak`` never does.
    """
    if n < 2:
        raise ClusteredError('out-of-range', f'need n >= 2, got {n}')
    delta_d = 1
    while not canonical_multidegree(n, delta_d, delta_d).general_type:
        delta_d += 1
    delta_rs = _least_degree(n, lambda m: all(x > 0 for x in m))
    delta_rs_weak = _least_degree(
        n, lambda m: m[0] >= 0 and m[1] > 0 and m[2] > 0)
    return GeneralTypeThresholds(
        n=n,
        delta_d=delta_d,
        delta_rs=delta_rs,
        delta_rs_weak=delta_rs_weak,
        bound_d=1 + _ceil_sqrt(2 * n),
        bound_rs=1 + _ceil_sqrt(4 * n),
    )


def injectivity_codimension(n: int, d: int) -> Dict[str, int]:
    """Codimension bounds for the loci where α, resp. β_k, fail to be injective

    α (points of Z_1) is injective away from Z_L once 2d - 2n + 1 >= n,
    the β_k (points of Z_2) once 2d - 2n - 1 >= n.
    """
    return {
        'alpha': 2 * d - 2 * n + 1,
        'beta': 2 * d - 2 * n - 1,
    }


def codimension_chain(m: int, n: int) -> int:
    """Codimension 2(m - n) + 1 of an induced tower at level n below m"""
    if m < n:
        raise ClusteredError('out-of-range', f'need m >= n, got m={m}, n={n}')
    return 2 * (m - n) + 1


@dataclass(frozen=True)
class Threshold:
    """Degree condition ``d >= bound``, or ``d > bound`` when strict"""
    label: str
    statement: str
    bound: Fraction
    strict: bool = False
    conditional: bool = False

    def holds_at(self, d: int) -> bool:
        return d > self.bound if self.strict else d >= self.bound

    @property
    def min_degree(self) -> int:
        return floor(self.bound) + 1 if self.strict else ceil(self.bound)


@dataclass(frozen=True)
class Verdict:
    label: str
    statement: str
    bound: Fraction
    strict: bool
    conditional: bool
    min_degree: int
    holds: bool

    @classmethod
    def of(cls, threshold: Threshold, d: int) -> 'Verdict':
        return cls(
            label=threshold.label,
            statement=threshold.statement,
            bound=threshold.bound,
            strict=threshold.strict,
            conditional=threshold.conditional,
            min_degree=threshold.min_degree,
            holds=threshold.holds_at(d),
        )


@dataclass(frozen=True)
class ThresholdReport:
    n: int
    d: int
    verdicts: Dict[str, Verdict]
    chow_k_family: Dict[int, Verdict] = field(default_factory=dict)
    zi_empty: Dict[int, Verdict] = field(default_factory=dict)
    zi_proper: Dict[int, Verdict] = field(default_factory=dict)
    codimension_chain: Dict[int, int] = field(default_factory=dict)

    def __getitem__(self, label: str) -> Verdict:
        return self.verdicts[label]

    def rows(self):
        """All verdicts, flattened, in report order"""
        yield from self.verdicts.values()
        for group in (self.chow_k_family, self.zi_empty, self.zi_proper):
            yield from group.values()


def _half(numerator: int) -> Fraction:
    return Fraction(numerator, 2)


# levels m = n, ..., n + CHAIN_LEVELS of the codimension chain in a report,
# fewer when d is smaller
CHAIN_LEVELS = 10


# label -> (statement, bound as a function of n)
_THRESHOLDS: Dict[str, Tuple[str, Callable[[int], Fraction]]] = {
    'algHypOutsideZL': (
        'algebraically hyperbolic outside Z_L (2g-2 >= H.C)',
        lambda n: _half(3 * n + 2)),
    'linesOnly': (
        'contains lines but no other rational curves',
        lambda n: _half(3 * n)),
    'chowZ2': (
        'points rationally equivalent to another point lie in Z_2',
        lambda n: _half(3 * n + 3)),
    'z1AlgHyp': (
        'Z_1 algebraically hyperbolic outside Z_L',
        lambda n: _half(3 * n - 1)),
    'z2AlgHyp': (
        'Z_2 algebraically hyperbolic outside Z_L',
        lambda n: _half(3 * n + 1)),
    'alphaInjective': (
        'alpha injective away from Z_L (2d-2n+1 >= n)',
        lambda n: _half(3 * n - 1)),
    'betaInjective': (
        'beta_k injective away from Z_L (2d-2n-1 >= n)',
        lambda n: _half(3 * n + 1)),
    'algHypEverywhere': (
        'algebraically hyperbolic (earlier bound 2n-2+max(0,4-n))',
        lambda n: Fraction(2 * n - 2 + max(0, 4 - n))),
}


def lang_thresholds(n: int, max_points: int = 2) -> Dict[str, Threshold]:
    """All degree thresholds for hypersurfaces in P^n, keyed by label

    Parameterized statements get labels ``chowKFamily[k]`` (k = 1..n-1),
    ``ziEmpty[i]`` and ``ziProper[i]`` (i = 1..max_points).
    """
    if n < 3:
        raise ClusteredError('out-of-range', f'need n >= 3, got {n}')
    thresholds = {
        label: Threshold(label, statement, bound(n))
        for label, (statement, bound) in _THRESHOLDS.items()
    }
    thresholds['gglExceptionalZ2'] = Threshold(
        'gglExceptionalZ2',
        'entire curves lie in Z_2, assuming a relative '
        'Green-Griffiths-Lang statement',
        _half(3 * n + 2),
        conditional=True,
    )
    for k in range(1, n):
        label = f'chowKFamily[{k}]'
        thresholds[label] = Threshold(
            label,
            f'points equivalent to a {k}-dimensional family lie in Z_1',
            _half(3 * n + 1 - k))
    for i in range(1, max_points + 1):
        thresholds[f'ziEmpty[{i}]'] = Threshold(
            f'ziEmpty[{i}]', f'Z_{i} is empty',
            Fraction(2 * n - 2 + i), strict=True)
        thresholds[f'ziProper[{i}]'] = Threshold(
            f'ziProper[{i}]', f'Z_{i} is a proper subset of X',
            Fraction(n - 1 + i), strict=True)
    return thresholds


def lang_threshold_report(
    n: int,
    d: int,
    max_points: int = 2,
) -> ThresholdReport:
    """Evaluate every degree threshold for X ⊂ P^n of degree d"""
    if d < 1:
        raise ClusteredError('out-of-range', f'need d >= 1, got {d}')
    thresholds = lang_thresholds(n, max_points=max_points)
    verdicts = {}
    chow = {}
    empty = {}
    proper = {}
    for label, t in thresholds.items():
        v = Verdict.of(t, d)
        if label.startswith('chowKFamily['):
            chow[int(label[12:-1])] = v
        elif label.startswith('ziEmpty['):
            empty[int(label[8:-1])] = v
        elif label.startswith('ziProper['):
            proper[int(label[9:-1])] = v
        else:
            verdicts[label] = v
    lgr.debug('evaluated %i thresholds for n=%i, d=%i', len(thresholds), n, d)
    return ThresholdReport(
        n=n,
        d=d,
        verdicts=verdicts,
        chow_k_family=chow,
        zi_empty=empty,
        zi_proper=proper,
        codimension_chain={
            m: codimension_chain(m, n)
            for m in range(n, min(max(n, d), n + CHAIN_LEVELS) + 1)},
    )
