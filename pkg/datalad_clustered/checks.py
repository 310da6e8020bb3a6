"""Labeled consistency checks across all computations

Every check is a generator of ``(case, predicate)`` pairs. The runner
evaluates each predicate right away; a predicate that returns a falsy value
or raises counts as a failure of that case. Random cases are drawn from a
generator seeded with ``<seed>:<label>``, so results do not depend on which
other checks run, nor in which order.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import (
    dataclass,
    field,
)
from math import comb
from random import Random
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Tuple,
)

from . import (
    clustered as cl,
    grassmann as gr,
    osculation as osc,
    schubert as sch,
)
from .exceptions import ClusteredError
from .p1 import (
    forms,
    glue,
    splitting,
)

__all__ = [
    'VerifyScope',
    'CheckOutcome',
    'VerifySummary',
    'SCOPES',
    'check_labels',
    'configured_seed',
    'run_check',
    'run_suite',
]

lgr = logging.getLogger('datalad.clustered.checks')


@dataclass(frozen=True)
class VerifyScope:
    name: str
    max_ambient: int
    splitting_trials: int
    glue_trials: int
    max_splitting_n: int
    # random triples per context for ring axioms
    ring_trials: int

    def contexts(self) -> Iterator[gr.GrassContext]:
        for n in range(1, self.max_ambient + 1):
            for k in range(n):
                yield gr.make_context(k, n)


SCOPES = {
    'fast': VerifyScope('fast', 5, 20, 20, 5, 20),
    'full': VerifyScope('full', 6, 100, 50, 8, 50),
}


@dataclass
class CheckOutcome:
    label: str
    statement: str
    passed: int = 0
    failed: int = 0
    # first few failing cases with reasons
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failed and self.passed > 0


@dataclass
class VerifySummary:
    scope: str
    seed: int
    outcomes: Dict[str, CheckOutcome]

    @property
    def ok(self) -> bool:
        return all(o.ok for o in self.outcomes.values())

    @property
    def failed_labels(self) -> List[str]:
        return [label for label, o in self.outcomes.items() if not o.ok]


Case = Tuple[str, Callable[[], object]]
Check = Callable[[VerifyScope, Random], Iterable[Case]]

_CHECKS: Dict[str, Tuple[str, Check]] = {}

MAX_REPORTED_FAILURES = 5


def labeled_check(label: str, statement: str):
    def register(fn: Check) -> Check:
        _CHECKS[label] = (statement, fn)
        return fn
    return register


def check_labels() -> List[str]:
    return list(_CHECKS)


def configured_seed() -> int:
    """Seed of the random corpus, ``datalad.clustered.seed``"""
    from datalad import cfg
    return int(cfg.obtain('datalad.clustered.seed'))


def run_check(label: str, scope: VerifyScope, seed: int) -> CheckOutcome:
    try:
        statement, check = _CHECKS[label]
    except KeyError as e:
        raise ClusteredError(
            'out-of-range', f'unknown check {label!r}') from e
    outcome = CheckOutcome(label, statement)
    lgr.debug('check %s draws from seed %r', label, f'{seed}:{label}')
    rng = Random(f'{seed}:{label}')
    for case, predicate in check(scope, rng):
        try:
            ok = bool(predicate())
            reason = 'predicate is false'
        except Exception as e:
            ok = False
            reason = f'{e.__class__.__name__}: {e}'
        if ok:
            outcome.passed += 1
            continue
        outcome.failed += 1
        if len(outcome.failures) < MAX_REPORTED_FAILURES:
            outcome.failures.append(f'{case}: {reason}')
    if not outcome.ok:
        lgr.warning(
            'check %s failed %i of %i cases: %s',
            label, outcome.failed, outcome.passed + outcome.failed,
            '; '.join(outcome.failures))
    else:
        lgr.debug('check %s passed %i cases', label, outcome.passed)
    return outcome


def run_suite(
    scope: str | VerifyScope = 'fast',
    seed: Optional[int] = None,
    labels: Optional[Iterable[str]] = None,
    jobs: int = 1,
) -> VerifySummary:
    """Run the labeled checks, all of them unless ``labels`` are given"""
    if isinstance(scope, str):
        try:
            scope = SCOPES[scope]
        except KeyError as e:
            raise ClusteredError(
                'out-of-range',
                f'unknown scope {scope!r}, expected one of {list(SCOPES)}',
            ) from e
    if seed is None:
        seed = configured_seed()
    labels = list(labels) if labels is not None else check_labels()
    lgr.info('running %i checks in scope %s with seed %i',
             len(labels), scope.name, seed)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(
                lambda label: run_check(label, scope, seed), labels))
    else:
        results = [run_check(label, scope, seed) for label in labels]
    summary = VerifySummary(
        scope=scope.name,
        seed=seed,
        outcomes={o.label: o for o in results},
    )
    lgr.info('finished scope %s: %i of %i checks passed',
             scope.name, len(labels) - len(summary.failed_labels), len(labels))
    return summary


#
# partitions
#

@labeled_check('partition-enumeration',
               'admissible partitions are counted by binomial(n+1, k+1)')
def _partition_enumeration(scope, rng):
    for ctx in scope.contexts():
        parts = gr.enumerate_partitions(ctx)
        yield f'{ctx} count', lambda: len(parts) == comb(
            ctx.ambient_dim + 1, ctx.num_parts)
        yield f'{ctx} distinct', lambda: len(set(parts)) == len(parts)
        yield f'{ctx} admissible', lambda: all(
            ctx.admits(p) for p in parts)


@labeled_check('dual-involution',
               'the dual partition is an involution complementing the size')
def _dual_involution(scope, rng):
    for ctx in scope.contexts():
        for lam in gr.enumerate_partitions(ctx):
            yield f'{ctx} {lam}', lambda: (
                gr.dual_partition(ctx, gr.dual_partition(ctx, lam)) == lam
                and lam.size + gr.dual_partition(ctx, lam).size
                == ctx.dimension)


@labeled_check('shift-sizes',
               'λ^h adds k+1 boxes, λ^p adds n-k boxes')
def _shift_sizes(scope, rng):
    for ctx in scope.contexts():
        for lam in gr.enumerate_partitions(ctx):
            if lam[0] != ctx.max_part:
                yield f'{ctx} {lam} h', lambda: (
                    gr.shift_partition(ctx, lam, 'h').size
                    == lam.size + ctx.num_parts)
            if lam[-1] == 0:
                yield f'{ctx} {lam} p', lambda: (
                    gr.shift_partition(ctx, lam, 'p').size
                    == lam.size + ctx.max_part)


#
# Schubert calculus
#

def _sigma(ctx, lam) -> sch.SchubertClass:
    return sch.SchubertClass(ctx, {lam: 1})


ORACLE_CONTEXTS = ((1, 3), (1, 4), (2, 4), (2, 5))


@labeled_check('lr-oracle',
               'tableau products agree with Schur polynomial products')
def _lr_oracle(scope, rng):
    for k, n in ORACLE_CONTEXTS:
        if n > scope.max_ambient:
            continue
        ctx = gr.make_context(k, n)
        parts = gr.enumerate_partitions(ctx)
        for i, lam in enumerate(parts):
            for mu in parts[i:]:
                yield f'{ctx} {lam}*{mu}', lambda: (
                    sch.multiply_classes(_sigma(ctx, lam), _sigma(ctx, mu))
                    == sch.schur_product_oracle(ctx, lam, mu))


@labeled_check('fact-nonvanishing',
               'σ_λ σ_μ != 0 iff μ_i <= n-k-λ_(k+2-i) for all i')
def _fact_nonvanishing(scope, rng):
    for ctx in scope.contexts():
        parts = gr.enumerate_partitions(ctx)
        for lam in parts:
            for mu in parts:
                yield f'{ctx} {lam}*{mu}', lambda: (
                    sch.product_nonzero(ctx, lam, mu)
                    == bool(sch.multiply_classes(
                        _sigma(ctx, lam), _sigma(ctx, mu))))


@labeled_check('fact-column-product',
               'σ_λ σ_(1,...,1) = σ_(λ^h) when λ_1 != n-k')
def _fact_column_product(scope, rng):
    for ctx in scope.contexts():
        column = _sigma(ctx, ctx.column())
        for lam in gr.enumerate_partitions(ctx):
            if lam[0] == ctx.max_part:
                yield f'{ctx} {lam} vanishes', lambda: not sch.multiply_classes(
                    _sigma(ctx, lam), column)
                continue
            yield f'{ctx} {lam}', lambda: (
                sch.multiply_classes(_sigma(ctx, lam), column)
                == _sigma(ctx, gr.shift_partition(ctx, lam, 'h')))


@labeled_check('fact-row-product',
               'σ_λ σ_(n-k,0,...,0) = σ_(λ^p) when λ_(k+1) = 0')
def _fact_row_product(scope, rng):
    for ctx in scope.contexts():
        row = _sigma(ctx, ctx.row(ctx.max_part))
        for lam in gr.enumerate_partitions(ctx):
            if lam[-1] != 0:
                continue
            yield f'{ctx} {lam}', lambda: (
                sch.multiply_classes(_sigma(ctx, lam), row)
                == _sigma(ctx, gr.shift_partition(ctx, lam, 'p')))


@labeled_check('poincare-duality',
               'complementary classes pair to 1 exactly when dual')
def _poincare_duality(scope, rng):
    for ctx in scope.contexts():
        parts = gr.enumerate_partitions(ctx)
        for lam in parts:
            for mu in gr.partitions_of_size(ctx, ctx.dimension - lam.size):
                yield f'{ctx} {lam},{mu}', lambda: sch.pairing(
                    _sigma(ctx, lam), _sigma(ctx, mu)) == int(
                    mu == gr.dual_partition(ctx, lam))


@labeled_check('rigid-rectangles',
               'multi-rigid rectangle classes are (n-k)^j 0^(k+1-j)')
def _rigid_rectangles(scope, rng):
    for ctx in scope.contexts():
        rects = {ctx.rectangle(j) for j in range(ctx.num_parts + 1)}
        for lam in gr.enumerate_partitions(ctx):
            yield f'{ctx} {lam}', lambda: (
                sch.is_rectangle_rigid(ctx, lam) == (lam in rects))


def _random_class(ctx, rng) -> sch.SchubertClass:
    parts = gr.enumerate_partitions(ctx)
    return sch.SchubertClass(ctx, {
        rng.choice(parts): rng.randint(1, 3) for _ in range(rng.randint(1, 2))
    })


@labeled_check('ring-commutative', 'the Schubert product is commutative')
def _ring_commutative(scope, rng):
    for ctx in scope.contexts():
        for _ in range(scope.ring_trials):
            a, b = _random_class(ctx, rng), _random_class(ctx, rng)
            yield f'{ctx} ({a})({b})', lambda: (
                sch.multiply_classes(a, b) == sch.multiply_classes(b, a))


@labeled_check('ring-associative', 'the Schubert product is associative')
def _ring_associative(scope, rng):
    for ctx in scope.contexts():
        for _ in range(scope.ring_trials):
            a, b, c = (_random_class(ctx, rng) for _ in range(3))
            yield f'{ctx} ({a})({b})({c})', lambda: (
                sch.multiply_classes(sch.multiply_classes(a, b), c)
                == sch.multiply_classes(a, sch.multiply_classes(b, c)))


#
# clustered families
#

def _cluster_contexts(scope) -> Iterator[gr.GrassContext]:
    """Contexts G(k-1, n) that have a containing Grassmannian G(k, n)"""
    for ctx in scope.contexts():
        if ctx.num_parts < ctx.ambient_dim:
            yield ctx


@labeled_check('mu-construction',
               'μ is admissible, |λ| = ℓ(n-k+1) - Σ λ*_j and |λ| <= ℓ(n-k+1)')
def _mu_construction(scope, rng):
    for ctx in _cluster_contexts(scope):
        for lam in gr.enumerate_partitions(ctx):
            if not lam.length:
                continue
            yield f'{ctx} {lam}', lambda: _mu_holds(ctx, lam)


def _mu_holds(ctx, lam) -> bool:
    m = cl.mu_construction(ctx, lam)
    return (
        m.target.admits(m.mu.parts)
        and m.codim_identity_holds
        and lam.size <= m.ell * ctx.max_part
        and m.kleiman_bound >= 0
    )


@labeled_check('single-row-kleiman',
               'for single-row classes the μ bound equals ε - 1')
def _single_row_kleiman(scope, rng):
    for ctx in _cluster_contexts(scope):
        for eps in range(1, ctx.max_part + 1):
            lam = ctx.row(eps)
            yield f'{ctx} {lam}', lambda: (
                cl.mu_construction(ctx, lam).kleiman_bound == eps - 1)


@labeled_check('extremal-rectangles',
               'the extremal case ε = ℓ(n-k+1) is exactly the rectangle class')
def _extremal_rectangles(scope, rng):
    for ctx in scope.contexts():
        for lam in gr.enumerate_partitions(ctx):
            if not lam.length:
                continue
            for ell in range(1, ctx.num_parts + 1):
                yield f'{ctx} {lam} ℓ={ell}', lambda: (
                    (cl.extremal_classify(_sigma(ctx, lam), ell) is not None)
                    == (lam == ctx.rectangle(ell)))


@labeled_check('meets-z-clustered',
               'planes meeting Z form a 1-clustered family')
def _meets_z_clustered(scope, rng):
    n_max = scope.max_ambient
    for n in range(2, n_max + 1):
        for k in range(1, n):
            for m in range(0, n - k + 1):
                for e in (1, 2):
                    yield f'n={n} k={k} m={m} e={e}', \
                        lambda: _meets_z_holds(n, k, m, e)


def _meets_z_holds(n, k, m, e) -> bool:
    model = cl.meets_z_model(n, k, m, e)
    report = cl.check_necessary(model.class_b, 1)
    drop = cl.clusteredness(
        model.class_b.codimension, model.class_c.codimension)
    return (
        cl.cluster_floor(model.class_b) == 1
        and report.satisfies_necessary
        and drop == 1
    )


@labeled_check('fixed-subspace-clustered',
               'planes containing a fixed P^(j-1) form a j-clustered family')
def _fixed_subspace_clustered(scope, rng):
    for n in range(3, scope.max_ambient + 1):
        for k in range(2, n):
            for j in range(1, k):
                yield f'n={n} k={k} j={j}', lambda: _fixed_holds(n, k, j)


def _fixed_holds(n, k, j) -> bool:
    model = cl.fixed_subspace_model(n, k, j)
    eps_b = model.class_b.codimension
    eps_c = model.class_c.codimension
    ext = cl.extremal_classify(model.class_b, j)
    return (
        cl.clusteredness(eps_b, eps_c) == j
        and eps_b == j * (n - k + 1)
        and ext is not None and ext.fixed_dim == j - 1
    )


@labeled_check('hyperplane-slice',
               'no member lies in a general hyperplane iff λ_1 = n-k throughout')
def _hyperplane_slice(scope, rng):
    for ctx in scope.contexts():
        for lam in gr.enumerate_partitions(ctx):
            cls = _sigma(ctx, lam)
            yield f'{ctx} {lam}', lambda: (
                cl.hyperplane_slice_empty(cls)
                == (not cl.hyperplane_slice(cls)))


@labeled_check('clustered-fixtures',
               'worked examples of clustered families are reproduced')
def _clustered_fixtures(scope, rng):
    g24 = gr.make_context(2, 4)
    nasty = sch.SchubertClass.sigma(g24, (2, 1, 0))
    yield 'σ(2,1,0) in G(2,4)', lambda: (
        cl.check_necessary(nasty, 2).epsilon == 3
        and cl.cluster_floor(nasty) == 2
        and cl.mu_construction(g24, nasty.support[0]).kleiman_bound == 1)
    yield 'σ(2,1,0) not 1-clustered', lambda: (
        not cl.check_necessary(nasty, 1).satisfies_necessary)
    yield 'planes through a point in P^4', lambda: (
        cl.extremal_classify(cl.meets_z_model(4, 3, 0, 1).class_b, 1)
        == cl.ExtremalFamily(fixed_dim=0, multiplicity=1))
    yield 'σ(2,2,0) in G(2,4)', lambda: (
        cl.extremal_classify(sch.SchubertClass.sigma(g24, (2, 2)), 2)
        == cl.ExtremalFamily(fixed_dim=1, multiplicity=1))


#
# osculation and thresholds
#

def _osc_range(scope):
    for n in range(2, 4 * scope.max_ambient + 1):
        for d in range(1, 31):
            yield n, d


@labeled_check('genus-coefficient',
               'the Δ_d point twist is the genus coefficient d - 2')
def _genus_coefficient(scope, rng):
    for n, d in _osc_range(scope):
        yield f'n={n} d={d}', lambda: (
            osc.canonical_multidegree(n, d, d).multidegree[1] == d - 2
            == osc.canonical_multidegree(n, d, d).genus_coefficient)


@labeled_check('multidegree-formula',
               'canonical twists of Δ_r and Δ_(r,s) match the closed formulas')
def _multidegree_formula(scope, rng):
    for n, d in _osc_range(scope):
        for r in range(1, d + 1):
            yield f'n={n} d={d} r={r}', lambda: (
                osc.canonical_multidegree(n, d, r).multidegree
                == (r * (r - 1) // 2 - n, r * d - r * (r - 1) - 2))
        for r in range(1, d):
            s = d - r
            yield f'n={n} d={d} r={r} s={s}', lambda: (
                osc.canonical_multidegree(n, d, r, s).multidegree
                == (r * (r - 1) // 2 + s * (s - 1) // 2 - n,
                    r * (d - r + 1) - 2, s * (d - s + 1) - 2))


@labeled_check('multidegree-monotone',
               'canonical twists do not decrease with the degree')
def _multidegree_monotone(scope, rng):
    for n, d in _osc_range(scope):
        if d == 30:
            continue
        for r in range(1, d + 1):
            yield f'n={n} d={d} r={r}', lambda: all(
                a <= b for a, b in zip(
                    osc.canonical_multidegree(n, d, r).multidegree,
                    osc.canonical_multidegree(n, d + 1, r).multidegree))
            for s in range(1, d - r + 1):
                yield f'n={n} d={d} r={r} s={s}', lambda: all(
                    a <= b for a, b in zip(
                        osc.canonical_multidegree(n, d, r, s).multidegree,
                        osc.canonical_multidegree(n, d + 1, r, s).multidegree))


@labeled_check('dimension-balance',
               'osculation varieties fiber over the space of forms')
def _dimension_balance(scope, rng):
    for n, d in _osc_range(scope):
        for r in range(1, d + 1):
            yield f'n={n} d={d} r={r}', lambda: (
                osc.canonical_multidegree(n, d, r).forms_dim
                == comb(n + d, d))
        for i in range(1, d + 1):
            yield f'n={n} d={d} i={i}', lambda: (
                osc.incidence_dimension(n, d, i).dim
                == 2 * n - 3 + i + comb(n + d, d) - d)


@labeled_check('general-type-bounds',
               'd >= sqrt(2n)+1 and d >= 2 sqrt(n)+1 suffice for general type')
def _general_type_bounds(scope, rng):
    for n in range(2, 51):
        yield f'n={n}', lambda: _general_type_holds(n)


def _general_type_holds(n) -> bool:
    t = osc.general_type_thresholds(n)
    return (
        t.delta_d <= t.bound_d
        and t.delta_rs_weak <= t.bound_rs
        and t.delta_rs <= t.bound_rs + 1
        and (t.bound_d - 1) ** 2 >= 2 * n
        and (t.bound_rs - 1) ** 2 >= 4 * n
    )


def _ceil_half(x: int) -> int:
    return -(-x // 2)


@labeled_check('threshold-values',
               'minimal degrees of the hyperbolicity statements')
def _threshold_values(scope, rng):
    for n in range(3, 21):
        yield f'n={n}', lambda: _threshold_values_hold(n)


def _threshold_values_hold(n) -> bool:
    report = osc.lang_threshold_report(n, 1)
    expected = {
        'linesOnly': _ceil_half(3 * n),
        'algHypOutsideZL': _ceil_half(3 * n + 2),
        'chowZ2': _ceil_half(3 * n + 3),
        'z1AlgHyp': _ceil_half(3 * n - 1),
        'z2AlgHyp': _ceil_half(3 * n + 1),
        'alphaInjective': _ceil_half(3 * n - 1),
        'betaInjective': _ceil_half(3 * n + 1),
    }
    return all(
        report[label].min_degree == value
        for label, value in expected.items()
    ) and all(
        report.chow_k_family[k].min_degree == _ceil_half(3 * n + 1 - k)
        for k in range(1, n)
    ) and all(
        report.zi_empty[i].min_degree == 2 * n - 1 + i
        and report.zi_proper[i].min_degree == n + i
        for i in (1, 2)
    )


@labeled_check('threshold-order',
               'lines-only <= hyperbolic outside Z_L <= Chow statement for Z_2')
def _threshold_order(scope, rng):
    for n in range(3, 51):
        yield f'n={n}', lambda: (
            osc.lang_threshold_report(n, 1)['linesOnly'].min_degree
            <= osc.lang_threshold_report(n, 1)['algHypOutsideZL'].min_degree
            <= osc.lang_threshold_report(n, 1)['chowZ2'].min_degree)


@labeled_check('threshold-monotone',
               'every threshold statement holds from its minimal degree on')
def _threshold_monotone(scope, rng):
    for n in range(3, 4 * scope.max_ambient + 1):
        thresholds = osc.lang_thresholds(n)
        for label, t in thresholds.items():
            yield f'n={n} {label}', lambda: all(
                t.holds_at(d) == (d >= t.min_degree)
                for d in range(1, 4 * n))


@labeled_check('injectivity-consistency',
               'codimension bounds of α and β_k match their thresholds')
def _injectivity_consistency(scope, rng):
    for n in range(3, 4 * scope.max_ambient + 1):
        for d in range(1, 4 * n):
            yield f'n={n} d={d}', lambda: (
                (osc.injectivity_codimension(n, d)['alpha'] >= n)
                == osc.lang_threshold_report(n, d)['alphaInjective'].holds
                and (osc.injectivity_codimension(n, d)['beta'] >= n)
                == osc.lang_threshold_report(n, d)['betaInjective'].holds)


@labeled_check('incidence-emptiness',
               'Z_i is empty for d > 2n-2+i and proper for d > n-1+i')
def _incidence_emptiness(scope, rng):
    for n in range(3, 4 * scope.max_ambient + 1):
        for d in range(2, 4 * n):
            report = osc.lang_threshold_report(n, d)
            for i in (1, 2):
                yield f'n={n} d={d} i={i}', lambda: (
                    osc.incidence_dimension(n, d, i).zi_empty_when
                    == report.zi_empty[i].holds
                    and osc.incidence_dimension(n, d, i).zi_proper_when
                    == report.zi_proper[i].holds)


@labeled_check('osculation-fixtures',
               'worked osculation examples are reproduced')
def _osculation_fixtures(scope, rng):
    yield 'Δ_6 for n=5, d=6', lambda: (
        osc.canonical_multidegree(5, 6, 6).multidegree == (10, 4))
    yield 'Δ_(3,3) for n=4, d=6', lambda: (
        osc.canonical_multidegree(4, 6, 3, 3).multidegree == (2, 10, 10)
        and osc.canonical_multidegree(4, 6, 3, 3).general_type)
    yield 'Δ_(1,1) for n=4, d=2', lambda: (
        osc.canonical_multidegree(4, 2, 1, 1).multidegree == (-4, 0, 0))
    yield 'thresholds for n=10, d=16', lambda: (
        osc.lang_threshold_report(10, 16)['algHypOutsideZL'].holds
        and not osc.lang_threshold_report(10, 16)['chowZ2'].holds
        and osc.lang_threshold_report(10, 16)['linesOnly'].holds)
    yield 'incidence dimension for n=3, d=5, i=1', lambda: (
        osc.incidence_dimension(3, 5, 1).dim == 55)
    yield 'general type for n=2', lambda: (
        osc.general_type_thresholds(2).delta_d == 3)


#
# P^1
#

def _splitting_configs(scope) -> Iterator[Tuple[int, int]]:
    for n in range(3, scope.max_splitting_n + 1):
        for d in (n - 1, n - 2):
            # a binary form of degree < 2 has a single root
            if d >= 2:
                yield n, d


@labeled_check('splitting-balanced',
               'kernels of general (∂p/∂s, ∂p/∂t, f_2, ..., f_n) are balanced')
def _splitting_balanced(scope, rng):
    for n, d in _splitting_configs(scope):
        for trial in range(scope.splitting_trials):
            m = splitting.random_osculating_map(rng, n, d)
            yield f'n={n} d={d} trial={trial}', lambda: _balanced_holds(m, n, d)


def _balanced_holds(m, n, d) -> bool:
    st = splitting.kernel_splitting_type(m)
    return (
        splitting.is_balanced(st)
        and st.rank == n
        and st.degree == n + 1 - d
    )


@labeled_check('splitting-degree',
               'kernel rank is N-1 and twists sum to N-d plus the base locus')
def _splitting_degree(scope, rng):
    for n in range(1, scope.max_splitting_n + 1):
        for d in range(2, scope.max_splitting_n + 1):
            entries = tuple(
                splitting.random_form(rng, d - 1) for _ in range(n + 1))
            if not any(entries):
                continue
            m = splitting.GradedMap(entries)
            yield f'N={n + 1} d={d}', lambda: _degree_holds(m)


def _degree_holds(m) -> bool:
    st = splitting.kernel_splitting_type(m)
    return (
        st.rank == m.source_rank - 1
        and st.degree
        == m.source_rank - m.target_degree + m.base_locus_degree()
        and all(a <= 1 for a in st)
    )


@labeled_check('splitting-profile',
               'section dimensions of the splitting type match kernel ranks')
def _splitting_profile(scope, rng):
    for n, d in _splitting_configs(scope):
        m = splitting.random_osculating_map(rng, n, d)
        st = splitting.kernel_splitting_type(m)
        for t in range(-2, d + 3):
            yield f'n={n} d={d} t={t}', lambda: (
                st.section_dimension(t)
                == splitting.kernel_section_dimension(m, t))


@labeled_check('glue-pullbacks',
               'the glued hypersurface restricts to both pieces and the line')
def _glue_pullbacks(scope, rng):
    for trial in range(scope.glue_trials):
        n1, n2 = rng.randint(1, 3), rng.randint(1, 3)
        degree = rng.randint(1, 4)
        f1, f2 = glue.random_glue_pair(rng, n1, n2, degree)
        yield f'trial={trial} n1={n1} n2={n2} d={degree}', \
            lambda: _glue_holds(f1, f2)


def _glue_holds(f1, f2) -> bool:
    res = glue.glue_along_line(f1, f2)
    return (
        res.f.num_vars == f1.num_vars + f2.num_vars - 2
        and res.f.pullback(res.lambda1_map, f1.num_vars) == f1
        and res.f.pullback(res.lambda2_map, f2.num_vars)
        == f2.scale(1 / res.scale)
        and res.f.pullback(res.line_map, 2) == res.line_form
    )


def _rejects(kind: str, fn: Callable[[], object]) -> Callable[[], bool]:
    def predicate():
        try:
            fn()
        except ClusteredError as e:
            return e.kind == kind
        return False
    return predicate


@labeled_check('p1-preconditions',
               'single-root forms and non-proportional restrictions are rejected')
def _p1_preconditions(scope, rng):
    for d in range(2, scope.max_splitting_n + 1):
        p = forms.BinaryForm.from_expr(forms.S ** d)
        fs = [splitting.random_form(rng, d - 1)]
        yield f's^{d}', _rejects(
            'single-root', lambda: splitting.build_osculating_map(p, fs))
    x_cube = forms.MultiPolynomial.from_expr('x0**3 + x0*x2**2', 3)
    y_cube = forms.MultiPolynomial.from_expr('x1**3 + x1*x2**2', 3)
    yield 'x0^3 against x1^3', _rejects(
        'not-proportional', lambda: glue.glue_along_line(x_cube, y_cube))
