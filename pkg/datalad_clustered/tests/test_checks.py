import dataclasses
import logging

import pytest

import datalad_clustered.grassmann as gr
import datalad_clustered.osculation as osc
import datalad_clustered.schubert as sch
from datalad_clustered.checks import (
    SCOPES,
    VerifyScope,
    check_labels,
    configured_seed,
    run_check,
    run_suite,
)
from datalad_clustered.exceptions import ClusteredError
from datalad_clustered.p1 import splitting

# small enough for repeated runs
TINY = VerifyScope('tiny', 4, 3, 3, 4, 3)


def test_labels():
    labels = check_labels()
    assert len(labels) == len(set(labels))
    for label in ('lr-oracle', 'fact-nonvanishing', 'fact-column-product',
                  'fact-row-product', 'mu-construction', 'genus-coefficient',
                  'general-type-bounds', 'threshold-values',
                  'splitting-balanced', 'glue-pullbacks'):
        assert label in labels


def test_run_check_tiny():
    for label in check_labels():
        outcome = run_check(label, TINY, 1)
        assert outcome.ok, outcome.failures
        assert outcome.passed > 0


def test_glue_check_counts_variables():
    # glued polynomial lives in n1 + n2 = f1.num_vars + f2.num_vars - 2
    # variables
    outcome = run_check('glue-pullbacks', SCOPES['fast'], 20231101)
    assert outcome.failed == 0, outcome.failures
    assert outcome.passed == SCOPES['fast'].glue_trials


def test_debug_log(caplog):
    caplog.set_level(logging.DEBUG, logger='datalad.clustered')
    # the datalad logger need not propagate to the root logger
    clustered_lgr = logging.getLogger('datalad.clustered')
    clustered_lgr.addHandler(caplog.handler)
    try:
        run_check('lr-oracle', TINY, 5)
        run_check('glue-pullbacks', TINY, 5)
    finally:
        clustered_lgr.removeHandler(caplog.handler)
    messages = [r.getMessage() for r in caplog.records]
    assert "check lr-oracle draws from seed '5:lr-oracle'" in messages
    assert "check glue-pullbacks draws from seed '5:glue-pullbacks'" \
        in messages
    assert any(m.startswith('Littlewood-Richardson memo: CacheInfo(')
               for m in messages)
    assert any(m.startswith('gluing degree') for m in messages)


def test_fast_suite():
    summary = run_suite('fast', seed=20231101, jobs=4)
    assert summary.ok, {
        label: summary.outcomes[label].failures
        for label in summary.failed_labels
    }
    assert list(summary.outcomes) == check_labels()


def test_seeded():
    # random corpora depend on the seed and the label only
    a = run_check('glue-pullbacks', TINY, 7)
    b = run_suite(TINY, seed=7, labels=['splitting-degree', 'glue-pullbacks'])
    assert b.outcomes['glue-pullbacks'] == a
    assert run_suite(TINY, labels=['osculation-fixtures']).seed \
        == configured_seed()


def test_errors():
    with pytest.raises(ClusteredError):
        run_check('no-such-check', TINY, 1)
    with pytest.raises(ClusteredError):
        run_suite('huge')
    assert set(SCOPES) == {'fast', 'full'}


def _dual_without_reversal(ctx, lam):
    lam = ctx.check(lam)
    return gr.Partition(tuple(ctx.max_part - p for p in lam.parts))


def _nonzero_strict(ctx, lam, mu):
    lam, mu = ctx.check(lam), ctx.check(mu)
    return all(m < ctx.max_part - l for m, l in zip(mu, reversed(lam.parts)))


def _balanced_equal(st):
    return st.twists[0] - st.twists[-1] <= 0


def test_canary_shift(monkeypatch):
    orig = gr.shift_partition

    def without_last_part(ctx, lam, mode):
        if mode != 'h':
            return orig(ctx, lam, mode)
        lam = ctx.check(lam)
        return gr.Partition(tuple(p + 1 for p in lam[:-1]) + (lam[-1],))

    monkeypatch.setattr(gr, 'shift_partition', without_last_part)
    assert not run_check('fact-column-product', TINY, 1).ok
    assert not run_check('shift-sizes', TINY, 1).ok


def test_canary_dual(monkeypatch):
    monkeypatch.setattr(gr, 'dual_partition', _dual_without_reversal)
    assert not run_check('poincare-duality', TINY, 1).ok


def test_canary_nonvanishing(monkeypatch):
    monkeypatch.setattr(sch, 'product_nonzero', _nonzero_strict)
    assert not run_check('fact-nonvanishing', TINY, 1).ok


def test_canary_lr(monkeypatch):
    orig = sch.lr_coefficient
    # multiplicities above one are lost
    monkeypatch.setattr(
        sch, 'lr_coefficient', lambda lam, mu, nu: min(orig(lam, mu, nu), 1))
    assert not run_check('lr-oracle', SCOPES['fast'], 1).ok


def test_canary_multidegree(monkeypatch):
    orig = osc.canonical_multidegree

    def flipped(n, d, r, s=None):
        rep = orig(n, d, r, s)
        if s is not None:
            return rep
        return dataclasses.replace(
            rep, multidegree=(rep.multidegree[0], r * d + r * (r - 1) - 2))

    monkeypatch.setattr(osc, 'canonical_multidegree', flipped)
    assert not run_check('genus-coefficient', TINY, 1).ok
    assert not run_check('multidegree-formula', TINY, 1).ok


def test_canary_threshold(monkeypatch):
    statement, _ = osc._THRESHOLDS['linesOnly']
    monkeypatch.setitem(
        osc._THRESHOLDS, 'linesOnly', (statement, lambda n: osc._half(3 * n + 1)))
    assert not run_check('threshold-values', TINY, 1).ok


def test_canary_balanced(monkeypatch):
    monkeypatch.setattr(splitting, 'is_balanced', _balanced_equal)
    assert not run_check('splitting-balanced', TINY, 1).ok
