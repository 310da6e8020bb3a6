from fractions import Fraction

import pytest

from datalad.api import clustered_verify

from datalad_next.constraints.exceptions import CommandParametrizationError

from datalad_clustered import checks


def test_arguments():
    with pytest.raises(CommandParametrizationError):
        clustered_verify(scope='huge')

    with pytest.raises(CommandParametrizationError):
        clustered_verify(check=['no-such-check'])

    with pytest.raises(CommandParametrizationError):
        clustered_verify(jobs=0)


def test_verify(datalad_noninteractive_ui):
    labels = ['clustered-fixtures', 'osculation-fixtures']
    res = clustered_verify(check=labels, seed=3)
    assert [r['label'] for r in res] == labels
    for r in res:
        assert r['status'] == 'ok'
        assert r['action'] == 'clustered_verify'
        assert r['failed'] == 0
        assert r['passed'] > 0
        assert r['scope'] == 'fast'
        assert r['seed'] == 3
    uil = datalad_noninteractive_ui.log
    assert [m for _, m in uil] == [
        f"ok: {r['label']} ({r['passed']} passed, 0 failed)" for r in res]


def test_verify_failure(monkeypatch):
    # a threshold with a wrong bound must be caught
    monkeypatch.setitem(
        checks.osc._THRESHOLDS, 'linesOnly',
        ('contains lines but no other rational curves',
         lambda n: Fraction(n)))
    res = clustered_verify(
        check=['threshold-values'],
        on_failure='ignore',
        result_renderer='disabled',
    )
    assert len(res) == 1
    assert res[0]['status'] == 'error'
    assert res[0]['error_kind'] == 'check-failed'
    assert res[0]['failed'] > 0
    assert res[0]['message'].startswith('n=3: ')
