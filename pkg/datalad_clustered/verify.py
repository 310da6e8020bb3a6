"""Run the labeled consistency checks"""

from __future__ import annotations

__docformat__ = 'restructuredtext'

import logging

import datalad_next.commands as dc
from datalad_next.constraints import (
    EnsureChoice,
    EnsureInt,
    EnsureListOf,
    EnsureRange,
)

from datalad_next.uis import ui_switcher as ui

from datalad_clustered.checks import (
    SCOPES,
    check_labels,
    run_suite,
)

lgr = logging.getLogger('datalad.clustered.verify')


class _ParamValidator(dc.EnsureCommandParameterization):
    def __init__(self):
        super().__init__(
            param_constraints=dict(
                scope=EnsureChoice(*SCOPES),
                seed=EnsureInt(),
                check=EnsureListOf(EnsureChoice(*check_labels())),
                jobs=EnsureInt() & EnsureRange(min=1),
            ),
        )


@dc.build_doc
class Verify(dc.ValidatedInterface):
    """Run the labeled consistency checks

    Every check relates computed quantities to a known statement (an
    independent oracle, a product formula, a closed-form bound) on all
    small cases, and on a seeded random corpus. One result is reported
    per check, with status 'error' for a check with failing cases.
    """

    result_renderer = 'tailored'
    _validator_ = _ParamValidator()
    _params_ = dict(
        scope=dc.Parameter(
            args=("--scope",),
            doc="""Size of the checked range. Defaults to the
            datalad.clustered.verify-scope setting""",
            choices=tuple(SCOPES),
        ),
        seed=dc.Parameter(
            args=("--seed",),
            metavar='SEED',
            doc="""Seed of the random corpus. Defaults to the
            datalad.clustered.seed setting"""),
        check=dc.Parameter(
            args=("--check",),
            action='append',
            metavar='LABEL',
            doc="""Only run the check with this label. Can be given
            multiple times"""),
        jobs=dc.Parameter(
            args=("-J", "--jobs"),
            metavar='NJOBS',
            doc="""Number of checks to run in parallel"""),
    )

    @staticmethod
    @dc.eval_results
    def __call__(
        scope: str | None = None,
        seed: int | None = None,
        check: list | None = None,
        jobs: int = 1,
    ):
        if scope is None:
            from datalad import cfg
            scope = cfg.obtain('datalad.clustered.verify-scope')
        summary = run_suite(scope=scope, seed=seed, labels=check, jobs=jobs)
        for label, outcome in summary.outcomes.items():
            res = dict(
                action='clustered_verify',
                status='ok' if outcome.ok else 'error',
                label=label,
                statement=outcome.statement,
                passed=outcome.passed,
                failed=outcome.failed,
                scope=summary.scope,
                seed=summary.seed,
            )
            if not outcome.ok:
                res['error_kind'] = 'check-failed'
                res['message'] = '; '.join(outcome.failures) \
                    or 'no case was checked'
            yield dc.get_status_dict(**res)

    @staticmethod
    def custom_result_renderer(res, **kwargs):
        ui.message('{status}: {label} ({passed} passed, {failed} failed)'
                   .format(**res))
