"""Report degree thresholds for hyperbolicity statements"""

from __future__ import annotations

__docformat__ = 'restructuredtext'

import json
import logging
from pathlib import Path

import datalad_next.commands as dc
from datalad_next.constraints import (
    EnsureInt,
    EnsurePath,
    EnsureRange,
)
from datalad_next.constraints.exceptions import ParameterConstraintContext
from datalad_next.exceptions import CapturedException

from datalad_next.uis import ui_switcher as ui

from datalad_clustered.exceptions import ClusteredError
from datalad_clustered.io import (
    report_tables,
    tables2tsv,
    tables2xlsx,
    to_json,
)
from datalad_clustered.osculation import (
    canonical_multidegree,
    injectivity_codimension,
    lang_threshold_report,
)

lgr = logging.getLogger('datalad.clustered.report')


class _ParamValidator(dc.EnsureCommandParameterization):
    def __init__(self):
        super().__init__(
            param_constraints=dict(
                n=EnsureInt() & EnsureRange(min=3),
                d=EnsureInt() & EnsureRange(min=1),
                r=EnsureInt() & EnsureRange(min=1),
                s=EnsureInt() & EnsureRange(min=1),
                xlsx=EnsurePath(),
                tsv=EnsurePath(lexists=True),
            ),
            joint_constraints={
                ParameterConstraintContext(
                    ('d', 'r', 's'), 'contact orders'):
                        self._check_contact_orders,
            },
        )

    def _check_contact_orders(self, d, r, s):
        if s is not None and r is None:
            self.raise_for(
                dict(d=d, r=r, s=s),
                "a second contact order requires the first one (r)",
            )
        if r is not None and r + (s or 0) > d:
            self.raise_for(
                dict(d=d, r=r, s=s),
                "contact orders must not exceed the degree",
            )


@dc.build_doc
class Report(dc.ValidatedInterface):
    """Report degree thresholds for hyperbolicity statements

    For hypersurfaces of degree D in P^N every known threshold statement is
    evaluated: its bound, the least degree satisfying it, and whether D
    does. With contact orders R (and S), the canonical twists of the
    corresponding osculation variety are reported as well.
    """

    result_renderer = 'tailored'
    _validator_ = _ParamValidator()
    _params_ = dict(
        n=dc.Parameter(
            args=("--n",),
            metavar='N',
            doc="""Dimension of the ambient projective space (at least 3)"""),
        d=dc.Parameter(
            args=("--d",),
            metavar='D',
            doc="""Degree of the hypersurface"""),
        r=dc.Parameter(
            args=("--r",),
            metavar='R',
            doc="""Contact order of an osculating line"""),
        s=dc.Parameter(
            args=("--s",),
            metavar='S',
            doc="""Contact order at a second point of a doubly osculating
            line (requires R)"""),
        xlsx=dc.Parameter(
            args=("--xlsx",),
            metavar='PATH',
            doc="""Also write the report tables to an XLSX workbook at this
            path"""),
        tsv=dc.Parameter(
            args=("--tsv",),
            metavar='DIR',
            doc="""Also write one TSV file per report table into this existing
            directory"""),
    )

    @staticmethod
    @dc.eval_results
    def __call__(
        n: int,
        d: int,
        r: int | None = None,
        s: int | None = None,
        xlsx: Path | None = None,
        tsv: Path | None = None,
    ):
        try:
            report = lang_threshold_report(n, d)
            osculation = canonical_multidegree(n, d, r, s) \
                if r is not None else None
        except ClusteredError as e:
            yield dc.get_status_dict(
                action='clustered_report',
                status='error',
                error_kind=e.kind,
                message=str(e),
                exception=CapturedException(e),
            )
            return
        rec = to_json(report)
        rec['injectivityCodimension'] = injectivity_codimension(n, d)
        if osculation is not None:
            rec['osculation'] = to_json(osculation)

        res = dict(
            action='clustered_report',
            status='ok',
            report=rec,
            tables=report_tables(report, osculation),
        )
        if xlsx is not None:
            lgr.debug('writing report tables to %s', xlsx)
            res['path'] = tables2xlsx(res['tables'], xlsx)
        if tsv is not None:
            lgr.debug('writing report tables as TSV into %s', tsv)
            res['tsv'] = tables2tsv(res['tables'], tsv, 'clustered')
        yield dc.get_status_dict(**res)

    @staticmethod
    def custom_result_renderer(res, **kwargs):
        """Output the report as a single JSON line"""
        if res['status'] != 'ok':
            ui.message('{}: {}: {}'.format(
                res['status'],
                res.get('error_kind'),
                res.get('message') or res.get('error_message'),
            ))
            return
        ui.message(json.dumps(
            res['report'],
            separators=(',', ':'),
            indent=None,
        ))
        if res.get('path') is not None:
            ui.message(f"tables written to {res['path']}")
        for p in res.get('tsv') or ():
            ui.message(f"table written to {p}")


