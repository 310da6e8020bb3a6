"""Tabular views of threshold and osculation reports

Tables are lists of rows with a header row first, as consumed by
:func:`~datalad_clustered.io.xlsx.tables2xlsx` and :func:`format_table`.
"""

from __future__ import annotations

from typing import (
    Dict,
    List,
    Optional,
    Sequence,
)

from ..osculation import (
    OsculationReport,
    ThresholdReport,
)

__all__ = ['report_tables', 'format_table']

THRESHOLD_HEADER = (
    'label', 'statement', 'bound', 'strict', 'conditional', 'min_degree',
    'holds')


def report_tables(
    report: ThresholdReport,
    osculation: Optional[OsculationReport] = None,
) -> Dict[str, List[Sequence]]:
    tables = {
        'thresholds': [THRESHOLD_HEADER] + [
            (v.label, v.statement, str(v.bound), v.strict, v.conditional,
             v.min_degree, v.holds)
            for v in report.rows()
        ],
        'codimension': [('m', 'codimension')] + [
            (m, c) for m, c in report.codimension_chain.items()
        ],
    }
    if osculation is not None:
        tables['osculation'] = [
            ('n', 'd', 'r', 's', 'total_dim', 'fiber_dim', 'multidegree',
             'general_type', 'genus_coefficient'),
            (osculation.n, osculation.d, osculation.r,
             '' if osculation.s is None else osculation.s,
             osculation.total_dim, osculation.fiber_dim,
             ','.join(str(m) for m in osculation.multidegree),
             osculation.general_type, osculation.genus_coefficient),
        ]
    return tables


def format_table(rows: List[Sequence]) -> str:
    """Render rows as left-aligned text columns"""
    cells = [[str(c) for c in row] for row in rows]
    if not cells:
        return ''
    widths = [
        max(len(row[i]) for row in cells if i < len(row))
        for i in range(max(len(row) for row in cells))
    ]
    return '\n'.join(
        '  '.join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
        for row in cells
    )
