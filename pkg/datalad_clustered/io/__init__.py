"""Input/output for computed objects: JSON codec and tabular exports
"""

from __future__ import annotations

__all__ = [
    'to_json',
    'report_tables',
    'format_table',
    'tables2xlsx',
    'xlsx2tables',
    'tables2tsv',
]

from .jsondata import to_json
from .tables import (
    format_table,
    report_tables,
)
from .xlsx import (
    tables2tsv,
    tables2xlsx,
    xlsx2tables,
)
