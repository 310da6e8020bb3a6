"""Export of report tables to XLSX multi-sheet spreadsheets and TSV files
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import (
    Dict,
    List,
    Sequence,
)

from openpyxl import (
    Workbook,
    load_workbook,
)
from openpyxl.worksheet.worksheet import Worksheet

__all__ = ['tables2xlsx', 'xlsx2tables', 'tables2tsv']

# sheet name -> rows, the first row being the header
Tables = Dict[str, List[Sequence]]


def tables2xlsx(tables: Tables, dest: Path) -> Path:
    """Write each table to a sheet of the workbook ``dest``

    Sheets appear in the order of ``tables``.
    """
    if not tables:
        raise ValueError('no tables to write')
    wb = Workbook(
        # https://openpyxl.readthedocs.io/optimized.html#write-only-mode
        write_only=True,
    )
    for sheet_name, rows in tables.items():
        ws = wb.create_sheet(sheet_name)
        for row in rows:
            ws.append(list(row))
    wb.save(dest)
    return dest


def xlsx2tables(src: Path) -> Tables:
    """Read all sheets of ``src`` back as lists of rows"""
    wb = load_workbook(
        filename=src,
        # see https://openpyxl.readthedocs.io/optimized.html#read-only-mode
        read_only=True,
    )
    tables = {sheet: _sheet2rows(wb[sheet]) for sheet in wb.sheetnames}
    wb.close()
    return tables


def tables2tsv(tables: Tables, dest: Path, prefix: str) -> List[Path]:
    """Write one ``<prefix>_<sheet>.tsv`` file per table into ``dest``"""
    outfpaths = []
    for sheet_name, rows in tables.items():
        outfpath = dest / f'{prefix}_{sheet_name}.tsv'
        with outfpath.open('w', newline='') as tsvfile:
            writer = csv.writer(tsvfile, delimiter='\t')
            writer.writerows(rows)
        outfpaths.append(outfpath)
    return outfpaths


def _sheet2rows(ws: Worksheet) -> List[list]:
    return [list(row) for row in ws.iter_rows(values_only=True)]
