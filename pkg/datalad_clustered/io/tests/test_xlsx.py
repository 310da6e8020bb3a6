import pytest

from datalad_clustered.osculation import (
    canonical_multidegree,
    lang_threshold_report,
)

from ..tables import report_tables
from ..xlsx import (
    tables2tsv,
    tables2xlsx,
    xlsx2tables,
)


@pytest.fixture
def tables():
    return report_tables(
        lang_threshold_report(5, 9),
        canonical_multidegree(5, 9, 4, 3),
    )


def test_tables2xlsx_roundtrip(tmp_path, tables):
    xlsx_fpath = tables2xlsx(tables, tmp_path / 'report.xlsx')
    assert xlsx_fpath.exists()
    loaded = xlsx2tables(xlsx_fpath)
    # sheet order and cell values survive the workbook
    assert list(loaded) == ['thresholds', 'codimension', 'osculation']
    assert loaded == {
        name: [list(row) for row in rows] for name, rows in tables.items()
    }


def test_tables2tsv(tmp_path, tables):
    tsvs = tables2tsv(tables, tmp_path, 'report')
    assert [p.name for p in tsvs] == [
        'report_thresholds.tsv',
        'report_codimension.tsv',
        'report_osculation.tsv',
    ]
    lines = (tmp_path / 'report_codimension.tsv').read_text().splitlines()
    assert lines == ['m\tcodimension'] + [
        f'{m}\t{2 * (m - 5) + 1}' for m in range(5, 10)]


def test_raiseon_no_tables(tmp_path):
    with pytest.raises(ValueError):
        tables2xlsx({}, tmp_path / 'empty.xlsx')
