from datalad_clustered.osculation import (
    canonical_multidegree,
    lang_threshold_report,
    lang_thresholds,
)

from ..tables import (
    THRESHOLD_HEADER,
    format_table,
    report_tables,
)


def test_report_tables(threshold_report_n10_d16):
    tables = report_tables(threshold_report_n10_d16)
    assert list(tables) == ['thresholds', 'codimension']
    rows = tables['thresholds']
    assert tuple(rows[0]) == THRESHOLD_HEADER
    assert len(rows) == 1 + len(lang_thresholds(10))
    by_label = {row[0]: row for row in rows[1:]}
    assert by_label['chowZ2'][2] == '33/2'
    assert by_label['chowZ2'][5:] == (17, False)
    assert by_label['ziEmpty[1]'][3] is True


def test_osculation_table():
    tables = report_tables(
        lang_threshold_report(4, 6), canonical_multidegree(4, 6, 6))
    header, row = tables['osculation']
    assert row[header.index('multidegree')] == '11,4'
    # no second contact point
    assert row[header.index('s')] == ''


def test_format_table():
    text = format_table([('a', 'bb'), ('ccc', 1)])
    assert text.splitlines() == ['a    bb', 'ccc  1']
    assert format_table([]) == ''
