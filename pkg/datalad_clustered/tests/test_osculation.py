from fractions import Fraction
from math import ceil

import pytest

from datalad_clustered.exceptions import ClusteredError
from datalad_clustered.osculation import (
    CHAIN_LEVELS,
    Threshold,
    canonical_multidegree,
    codimension_chain,
    double_osculation_step,
    general_type_thresholds,
    incidence_dimension,
    injectivity_codimension,
    lang_threshold_report,
    lang_thresholds,
)


def test_incidence_dimension():
    assert incidence_dimension(3, 5, 1).dim == 55
    assert incidence_dimension(3, 9, 2).zi_empty_when
    # boundary of a strict inequality
    assert not incidence_dimension(3, 3, 1).zi_proper_when
    assert incidence_dimension(3, 4, 1).zi_proper_when
    for args in ((3, 2, 3), (1, 4, 1), (3, 4, 0)):
        with pytest.raises(ClusteredError) as e:
            incidence_dimension(*args)
        assert e.value.kind == 'out-of-range'


def test_canonical_multidegree():
    rep = canonical_multidegree(5, 6, 6)
    assert rep.multidegree == (10, 4)
    assert rep.multidegree[1] == rep.genus_coefficient == 4
    rep = canonical_multidegree(4, 6, 3, 3)
    assert rep.multidegree == (2, 10, 10)
    assert rep.general_type
    rep = canonical_multidegree(4, 2, 1, 1)
    assert rep.multidegree == (-4, 0, 0)
    assert not rep.general_type
    # V is fibered by the incidence over the space of forms
    assert rep.forms_dim == 15
    for args in ((4, 6, 0), (4, 6, 7), (4, 6, 3, 4), (4, 6, 3, 0)):
        with pytest.raises(ClusteredError) as e:
            canonical_multidegree(*args)
        assert e.value.kind == 'invalid-contact'


def test_genus_coefficient():
    for n in range(1, 12):
        for d in range(1, 31):
            rep = canonical_multidegree(n, d, d)
            assert rep.multidegree[1] == d - 2 == rep.genus_coefficient


def test_multidegree_monotone():
    for n in range(1, 8):
        for d in range(2, 20):
            for r in range(1, d + 1):
                a = canonical_multidegree(n, d, r).multidegree
                b = canonical_multidegree(n, d + 1, r).multidegree
                assert all(x <= y for x, y in zip(a, b))


def test_double_osculation_step():
    assert double_osculation_step(4, 6, 3) == (0, 10, 4)
    with pytest.raises(ClusteredError):
        double_osculation_step(4, 6, 6)


def test_general_type_thresholds():
    assert general_type_thresholds(2).delta_d == 3
    t = general_type_thresholds(8)
    assert t.delta_d == 5 <= t.bound_d
    t = general_type_thresholds(4)
    assert t.bound_rs == 5
    assert t.delta_rs_weak == 5
    # Δ_(2,3) has a zero Grassmannian twist at d = 5
    assert canonical_multidegree(4, 5, 2, 3).multidegree == (0, 6, 7)
    assert t.delta_rs == 6
    for n in range(2, 51):
        t = general_type_thresholds(n)
        assert t.delta_d <= t.bound_d
        assert t.delta_rs_weak <= t.bound_rs
        assert t.delta_rs <= t.bound_rs + 1
    with pytest.raises(ClusteredError):
        general_type_thresholds(1)


def test_injectivity_and_chain():
    assert injectivity_codimension(3, 5) == {'alpha': 5, 'beta': 3}
    assert codimension_chain(5, 3) == 5
    assert codimension_chain(3, 3) == 1
    with pytest.raises(ClusteredError):
        codimension_chain(2, 3)


def test_threshold():
    t = Threshold('x', 'statement', Fraction(7, 2))
    assert t.min_degree == 4
    assert not t.holds_at(3) and t.holds_at(4)
    t = Threshold('x', 'statement', Fraction(5), strict=True)
    assert t.min_degree == 6
    assert not t.holds_at(5) and t.holds_at(6)


def test_report_n10_d16(threshold_report_n10_d16):
    report = threshold_report_n10_d16
    assert report['algHypOutsideZL'].holds
    assert not report['chowZ2'].holds
    assert report['chowZ2'].min_degree == 17
    assert report['linesOnly'].holds
    assert report['linesOnly'].min_degree == 15
    assert report.chow_k_family[1].min_degree == 15
    assert report['gglExceptionalZ2'].conditional
    assert report.codimension_chain == {
        m: 2 * (m - 10) + 1 for m in range(10, 17)}
    # every row is reported once
    assert len(list(report.rows())) == len(lang_thresholds(10))


def test_report_n3_d5():
    report = lang_threshold_report(3, 5)
    assert report['z1AlgHyp'].holds
    assert report['z1AlgHyp'].min_degree == 4
    assert report['alphaInjective'].holds


def test_report_huge_degree():
    # the codimension chain stays a fixed window for any degree
    report = lang_threshold_report(3, 10 ** 9)
    assert report.codimension_chain == {
        m: 2 * (m - 3) + 1 for m in range(3, 3 + CHAIN_LEVELS + 1)}
    assert report['chowZ2'].holds
    assert report.zi_empty[2].holds


@pytest.mark.parametrize('n', range(3, 21))
def test_min_degrees(n):
    report = lang_threshold_report(n, 1)
    assert report['linesOnly'].min_degree == ceil(3 * n / 2)
    assert report['algHypOutsideZL'].min_degree == ceil((3 * n + 2) / 2)
    assert report['chowZ2'].min_degree == ceil((3 * n + 3) / 2)
    assert report['z1AlgHyp'].min_degree == ceil((3 * n - 1) / 2)
    assert report['z2AlgHyp'].min_degree == ceil((3 * n + 1) / 2)
    for k in range(1, n):
        assert report.chow_k_family[k].min_degree \
            == ceil((3 * n + 1 - k) / 2)


def test_holds_monotone():
    for n in range(3, 12):
        for t in lang_thresholds(n).values():
            held = [t.holds_at(d) for d in range(1, 4 * n)]
            assert held == sorted(held)


def test_report_errors():
    with pytest.raises(ClusteredError):
        lang_threshold_report(2, 5)
    with pytest.raises(ClusteredError):
        lang_threshold_report(5, 0)
