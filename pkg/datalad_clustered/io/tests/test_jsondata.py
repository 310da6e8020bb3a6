import json
from fractions import Fraction

import pytest
from sympy import Rational

from datalad_clustered.clustered import (
    check_necessary,
    meets_z_model,
    mu_construction,
)
from datalad_clustered.exceptions import ClusteredError
from datalad_clustered.grassmann import make_context
from datalad_clustered.osculation import (
    canonical_multidegree,
    general_type_thresholds,
)
from datalad_clustered.p1 import (
    BinaryForm,
    MultiPolynomial,
    SplittingType,
)
from datalad_clustered.schubert import SchubertClass

from ..jsondata import (
    class_from_json,
    form_from_json,
    poly_from_json,
    rational_from_json,
    to_json,
)


def test_rationals():
    assert to_json(Fraction(7, 2)) == '7/2'
    assert to_json(Rational(-1, 3)) == '-1/3'
    # integers stay JSON numbers
    assert to_json(3) == 3
    assert rational_from_json('-1/3') == Rational(-1, 3)
    assert rational_from_json(2) == 2
    with pytest.raises(ClusteredError):
        rational_from_json('one half')


def test_class(twoclustered_class):
    ctx = twoclustered_class['ctx']
    cls = twoclustered_class['cls'] + SchubertClass.sigma(ctx, (1, 1, 1), 2)
    data = to_json(cls)
    assert data == [
        {'partition': [2, 1, 0], 'coeff': 1},
        {'partition': [1, 1, 1], 'coeff': 2},
    ]
    assert class_from_json(ctx, json.loads(json.dumps(data))) == cls
    for bad in ({'partition': [1]}, [{'coeff': 1}], [{'partition': 3}]):
        with pytest.raises(ClusteredError):
            class_from_json(ctx, bad)


def test_class_terms(twoclustered_class):
    ctx = twoclustered_class['ctx']
    # repeated partitions add up
    assert class_from_json(ctx, [
        {'partition': [1, 0, 0], 'coeff': 1},
        {'partition': [1], 'coeff': 2},
    ]) == SchubertClass.sigma(ctx, (1,), 3)
    assert not class_from_json(ctx, [
        {'partition': [2, 1], 'coeff': 1},
        {'partition': [2, 1], 'coeff': -1},
    ])
    for coeff in ('x', 1.7, 2.0, True, None):
        with pytest.raises(ClusteredError) as e:
            class_from_json(ctx, [{'partition': [1], 'coeff': coeff}])
        assert e.value.kind == 'inadmissible'
    with pytest.raises(ClusteredError) as e:
        class_from_json(ctx, [{'partition': ['a']}])
    assert e.value.kind == 'inadmissible'


def test_cluster_report(twoclustered_class):
    data = to_json(check_necessary(twoclustered_class['cls'], 2))
    assert data == {
        'epsilon': 3,
        'ell': 2,
        'ellFloor': 2,
        'codimBound': 4,
        'satisfiesNecessary': True,
        'extremal': None,
    }
    model = meets_z_model(4, 3, 0, 1)
    data = to_json(check_necessary(model.class_b, 1))
    assert data['extremal']['fixedDim'] == 0
    data = to_json(model)
    assert data['classB'] == [{'partition': [2, 0, 0], 'coeff': 1}]
    assert data['classC'] == [{'partition': [1, 0, 0, 0], 'coeff': 1}]


def test_mu(twoclustered_class):
    ctx = twoclustered_class['ctx']
    data = to_json(mu_construction(ctx, ctx.partition((2, 1))))
    assert data['mu'] == [1, 1, 1, 0]
    assert data['target'] == {'planeDim': 3, 'ambientDim': 4}
    assert data['kleimanBound'] == 1
    assert data['codimIdentity'] is True


def test_osculation():
    data = to_json(canonical_multidegree(4, 6, 3, 3))
    assert data['multidegree'] == [2, 10, 10]
    assert data['generalType'] is True
    assert to_json(general_type_thresholds(4)) == {
        'deltaD': 4,
        'deltaRs': 6,
        'deltaRsWeak': 5,
        'boundD': 4,
        'boundRs': 5,
    }


def test_threshold_report(threshold_report_n10_d16):
    data = to_json(threshold_report_n10_d16)
    # the whole report survives a trip through JSON
    assert json.loads(json.dumps(data)) == data
    assert data['algHypOutsideZL']['holds'] is True
    assert data['algHypOutsideZL']['bound'] == '16'
    assert data['chowZ2']['bound'] == '33/2'
    assert data['chowZ2']['minDegree'] == 17
    assert data['chowKFamily']['1']['minDegree'] == 15
    assert data['ziEmpty']['1']['strict'] is True
    assert data['codimensionChain']['16'] == 13


def test_forms():
    p = BinaryForm.from_expr('s**2/2 - t**2')
    data = to_json(p)
    assert data == {
        'degree': 2,
        'terms': [
            {'exp': [2, 0], 'coeff': '1/2'},
            {'exp': [0, 2], 'coeff': '-1'},
        ],
    }
    assert form_from_json(data) == p
    f = MultiPolynomial.from_expr('x0**2 + 3*x1*x2', 3)
    data = to_json(f)
    assert data['numVars'] == 3
    assert poly_from_json(data) == f
    # variables are counted from the exponents
    del data['numVars']
    assert poly_from_json(data) == f
    assert to_json(SplittingType((0, 1))) == [1, 0]


def test_malformed_polynomials():
    for bad in ({'terms': []},
                {'degree': 2, 'terms': [{'exp': [1, 'a'], 'coeff': 1}]},
                {'degree': 2, 'terms': [{'coeff': 1}]}):
        with pytest.raises(ClusteredError) as e:
            form_from_json(bad)
        assert e.value.kind == 'not-homogeneous-poly'
    with pytest.raises(ClusteredError):
        form_from_json({'degree': 2, 'terms': [{'exp': [1, 0], 'coeff': 1}]})
    with pytest.raises(ClusteredError):
        poly_from_json({'degree': 2, 'terms': []})


def test_unsupported():
    with pytest.raises(TypeError):
        to_json(object())
    assert to_json({1: (make_context(0, 1), None)}) == {
        '1': [{'planeDim': 0, 'ambientDim': 1}, None]}
