import pytest
from hypothesis import (
    given,
    settings,
    strategies as st,
)

from datalad_clustered.exceptions import ClusteredError
from datalad_clustered.grassmann import (
    Partition,
    dual_partition,
    enumerate_partitions,
    make_context,
)
from datalad_clustered.schubert import (
    SchubertClass,
    is_rectangle_rigid,
    lr_coefficient,
    multiply_classes,
    pairing,
    product_nonzero,
    schur_product_oracle,
)

G13 = make_context(1, 3)
G24 = make_context(2, 4)


def sigma(ctx, *parts, coeff=1):
    return SchubertClass.sigma(ctx, parts, coeff)


@pytest.mark.parametrize('lam,mu,nu,coeff', [
    ((1,), (1,), (1, 1), 1),
    ((1,), (1,), (2,), 1),
    ((1,), (1,), (2, 2), 0),
    ((2, 1), (2, 1), (3, 2, 1), 2),
    ((2, 1), (1,), (2, 2), 1),
    # shape does not contain λ
    ((3,), (1,), (2, 2), 0),
    # trailing zeros are irrelevant
    ((1, 0, 0), (1, 0), (1, 1, 0, 0), 1),
])
def test_lr_coefficient(lam, mu, nu, coeff):
    assert lr_coefficient(lam, mu, nu) == coeff
    assert lr_coefficient(mu, lam, nu) == coeff


def test_products():
    assert multiply_classes(sigma(G13, 1), sigma(G13, 1)) \
        == sigma(G13, 2) + sigma(G13, 1, 1)
    assert multiply_classes(sigma(G24, 1), sigma(G24, 1, 1, 1)) \
        == sigma(G24, 2, 1, 1)
    prod = multiply_classes(sigma(G13, 2, 2), sigma(G13, 1))
    assert not prod
    assert prod == SchubertClass.zero(G13)
    # operator forms
    assert sigma(G13, 1) * sigma(G13, 1) == sigma(G13, 2) + sigma(G13, 1, 1)
    assert 3 * sigma(G13, 1) == sigma(G13, 1, coeff=3)
    assert sigma(G13, 1) - sigma(G13, 1) == SchubertClass.zero(G13)


def test_class_bookkeeping():
    cls = sigma(G24, 2, 1) + sigma(G24, 1, 1, 1, coeff=2)
    assert cls.support == (Partition.of(2, 1, 0), Partition.of(1, 1, 1))
    assert cls.coefficient((1, 1, 1)) == 2
    assert cls.coefficient((2,)) == 0
    assert cls.codimension == 3
    assert cls.is_effective()
    assert not (-cls).is_effective()
    mixed = cls + SchubertClass.fundamental(G24)
    assert not mixed.is_homogeneous()
    with pytest.raises(ClusteredError) as e:
        mixed.codimension
    assert e.value.kind == 'not-homogeneous'
    with pytest.raises(ClusteredError) as e:
        sigma(G13, 1) + sigma(G24, 1)
    assert e.value.kind == 'context-mismatch'
    with pytest.raises(ClusteredError):
        sigma(G13, 3)


def test_product_nonzero():
    assert product_nonzero(G13, Partition.of(1, 0), Partition.of(1, 0))
    assert not product_nonzero(G13, Partition.of(2, 2), Partition.of(1, 0))
    for ctx in (G13, G24, make_context(2, 5)):
        for lam in enumerate_partitions(ctx):
            assert product_nonzero(ctx, lam, ctx.zero())


def test_rigid_rectangles():
    g25 = make_context(2, 5)
    assert is_rectangle_rigid(g25, Partition.of(3, 3, 0))
    assert not is_rectangle_rigid(g25, Partition.of(3, 2, 0))
    assert is_rectangle_rigid(g25, g25.zero())


def test_poincare_duality():
    for ctx in (G13, G24):
        for lam in enumerate_partitions(ctx):
            dual = dual_partition(ctx, lam)
            assert pairing(sigma(ctx, *lam), sigma(ctx, *dual)) == 1
    assert pairing(SchubertClass.point(G24),
                   SchubertClass.fundamental(G24)) == 1


def test_lines_meeting_four_lines():
    # four general lines in P^3 are met by two lines
    assert pairing(sigma(G13, 1) * sigma(G13, 1),
                   sigma(G13, 1) * sigma(G13, 1)) == 2


@st.composite
def class_pairs(draw):
    k, n = draw(st.sampled_from(((1, 3), (1, 4), (2, 4), (2, 5))))
    ctx = make_context(k, n)
    parts = enumerate_partitions(ctx)
    return ctx, draw(st.sampled_from(parts)), draw(st.sampled_from(parts))


@settings(deadline=None, max_examples=50)
@given(class_pairs())
def test_schur_oracle(ctx_pair):
    ctx, lam, mu = ctx_pair
    assert multiply_classes(sigma(ctx, *lam), sigma(ctx, *mu)) \
        == schur_product_oracle(ctx, lam, mu)


@settings(deadline=None, max_examples=50)
@given(class_pairs())
def test_nonvanishing_criterion(ctx_pair):
    ctx, lam, mu = ctx_pair
    assert product_nonzero(ctx, lam, mu) \
        == bool(multiply_classes(sigma(ctx, *lam), sigma(ctx, *mu)))
