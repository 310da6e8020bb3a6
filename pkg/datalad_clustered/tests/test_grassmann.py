from math import comb

import pytest
from hypothesis import (
    given,
    strategies as st,
)

from datalad_clustered.exceptions import ClusteredError
from datalad_clustered.grassmann import (
    Partition,
    dual_partition,
    enumerate_partitions,
    make_context,
    partitions_of_size,
    shift_partition,
)


@st.composite
def context_and_partition(draw, max_ambient=7):
    n = draw(st.integers(min_value=1, max_value=max_ambient))
    k = draw(st.integers(min_value=0, max_value=n - 1))
    ctx = make_context(k, n)
    parts = sorted(
        draw(st.lists(
            st.integers(min_value=0, max_value=ctx.max_part),
            min_size=ctx.num_parts, max_size=ctx.num_parts)),
        reverse=True)
    return ctx, ctx.partition(parts)


def test_context():
    ctx = make_context(1, 3)
    assert (ctx.num_parts, ctx.max_part, ctx.dimension) == (2, 2, 4)
    ctx = make_context(2, 4)
    assert (ctx.num_parts, ctx.max_part, ctx.dimension) == (3, 2, 6)
    assert str(ctx) == 'G(2,4)'
    for k, n in ((3, 3), (4, 3), (-1, 2)):
        with pytest.raises(ClusteredError) as e:
            make_context(k, n)
        assert e.value.kind == 'invalid-context'


def test_partition():
    lam = Partition.of(2, 1, 0)
    assert lam.size == 3
    assert lam.length == 2
    assert lam.trimmed() == (2, 1)
    assert lam.padded(4) == Partition.of(2, 1, 0, 0)
    assert str(lam) == '(2,1,0)'
    with pytest.raises(ClusteredError):
        Partition.of(1, 2)
    with pytest.raises(ClusteredError):
        Partition.of(1, -1)
    with pytest.raises(ClusteredError):
        lam.padded(1)


def test_admissible():
    ctx = make_context(1, 3)
    # trailing zeros are filled in
    assert ctx.partition([2]) == Partition.of(2, 0)
    assert ctx.admits((2, 2))
    assert not ctx.admits((3, 0))
    assert not ctx.admits((1, 1, 1))
    with pytest.raises(ClusteredError) as e:
        ctx.partition((3,))
    assert e.value.kind == 'inadmissible'
    assert ctx.rectangle(1) == Partition.of(2, 0)
    assert ctx.column() == Partition.of(1, 1)
    assert ctx.row(1) == Partition.of(1, 0)
    with pytest.raises(ClusteredError):
        ctx.rectangle(3)


def test_enumerate():
    assert enumerate_partitions(make_context(1, 3)) == [
        Partition(p) for p in
        ((0, 0), (1, 0), (2, 0), (1, 1), (2, 1), (2, 2))
    ]
    assert enumerate_partitions(make_context(0, 1)) == [
        Partition.of(0), Partition.of(1)]
    assert len(enumerate_partitions(make_context(2, 4))) == 10
    for n in range(1, 7):
        for k in range(n):
            assert len(enumerate_partitions(make_context(k, n))) \
                == comb(n + 1, k + 1)
    assert partitions_of_size(make_context(1, 3), 2) == [
        Partition.of(2, 0), Partition.of(1, 1)]


def test_dual():
    ctx = make_context(2, 4)
    assert dual_partition(ctx, Partition.of(2, 1, 0)) == Partition.of(2, 1, 0)
    assert dual_partition(ctx, ctx.zero()) == Partition.of(2, 2, 2)
    assert dual_partition(make_context(1, 3), Partition.of(2, 0)) \
        == Partition.of(2, 0)


@given(context_and_partition())
def test_dual_involution(ctx_lam):
    ctx, lam = ctx_lam
    dual = dual_partition(ctx, lam)
    assert dual_partition(ctx, dual) == lam
    assert lam.size + dual.size == ctx.dimension


def test_shift():
    ctx = make_context(1, 3)
    lam = Partition.of(1, 0)
    assert shift_partition(ctx, lam, 'h') == Partition.of(2, 1)
    assert shift_partition(ctx, lam, 'p') == Partition.of(2, 1)
    with pytest.raises(ClusteredError) as e:
        shift_partition(ctx, Partition.of(2, 1), 'h')
    assert e.value.kind == 'h-undefined'
    with pytest.raises(ClusteredError) as e:
        shift_partition(ctx, Partition.of(1, 1), 'p')
    assert e.value.kind == 'p-undefined'
    with pytest.raises(ClusteredError) as e:
        shift_partition(ctx, lam, 'q')
    assert e.value.kind == 'out-of-range'


@given(context_and_partition())
def test_shift_sizes(ctx_lam):
    ctx, lam = ctx_lam
    if lam[0] < ctx.max_part:
        assert shift_partition(ctx, lam, 'h').size \
            == lam.size + ctx.num_parts
    if lam[-1] == 0:
        assert shift_partition(ctx, lam, 'p').size \
            == lam.size + ctx.max_part
