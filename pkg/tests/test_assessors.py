import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from boxkite.assessors import (
    BACKSLASH,
    SLASH,
    Assessor,
    Diagonal,
    StrutContext,
    emanation_of,
    mutual_zd_edge,
    strut_opposite,
    strut_product_signature,
    tone_row,
    zero_partner,
)
from boxkite.cdp import Multivector


def test_context_validation():
    for n, s in [(3, 1), (4, 0), (4, 8), (5, -1), (5, 16)]:
        with pytest.raises(ValueError):
            StrutContext(n, s)
    ctx = StrutContext(5, 3)
    assert (ctx.g, ctx.x, ctx.k) == (16, 19, 14)
    with pytest.raises(ValueError):
        ctx.assessor(3)
    with pytest.raises(ValueError):
        ctx.require(Assessor(1, 2))


def test_tone_row_examples():
    assert [a.low for a in tone_row(StrutContext(4, 1))] == [2, 4, 6, 7, 5, 3]
    assert [a.low for a in tone_row(StrutContext(4, 7))] == [1, 2, 3, 4, 5, 6]


@pytest.mark.parametrize("s", range(1, 8))
def test_tone_row_holds_reference_assessors(s):
    row = tone_row(StrutContext(4, s))
    assert {(a.low, a.high) for a in row} == set(oracles.GOLDEN_VERTICES[s].values())


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_tone_row_shape(n):
    for s in range(1, 1 << (n - 1)):
        ctx = StrutContext(n, s)
        lows = [a.low for a in tone_row(ctx)]
        assert sorted(lows) == [v for v in range(1, ctx.g) if v != s]
        assert all(lows[i] ^ lows[-1 - i] == s for i in range(ctx.k))
        assert all(lows[i] < lows[-1 - i] for i in range(ctx.k // 2))


@pytest.mark.parametrize("n", [4, 5])
def test_edge_sign_matches_brute_force(n):
    for s in range(1, 1 << (n - 1)):
        ctx = StrutContext(n, s)
        row = tone_row(ctx)
        for a in row:
            for b in row:
                expected = None if a == b else oracles.brute_edge_sign(n, s, a.low, b.low)
                assert mutual_zd_edge(a, b, ctx) == expected, (s, a, b)


def test_strut_opposites_never_zero_divide():
    for n in (4, 5, 6):
        for s in range(1, 1 << (n - 1)):
            ctx = StrutContext(n, s)
            for a in tone_row(ctx):
                opp = strut_opposite(a, ctx)
                assert opp.low == a.low ^ s
                assert mutual_zd_edge(a, opp, ctx) is None


def test_emanation_and_zero_partner():
    ctx = StrutContext(4, 1)
    a, d = ctx.assessor(3), ctx.assessor(4)
    assert str(emanation_of(a, d, ctx)) == "+7"
    b = ctx.assessor(6)
    assert str(emanation_of(a, b, ctx)) == "-5"
    assert emanation_of(a, ctx.assessor(2), ctx) is None
    for o in (SLASH, BACKSLASH):
        p = Diagonal(a, o)
        q = zero_partner(p, b, ctx)
        assert (p.vector(4) * q.vector(4)).is_zero()
        assert not (p.vector(4) * q.toggled().vector(4)).is_zero()


def test_diagonal_squares_and_cross_product():
    ctx = StrutContext(4, 3)
    for a in tone_row(ctx):
        slash, back = Diagonal(a, SLASH).vector(4), Diagonal(a, BACKSLASH).vector(4)
        assert (slash * slash).terms() == {0: -2}
        prod = (slash * back).terms()
        assert set(prod) == {ctx.x} and abs(prod[ctx.x]) == 2


@pytest.mark.parametrize("n", [4, 5])
def test_strut_signature_indices(n):
    for s in range(1, 1 << (n - 1)):
        ctx = StrutContext(n, s)
        for a in tone_row(ctx):
            assert strut_product_signature(a, ctx).index_relations_hold(ctx)


def test_diagonal_validation():
    with pytest.raises(ValueError):
        Diagonal(Assessor(1, 10), 0)
    assert str(Diagonal(Assessor(1, 10), BACKSLASH)) == "(1,10)\\"


@settings(max_examples=100, deadline=None)
@given(st.integers(4, 7), st.data())
def test_edge_relation_is_symmetric_and_vanishes(n, data):
    s = data.draw(st.integers(1, (1 << (n - 1)) - 1))
    ctx = StrutContext(n, s)
    row = tone_row(ctx)
    a, b = data.draw(st.sampled_from(row)), data.draw(st.sampled_from(row))
    e = mutual_zd_edge(a, b, ctx)
    assert e == mutual_zd_edge(b, a, ctx)
    if e is not None:
        for o in (SLASH, BACKSLASH):
            p: Multivector = Diagonal(a, o).vector(n)
            assert (p * Diagonal(b, o * e).vector(n)).is_zero()
            assert (Diagonal(b, o * e).vector(n) * p).is_zero()
