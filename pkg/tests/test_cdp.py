import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from boxkite import cdp
from boxkite.cdp import AssociativeTriplet, Multivector, SignedUnit, product_sign, unit, unit_product


@pytest.mark.parametrize("n", range(1, 7))
def test_sign_matches_doubling_oracle(n):
    size = 1 << n
    expected = oracles.sign_matrix(n)
    got = np.array([[product_sign(i, j) for j in range(size)] for i in range(size)])
    assert (got == expected).all()


def test_unit_oracle_agrees_with_vector_doubling():
    e = np.eye(32, dtype=np.int64)
    rng = random.Random(3)
    for _ in range(200):
        i, j = rng.randrange(32), rng.randrange(32)
        assert (oracles.doubling_product(e[i], e[j]) == oracles.fast_product(e[i], e[j], 5)).all()


def test_sign_table_is_cached_and_read_only():
    t = cdp.sign_table(4)
    assert t is cdp.sign_table(4)
    with pytest.raises(ValueError):
        t[1, 1] = 1


@pytest.mark.parametrize("n", range(1, 7))
def test_index_law_and_anticommutativity(n):
    size = 1 << n
    for a in range(size):
        for b in range(size):
            assert unit_product(unit(a), unit(b)).index == a ^ b
            if a and b and a != b:
                assert product_sign(a, b) == -product_sign(b, a)
    for a in range(1, size):
        assert unit_product(unit(a), unit(a)) == unit(0, -1)
        assert unit_product(unit(0), unit(a)) == unit(a) == unit_product(unit(a), unit(0))


@pytest.mark.parametrize("n", range(2, 8))
def test_generator_rule(n):
    g = 1 << (n - 1)
    for k in range(1, g):
        assert unit_product(unit(k), unit(g)) == unit(k + g)
    for k in range(g + 1, 2 * g):
        assert unit_product(unit(k), unit(g)).sign == -1


def test_reference_products():
    assert str(unit_product(unit(7), unit(12))) == "+11"
    assert SignedUnit.parse("-7") * SignedUnit.parse("12") == unit(11, -1)
    assert unit_product(unit(3), unit(4)) == unit(7)
    assert unit_product(unit(10), unit(13)) == unit(7, -1)


def test_octonion_sign_ordering():
    ts = cdp.enumerate_triplets(3)
    consistent = sorted(t.oriented_order for t in ts if t.counting_order_consistent)
    violators = sorted(t.oriented_order for t in ts if not t.counting_order_consistent)
    assert consistent == [(1, 2, 3), (1, 4, 5), (2, 4, 6), (2, 5, 7), (3, 4, 7)]
    assert violators == [(1, 7, 6), (3, 6, 5)]


@pytest.mark.parametrize("n,count", [(3, 7), (4, 35), (5, 155), (6, 651)])
def test_triplet_census(n, count):
    ts = cdp.enumerate_triplets(n)
    assert len(ts) == count == cdp.triplet_count(n)
    assert len({t.indices for t in ts}) == count
    for t in ts:
        a, b, c = t.oriented_order
        assert unit_product(unit(a), unit(b)) == unit(c)


def test_triplets_are_associative():
    assert all(t.is_associative() for t in cdp.enumerate_triplets(4))


def test_triplet_rejects_non_xor_closed():
    with pytest.raises(ValueError):
        AssociativeTriplet.from_indices(1, 2, 4)


def test_exponent_bounds():
    with pytest.raises(ValueError):
        cdp.sign_table(0)
    with pytest.raises(ValueError):
        cdp.check_exponent(cdp.MAX_EXPONENT + 1)
    with pytest.raises(ValueError):
        unit_product(unit(16), unit(1), n=4)


def test_multivector_dimension_guard():
    with pytest.raises(ValueError):
        Multivector.zero(3) + Multivector.zero(4)
    with pytest.raises(ValueError):
        Multivector(3, (0,) * 7)


def vectors(n):
    return st.lists(st.integers(-20, 20), min_size=1 << n, max_size=1 << n).map(
        lambda c: Multivector(n, tuple(c)))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_multivector_product_matches_oracle(data):
    n = data.draw(st.integers(1, 5))
    x, y = data.draw(vectors(n)), data.draw(vectors(n))
    expected = oracles.doubling_product(np.array(x.coefficients), np.array(y.coefficients))
    assert tuple((x * y).coefficients) == tuple(int(v) for v in expected)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_composition_holds_through_octonions(data):
    n = data.draw(st.integers(1, 3))
    x, y = data.draw(vectors(n)), data.draw(vectors(n))
    assert cdp.norm_composition_defect(x, y) == 0
    assert cdp.squared_norm(x * y) == cdp.squared_norm(x) * cdp.squared_norm(y)


def test_sedenion_zero_product_pair():
    x = Multivector.from_terms(4, {3: 1, 10: 1})
    y = Multivector.from_terms(4, {6: 1, 15: -1})
    assert (x * y).is_zero()
    assert cdp.norm_composition_defect(x, y) == -4


def test_distributivity_and_negation():
    rng = random.Random(11)
    for _ in range(20):
        x, y, z = (Multivector(4, tuple(rng.randint(-5, 5) for _ in range(16))) for _ in range(3))
        assert x * (y + z) == x * y + x * z
        assert (-x) * y == -(x * y)
        assert x - x == Multivector.zero(4)
        assert x.scale(3) == x + x + x
