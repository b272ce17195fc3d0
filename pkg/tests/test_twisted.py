import warnings

import pytest
from hypothesis import given, strategies as st

from maxsub.errors import (
    DegreeMismatchError,
    GeometricRangeWarning,
    InvalidInputError,
    InvalidRankError,
)
from maxsub.polynomials import Monomial, Polynomial
from maxsub.selftest import random_gromov_queries
from maxsub.twisted import (
    GromovQuery,
    decompose_degree,
    query_warnings,
    recursion_shift,
    reduce_to_grassmannian,
    s_invariants,
    tensor_shift,
    twisted_invariant,
)
from maxsub.vi import vi_sum


def test_s_invariants_examples():
    si = s_invariants(3, 2, 1, 2)
    assert (si.epsilon, si.s_min, si.e_max) == (0, 2, 0)
    si = s_invariants(2, 1, 1, 2)
    assert (si.epsilon, si.s_min, si.e_max) == (0, 1, 0)
    si = s_invariants(3, 2, 2, 2)
    assert (si.epsilon, si.s_min) == (2, 4)


def test_s_invariants_guards():
    with pytest.raises(InvalidRankError):
        s_invariants(3, 3, 1, 2)
    with pytest.raises(InvalidInputError):
        s_invariants(3, 2, 1, 1)


def test_decompose_degree_examples():
    assert decompose_degree(1, 3) == (1, 2)
    assert decompose_degree(6, 3) == (2, 0)
    assert decompose_degree(-1, 3) == (0, 1)


@given(st.integers(min_value=-50, max_value=50), st.integers(min_value=2, max_value=12))
def test_decompose_degree_round_trip(d, r):
    a, b = decompose_degree(d, r)
    assert a * r - b == d
    assert 0 <= b < r


def test_reduce_examples():
    q = GromovQuery(3, 2, 2, 1, 0, Polynomial.one(2))
    assert reduce_to_grassmannian(q) == (-2, Polynomial.x(2, 2, 2))
    q = GromovQuery(2, 1, 2, 1, 0, Polynomial.one(1))
    assert reduce_to_grassmannian(q) == (-1, Polynomial.x(1, 1))


def test_reduce_rejects_bad_degree():
    # d=8, e=1 against X1^2: the input degree invariant fails
    q = GromovQuery(4, 2, 2, 8, 1, Polynomial.x(2, 1, 2))
    with pytest.raises(DegreeMismatchError):
        reduce_to_grassmannian(q)


def test_tensor_shift_examples():
    q = GromovQuery(3, 2, 2, 1, 0, Polynomial.one(2))
    shifted = tensor_shift(q, 1)
    assert (shifted.d, shifted.e) == (4, 2)
    for d1 in range(-3, 4):
        assert tensor_shift(q, d1).s_e == q.s_e


def test_recursion_shift_examples():
    e2, p2 = recursion_shift(0, Polynomial.one(2), 3, 2)
    assert e2 == -2
    assert p2 == Polynomial.x(2, 2, 3)
    e3, p3 = recursion_shift(e2, p2, 3, 2)
    assert e3 == -4
    assert p3 == Polynomial.x(2, 2, 6)


def test_twisted_invariant_examples():
    q = GromovQuery(3, 2, 2, 1, 0, Polynomial.one(2))
    assert twisted_invariant(q) == 9
    q = GromovQuery(2, 1, 2, 1, 0, Polynomial.one(1))
    assert twisted_invariant(q) == 4
    bad = GromovQuery(4, 2, 2, 2, 0, Polynomial.x(2, 1, 2))
    with pytest.raises(DegreeMismatchError):
        twisted_invariant(bad)


def test_extrapolation_warning_below_genus_two():
    q = GromovQuery(4, 2, 0, 0, 0, Polynomial.x(2, 1, 4))
    with pytest.warns(GeometricRangeWarning):
        assert twisted_invariant(q) == 2


def test_e_above_e_max_is_reported_not_fatal():
    # the degree guard makes such queries unevaluable, but the warning
    # layer itself must flag them
    q = GromovQuery(2, 1, 2, 1, 5, Polynomial.one(1))
    notes = query_warnings(q)
    assert any("e_max" in note for note in notes)


def test_shift_invariance_on_random_queries():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", GeometricRangeWarning)
        for i, q in enumerate(random_gromov_queries(40, seed=4242)):
            base = twisted_invariant(q)
            assert twisted_invariant(tensor_shift(q, (i % 7) - 3)) == base
            e2, p2 = reduce_to_grassmannian(q)
            e3, p3 = recursion_shift(e2, p2, q.r, q.k)
            assert vi_sum(q.r, q.k, q.g, e3, p3) == base


def test_reduction_preserves_degree_condition():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", GeometricRangeWarning)
        for q in random_gromov_queries(30, seed=777):
            e2, p2 = reduce_to_grassmannian(q)
            assert p2.weighted_degree() == -e2 * q.r + q.k * (q.r - q.k) * (1 - q.g)
