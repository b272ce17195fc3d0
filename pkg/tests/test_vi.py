import warnings
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from maxsub.errors import (
    DegreeMismatchError,
    GeometricRangeWarning,
    InvalidRankError,
)
from maxsub.exact import CycNumber, cyclotomic_polynomial, from_rational, make_root
from maxsub.polynomials import Monomial, Polynomial
from maxsub.selftest import random_gromov_queries
from maxsub.twisted import reduce_to_grassmannian
from maxsub.vi import (
    RootSubset,
    elementary_symmetric,
    vi_sum,
    vi_sum_numeric,
    vi_summand,
)


def test_elementary_symmetric_examples():
    roots = [make_root(2, 0), make_root(2, 1)]  # 1 and -1
    assert elementary_symmetric(roots, 0) == CycNumber.one(2)
    assert not elementary_symmetric(roots, 1)
    assert elementary_symmetric(roots, 2) == -CycNumber.one(2)
    cube = [make_root(3, 1), make_root(3, 2)]
    assert elementary_symmetric(cube, 1).as_rational() == -1
    assert elementary_symmetric(cube, 2).as_rational() == 1
    with pytest.raises(IndexError):
        elementary_symmetric(roots, 3)
    with pytest.raises(IndexError):
        elementary_symmetric(roots, -1)


def test_root_subset_validation():
    RootSubset(5, (0, 2, 4))
    with pytest.raises(ValueError):
        RootSubset(5, (2, 2))
    with pytest.raises(ValueError):
        RootSubset(5, (3, 1))
    with pytest.raises(ValueError):
        RootSubset(3, (0, 1, 2, 0))


def test_vi_summand_examples():
    # k=1, g=2: sigma_1 = rho cancels against the rho in the denominator
    s = RootSubset(5, (2,))
    assert vi_summand(s, Monomial(1, (1,)), 2) == CycNumber.one(5)
    # k=1, g=1: denominator exponent vanishes
    assert vi_summand(s, Monomial(1, (3,)), 1) == make_root(5, 2) ** 3
    # k=2, r=2, g=2, subset {1,-1}, class 1: 1 / (1*(-1)*(2)(-2)) = 1/4
    s2 = RootSubset(2, (0, 1))
    assert vi_summand(s2, Monomial.one(2), 2) == from_rational(2, Fraction(1, 4))


def test_vi_sum_paper_values():
    assert vi_sum(2, 1, 2, -1, Polynomial.x(1, 1)) == 4
    assert vi_sum(3, 2, 2, -2, Polynomial.x(2, 2, 2)) == 9
    assert vi_sum(4, 2, 0, 0, Polynomial.x(2, 1, 4)) == 2


def test_vi_sum_validation():
    with pytest.raises(InvalidRankError):
        vi_sum(3, 3, 2, 0, Polynomial.one(3))
    with pytest.raises(InvalidRankError):
        vi_sum(3, 0, 2, 0, Polynomial.one(1))
    with pytest.raises(DegreeMismatchError):
        vi_sum(3, 2, 2, -2, Polynomial.x(2, 1))


def test_vi_sum_is_linear_in_the_class():
    p1 = Polynomial.x(2, 1, 4)
    p2 = Polynomial.from_terms(
        2, [(Fraction(1), Monomial(2, (2, 1)))]
    )
    combo = p1 * Fraction(2, 3) + p2 * Fraction(-5)
    got = vi_sum(4, 2, 0, 0, combo)
    expected = Fraction(2, 3) * vi_sum(4, 2, 0, 0, p1) - 5 * vi_sum(4, 2, 0, 0, p2)
    assert got == expected


def _summand_from_ordered_tuple(r, exps, exponents, g):
    """Independent re-derivation of the summand for an ordered root tuple."""
    roots = [make_root(r, a) for a in exps]
    k = len(roots)
    num = CycNumber.one(r)
    for j, mj in enumerate(exponents, start=1):
        if mj:
            num = num * elementary_symmetric(roots, j) ** mj
    den = CycNumber.one(r)
    for rho in roots:
        den = den * rho
    for i in range(k):
        for j in range(k):
            if i != j:
                den = den * (roots[i] - roots[j])
    return num * den ** (-(g - 1))


@pytest.mark.parametrize("r,k,g,e", [(4, 2, 2, -1), (5, 2, 2, -1), (6, 3, 2, -2), (5, 3, 3, -4)])
def test_subset_sum_equals_ordered_tuple_sum(r, k, g, e):
    wd = -e * r + k * (r - k) * (1 - g)
    assert wd >= 0
    # build X_k^q * X_1^s with q*k + s = wd
    q, s = divmod(wd, k)
    exps = [0] * k
    exps[k - 1] = q
    exps[0] += s
    mono = Monomial(k, tuple(exps))
    p = Polynomial.from_terms(k, [(Fraction(1), mono)])
    tuple_total = CycNumber.zero(r)
    for comb in combinations(range(r), k):
        for perm in permutations(comb):
            tuple_total = tuple_total + _summand_from_ordered_tuple(
                r, perm, mono.exponents, g
            )
    subset_total = CycNumber.zero(r)
    for comb in combinations(range(r), k):
        subset_total = subset_total + vi_summand(RootSubset(r, comb), mono, g)
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    assert tuple_total == subset_total * fact
    sign = -1 if (e * (k - 1)) % 2 else 1
    expected = sign * Fraction(r) ** (k * (g - 1)) * subset_total.as_rational()
    assert vi_sum(r, k, g, e, p) == expected


def test_orbit_pruning_and_threads_are_bit_identical():
    cases = [
        (6, 2, 2, -2),
        (7, 3, 2, -3),
        (8, 2, 3, -3),
    ]
    for r, k, g, e in cases:
        wd = -e * r + k * (r - k) * (1 - g)
        q, s = divmod(wd, k)
        exps = [0] * k
        exps[k - 1] = q
        exps[0] += s
        p = Polynomial.from_terms(k, [(Fraction(1), Monomial(k, tuple(exps)))])
        base = vi_sum(r, k, g, e, p)
        assert vi_sum(r, k, g, e, p, use_orbits=True) == base
        assert vi_sum(r, k, g, e, p, threads=3) == base
        assert vi_sum(r, k, g, e, p, threads=3, use_orbits=True) == base


def test_rationality_never_fails_on_valid_queries():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", GeometricRangeWarning)
        for q in random_gromov_queries(60, seed=99, r_max=10):
            e2, p2 = reduce_to_grassmannian(q)
            value = vi_sum(q.r, q.k, q.g, e2, p2)
            assert isinstance(value, Fraction)


def test_vi_sum_numeric_examples():
    got = vi_sum_numeric(2, 1, 2, -1, Polynomial.x(1, 1))
    assert abs(got - 4.0) <= 1e-9
    exact = vi_sum(6, 2, 2, -2, Polynomial.x(2, 2, 2))
    num = vi_sum_numeric(6, 2, 2, -2, Polynomial.x(2, 2, 2))
    scale = 1 + abs(float(exact))
    assert abs(num.real - float(exact)) <= 1e-6 * scale
    assert abs(num.imag) <= 1e-6 * scale


def test_backends_agree_at_vi_level():
    import maxsub._backend as backend

    try:
        backend.get_kernel("compiled")
    except ImportError:
        pytest.skip("compiled kernel not built")
    for r, k, g, e in [(6, 2, 2, -2), (7, 3, 3, -6), (5, 4, 2, -4)]:
        wd = -e * r + k * (r - k) * (1 - g)
        if wd < 0:
            continue
        q, s = divmod(wd, k)
        exps = [0] * k
        exps[k - 1] = q
        exps[0] += s
        p = Polynomial.from_terms(k, [(Fraction(1), Monomial(k, tuple(exps)))])
        assert vi_sum(r, k, g, e, p, backend="pure") == vi_sum(
            r, k, g, e, p, backend="compiled"
        )
