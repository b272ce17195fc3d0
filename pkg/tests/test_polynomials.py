from fractions import Fraction

import pytest

from maxsub.errors import NotHomogeneousError, PolyParseError, ZeroPolynomialError
from maxsub.polynomials import Monomial, Polynomial, weighted_degree


def test_weighted_degree_examples():
    # X2 * X1^3 over two variables has weight 2 + 1 + 1 + 1
    m = Monomial(2, (3, 1))
    assert m.weighted_degree == 5
    assert Monomial.one(3).weighted_degree == 0
    p = Polynomial.x(2, 1) + Polynomial.x(2, 2)
    with pytest.raises(NotHomogeneousError):
        weighted_degree(p)
    zero = Polynomial.from_terms(2, [])
    with pytest.raises(ZeroPolynomialError):
        weighted_degree(zero)


def test_polynomial_canonicalization():
    p = Polynomial.from_terms(
        2,
        [
            (Fraction(1), Monomial(2, (2, 0))),
            (Fraction(2), Monomial(2, (2, 0))),
            (Fraction(1), Monomial(2, (0, 1))),
            (Fraction(-1), Monomial(2, (0, 1))),
        ],
    )
    assert p.terms == ((Fraction(3), Monomial(2, (2, 0))),)


def test_monomial_multiplication():
    a = Monomial(3, (1, 0, 2))
    b = Monomial(3, (0, 4, 1))
    assert (a * b).exponents == (1, 4, 3)
    with pytest.raises(ValueError):
        a * Monomial(2, (1, 0))


def test_parse_simple_forms():
    assert Polynomial.parse("1", 2) == Polynomial.one(2)
    assert Polynomial.parse("X2^2", 2) == Polynomial.x(2, 2, 2)
    p = Polynomial.parse("3*X1^2*X2 + 1/2*X1^4", 2)
    assert p.terms == (
        (Fraction(1, 2), Monomial(2, (4, 0))),
        (Fraction(3), Monomial(2, (2, 1))),
    )
    assert Polynomial.parse("-2*X1", 1) == Polynomial.x(1, 1) * Fraction(-2)
    assert Polynomial.parse(" X1 * X1 ", 1) == Polynomial.x(1, 1, 2)


def test_parse_round_trips_through_str():
    for text, k in [("3*X1^2*X2 + 1/2*X1^4", 2), ("X2^2", 3), ("5", 1)]:
        p = Polynomial.parse(text, k)
        assert Polynomial.parse(str(p), k) == p


def test_parse_errors_carry_columns():
    with pytest.raises(PolyParseError) as err:
        Polynomial.parse("X1 + $", 2)
    assert err.value.column == 6
    with pytest.raises(PolyParseError) as err:
        Polynomial.parse("X9", 2)
    assert err.value.column == 2
    with pytest.raises(PolyParseError):
        Polynomial.parse("", 2)
    with pytest.raises(PolyParseError):
        Polynomial.parse("X1^", 2)
    with pytest.raises(PolyParseError):
        Polynomial.parse("3/0*X1", 2)
    with pytest.raises(PolyParseError):
        Polynomial.parse("X1 X2", 2)
