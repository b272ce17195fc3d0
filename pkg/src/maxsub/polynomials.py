"""Weighted monomials and polynomials in the Chern-class variables.

The variable X_j carries weight j, so the monomial prod X_j^(m_j) has
weighted degree sum j*m_j.  Invariant evaluation requires homogeneous
input, which is checked lazily by ``weighted_degree``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotHomogeneousError, PolyParseError, ZeroPolynomialError


@dataclass(frozen=True)
class Monomial:
    """prod_j X_j^(exponents[j-1]) over k weighted variables."""

    k: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("a monomial needs at least one variable")
        if len(self.exponents) != self.k:
            raise ValueError(
                f"expected {self.k} exponents, got {len(self.exponents)}"
            )
        if any(m < 0 for m in self.exponents):
            raise ValueError("exponents must be nonnegative")

    @classmethod
    def one(cls, k: int) -> Monomial:
        return cls(k, (0,) * k)

    @classmethod
    def x(cls, k: int, j: int, power: int = 1) -> Monomial:
        if not 1 <= j <= k:
            raise IndexError(f"variable index {j} outside 1..{k}")
        exps = [0] * k
        exps[j - 1] = power
        return cls(k, tuple(exps))

    @property
    def weighted_degree(self) -> int:
        return sum((j + 1) * m for j, m in enumerate(self.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        if self.k != other.k:
            raise ValueError("monomials over different variable counts")
        return Monomial(
            self.k, tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def __str__(self) -> str:
        factors = []
        for j, m in enumerate(self.exponents, start=1):
            if m == 1:
                factors.append(f"X{j}")
            elif m > 1:
                factors.append(f"X{j}^{m}")
        return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class Polynomial:
    """Rational linear combination of distinct monomials over k variables.

    Terms are kept in a canonical order (exponent tuples, descending) with
    nonzero coefficients; the zero polynomial has no terms.
    """

    k: int
    terms: tuple[tuple[Fraction, Monomial], ...]

    @classmethod
    def from_terms(cls, k, terms) -> Polynomial:
        combined: dict[tuple[int, ...], Fraction] = {}
        for coeff, mono in terms:
            if mono.k != k:
                raise ValueError("monomial variable count does not match")
            key = mono.exponents
            combined[key] = combined.get(key, Fraction(0)) + Fraction(coeff)
        kept = sorted(
            ((exps, c) for exps, c in combined.items() if c),
            key=lambda item: item[0],
            reverse=True,
        )
        return cls(k, tuple((c, Monomial(k, exps)) for exps, c in kept))

    @classmethod
    def one(cls, k: int) -> Polynomial:
        return cls.from_terms(k, [(Fraction(1), Monomial.one(k))])

    @classmethod
    def x(cls, k: int, j: int, power: int = 1) -> Polynomial:
        return cls.from_terms(k, [(Fraction(1), Monomial.x(k, j, power))])

    def is_zero(self) -> bool:
        return not self.terms

    def weighted_degree(self) -> int:
        """Common weighted degree of all terms."""
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no weighted degree")
        degrees = {m.weighted_degree for _, m in self.terms}
        if len(degrees) > 1:
            raise NotHomogeneousError(
                f"polynomial mixes weighted degrees {sorted(degrees)}"
            )
        return degrees.pop()

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.k != other.k:
            raise ValueError("polynomials over different variable counts")
        return Polynomial.from_terms(self.k, list(self.terms) + list(other.terms))

    def __mul__(self, other: Polynomial | Monomial | Fraction | int) -> Polynomial:
        if isinstance(other, Monomial):
            return Polynomial.from_terms(
                self.k, [(c, m * other) for c, m in self.terms]
            )
        if isinstance(other, (int, Fraction)):
            return Polynomial.from_terms(
                self.k, [(c * other, m) for c, m in self.terms]
            )
        if isinstance(other, Polynomial):
            if self.k != other.k:
                raise ValueError("polynomials over different variable counts")
            out = []
            for c1, m1 in self.terms:
                for c2, m2 in other.terms:
                    out.append((c1 * c2, m1 * m2))
            return Polynomial.from_terms(self.k, out)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, m in self.terms:
            if m.weighted_degree == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(str(m))
            else:
                parts.append(f"{c}*{m}")
        return " + ".join(parts)

    @classmethod
    def parse(cls, text: str, k: int) -> Polynomial:
        """Parse ``3*X1^2*X2 + 1/2*X1^4`` style input over k variables.

        Terms are separated by '+'; each term is an optional signed
        rational coefficient and '*'-joined factors ``Xj`` or ``Xj^e``.
        Errors carry the 1-based column of the offending token.
        """
        return _parse_polynomial(text, k)


_TOKEN = re.compile(
    r"\s*(?:(?P<plus>\+)|(?P<star>\*)|(?P<caret>\^)|(?P<slash>/)"
    r"|(?P<var>X)|(?P<int>-?\d+))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = len(text) - len(stripped) + 1
            raise PolyParseError(f"unexpected character {stripped[0]!r}", col)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, k: int):
        self.tokens = _tokenize(text)
        self.k = k
        self.i = 0
        self.end_col = len(text) + 1

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, kind: str, what: str) -> tuple[str, int]:
        if self.peek() != kind:
            raise PolyParseError(f"expected {what}", self.col())
        tok = self.tokens[self.i]
        self.i += 1
        return tok[1], tok[2]

    def col(self) -> int:
        return self.tokens[self.i][2] if self.i < len(self.tokens) else self.end_col

    def parse(self) -> Polynomial:
        terms = [self.term()]
        while self.peek() == "plus":
            self.i += 1
            terms.append(self.term())
        if self.peek() is not None:
            raise PolyParseError("expected '+' between terms", self.col())
        return Polynomial.from_terms(self.k, terms)

    def term(self) -> tuple[Fraction, Monomial]:
        coeff = Fraction(1)
        mono = Monomial.one(self.k)
        if self.peek() == "int":
            coeff = self.rational()
            if self.peek() == "star":
                self.i += 1
                mono = self.factor()
            else:
                return coeff, mono
        else:
            mono = self.factor()
        while self.peek() == "star":
            self.i += 1
            mono = mono * self.factor()
        return coeff, mono

    def rational(self) -> Fraction:
        text, col = self.take("int", "a number")
        num = int(text)
        if self.peek() == "slash":
            self.i += 1
            dtext, dcol = self.take("int", "a denominator")
            den = int(dtext)
            if den <= 0:
                raise PolyParseError("denominator must be positive", dcol)
            return Fraction(num, den)
        return Fraction(num)

    def factor(self) -> Monomial:
        _, col = self.take("var", "a variable like X1")
        itext, icol = self.take("int", "a variable index")
        j = int(itext)
        if not 1 <= j <= self.k:
            raise PolyParseError(f"variable X{j} outside 1..X{self.k}", icol)
        power = 1
        if self.peek() == "caret":
            self.i += 1
            ptext, pcol = self.take("int", "an exponent")
            power = int(ptext)
            if power < 0:
                raise PolyParseError("exponent must be nonnegative", pcol)
        return Monomial.x(self.k, j, power)


def _parse_polynomial(text: str, k: int) -> Polynomial:
    if k < 1:
        raise ValueError("polynomial needs k >= 1 variables")
    parser = _Parser(text, k)
    if not parser.tokens:
        raise PolyParseError("empty polynomial", 1)
    return parser.parse()


def weighted_degree(p: Polynomial) -> int:
    """Common weighted degree of a nonzero homogeneous polynomial."""
    return p.weighted_degree()
