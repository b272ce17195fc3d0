"""Exact arithmetic in the cyclotomic fields Q(zeta_r).

An element is stored as its coefficient vector with respect to the basis
1, zeta, ..., zeta^(phi(r)-1) of Q[x]/Phi_r(x), where Phi_r is the r-th
cyclotomic polynomial.  Phi_r is irreducible over Q, so the quotient is a
field and every nonzero element has an inverse; this is what lets the
root-of-unity sums divide by products of root differences.  Coefficients
are `fractions.Fraction`, kept reduced with positive denominator, so no
operation ever rounds.
"""

from __future__ import annotations

import cmath
import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotRationalError

# The value domain of every invariant before integrality is established.
BigRational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _int_poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _int_poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    # den must be monic and divide num exactly
    num = list(num)
    quot = [0] * (len(num) - len(den) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + len(den) - 1]
        quot[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("cyclotomic division left a remainder")
    return quot


@dataclass(frozen=True)
class CycPolynomial:
    """The r-th cyclotomic polynomial with integer coefficients.

    ``coefficients`` lists the constant term first; the polynomial is
    monic of degree phi(r).
    """

    order: int
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


_PHI_CACHE: dict[int, CycPolynomial] = {}
_PHI_LOCK = threading.Lock()


def cyclotomic_polynomial(r: int) -> CycPolynomial:
    """Return Phi_r, computed by exact integer division.

    Phi_r = (x^r - 1) / prod of Phi_d over proper divisors d of r.  The
    divisors are filled into the cache bottom-up, so only integer
    arithmetic is needed.  Results are cached per order and the cache is
    safe under concurrent lookup and insertion.
    """
    if r < 1:
        raise ValueError(f"cyclotomic order must be positive, got {r}")
    cached = _PHI_CACHE.get(r)
    if cached is not None:
        return cached
    with _PHI_LOCK:
        for d in sorted(n for n in range(1, r + 1) if r % n == 0):
            if d in _PHI_CACHE:
                continue
            lower = [1]
            for m in range(1, d):
                if d % m == 0:
                    lower = _int_poly_mul(lower, list(_PHI_CACHE[m].coefficients))
            x_d_minus_1 = [-1] + [0] * (d - 1) + [1]
            coeffs = _int_poly_exact_div(x_d_minus_1, lower)
            _PHI_CACHE[d] = CycPolynomial(d, tuple(coeffs))
        return _PHI_CACHE[r]


def _reduce_mod_phi(vec: list[Fraction], phi: tuple[int, ...]) -> tuple[Fraction, ...]:
    deg = len(phi) - 1
    for i in range(len(vec) - 1, deg - 1, -1):
        c = vec[i]
        if c:
            vec[i] = _ZERO
            base = i - deg
            for j in range(deg):
                pj = phi[j]
                if pj:
                    vec[base + j] -= c * pj
    out = vec[:deg]
    out.extend([_ZERO] * (deg - len(out)))
    return tuple(out)


@dataclass(frozen=True)
class CycNumber:
    """An element of Q(zeta_r), exact in every operation.

    Values are immutable and safe to share between threads.  Mixing
    elements of different orders raises ``ValueError``: the fields embed
    into one another but this module never converts implicitly.
    """

    order: int
    coeffs: tuple[Fraction, ...]

    @classmethod
    def zero(cls, r: int) -> CycNumber:
        deg = cyclotomic_polynomial(r).degree
        return cls(r, (_ZERO,) * deg)

    @classmethod
    def one(cls, r: int) -> CycNumber:
        return from_rational(r, _ONE)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def _require_same_order(self, other: CycNumber) -> None:
        if self.order != other.order:
            raise ValueError(
                f"incompatible cyclotomic orders {self.order} and {other.order}"
            )

    def __add__(self, other: CycNumber) -> CycNumber:
        if not isinstance(other, CycNumber):
            return NotImplemented
        self._require_same_order(other)
        return CycNumber(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: CycNumber) -> CycNumber:
        if not isinstance(other, CycNumber):
            return NotImplemented
        self._require_same_order(other)
        return CycNumber(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> CycNumber:
        return CycNumber(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other: CycNumber | Fraction | int) -> CycNumber:
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.order, tuple(a * other for a in self.coeffs))
        if not isinstance(other, CycNumber):
            return NotImplemented
        self._require_same_order(other)
        phi = cyclotomic_polynomial(self.order).coefficients
        deg = len(phi) - 1
        conv = [_ZERO] * (2 * deg - 1 if deg > 1 else 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        return CycNumber(self.order, _reduce_mod_phi(conv, phi))

    __rmul__ = __mul__

    def __truediv__(self, other: CycNumber) -> CycNumber:
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self * other.invert()

    def invert(self) -> CycNumber:
        """Multiplicative inverse via the extended Euclidean algorithm.

        Runs Euclid on (Phi_r, self); since Phi_r is irreducible the last
        nonzero remainder is a constant c with u * self = c (mod Phi_r),
        so the inverse is u / c.
        """
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_r)")
        phi = cyclotomic_polynomial(self.order).coefficients
        r0 = [Fraction(c) for c in phi]
        r1 = list(self.coeffs)
        while r1 and not r1[-1]:
            r1.pop()
        u0: list[Fraction] = []
        u1: list[Fraction] = [_ONE]
        while len(r1) > 1:
            q, rem = _frac_poly_divmod(r0, r1)
            u0, u1 = u1, _frac_poly_sub(u0, _frac_poly_mul(q, u1))
            r0, r1 = r1, rem
        if not r1:
            raise ZeroDivisionError("element shares a factor with Phi_r")
        c = r1[0]
        inv = [t / c for t in u1]
        return CycNumber(self.order, _reduce_mod_phi(inv, phi))

    def __pow__(self, n: int) -> CycNumber:
        """Signed power by repeated squaring; 0**0 is defined as 1."""
        if n == 0:
            return CycNumber.one(self.order)
        base = self
        if n < 0:
            base = self.invert()
            n = -n
        acc = CycNumber.one(self.order)
        while n:
            if n & 1:
                acc = acc * base
            base = base * base if n > 1 else base
            n >>= 1
        return acc

    def as_rational(self) -> Fraction:
        """The constant coefficient, provided all others vanish.

        Full root-of-unity sums are fixed by the Galois action and must
        land in Q; a nonzero higher coefficient therefore signals a bug
        in the summation, reported as ``NotRationalError``.
        """
        if any(self.coeffs[1:]):
            raise NotRationalError(
                f"element of Q(zeta_{self.order}) is not rational: {self.coeffs}"
            )
        return self.coeffs[0]

    def embed_numeric(self) -> complex:
        """Evaluate at zeta_r = exp(2*pi*i/r) in machine precision."""
        z = cmath.exp(2j * cmath.pi / self.order)
        total = 0j
        power = 1 + 0j
        for i, c in enumerate(self.coeffs):
            if i:
                power *= z
            if c:
                total += float(c) * power
        return total

    def __str__(self) -> str:
        return f"Cyc({self.order}; {', '.join(str(c) for c in self.coeffs)})"


def _frac_poly_divmod(
    a: list[Fraction], b: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [_ZERO] * max(len(a) - db, 1)
    for i in range(len(rem) - 1 - db, -1, -1):
        c = rem[i + db]
        if c:
            factor = c / lead
            q[i] = factor
            for j, bj in enumerate(b):
                rem[i + j] -= factor * bj
    while rem and not rem[-1]:
        rem.pop()
    return q, rem


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [_ZERO] * (len(b) - len(a))
    for i, bi in enumerate(b):
        out[i] -= bi
    while out and not out[-1]:
        out.pop()
    return out


def make_root(r: int, a: int) -> CycNumber:
    """zeta_r^a as a field element; the exponent is reduced mod r."""
    phi = cyclotomic_polynomial(r)
    a %= r
    vec = [_ZERO] * (a + 1)
    vec[a] = _ONE
    return CycNumber(r, _reduce_mod_phi(vec, phi.coefficients))


def from_rational(r: int, q: Fraction | int) -> CycNumber:
    """Embed a rational number as a constant of Q(zeta_r)."""
    deg = cyclotomic_polynomial(r).degree
    return CycNumber(r, (Fraction(q),) + (_ZERO,) * (deg - 1))
