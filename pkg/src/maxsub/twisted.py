"""Degree bookkeeping for twisted Gromov invariants.

A twisted invariant is attached to a rank-r degree-d bundle on a genus-g
curve together with a subsheaf rank k, a subsheaf degree e and a class
polynomial P.  Writing d = a*r - b with 0 <= b < r, every such invariant
reduces to a Grassmannian one:

    N_{d,e}(P) = N_{0, e - a*k}(X_k^b * P)

and the right-hand side is what `maxsub.vi` evaluates.  This module owns
the s-invariant arithmetic, the degree decomposition, the tensor and
recursion shifts, and the reduction itself.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegreeMismatchError,
    GeometricRangeWarning,
    InternalConsistencyError,
    InvalidInputError,
    InvalidRankError,
)
from .polynomials import Monomial, Polynomial
from .vi import vi_sum


@dataclass(frozen=True)
class SInvariants:
    """s-invariant data of a general stable bundle.

    s_min = k(r-k)(g-1) + epsilon with epsilon in [0, r) fixed by the
    congruence s_min = k*d (mod r), and e_max = (d*k - s_min) / r is the
    degree of a maximal rank-k subbundle.
    """

    r: int
    k: int
    d: int
    g: int
    s_min: int
    epsilon: int
    e_max: int


def s_invariants(r: int, k: int, d: int, g: int) -> SInvariants:
    if k < 1 or k >= r:
        raise InvalidRankError(f"need 1 <= k < r, got k={k}, r={r}")
    if g < 2:
        raise InvalidInputError(f"s-invariants require genus >= 2, got g={g}")
    base = k * (r - k) * (g - 1)
    epsilon = (k * d - base) % r
    s_min = base + epsilon
    assert (d * k - s_min) % r == 0
    return SInvariants(r, k, d, g, s_min, epsilon, (d * k - s_min) // r)


def decompose_degree(d: int, r: int) -> tuple[int, int]:
    """The unique (a, b) with d = a*r - b and 0 <= b < r."""
    if r < 2:
        raise InvalidInputError(f"need r >= 2, got r={r}")
    b = (-d) % r
    return (d + b) // r, b


@dataclass(frozen=True)
class GromovQuery:
    """One twisted invariant N_{d,e}(P) for rank r, subsheaf rank k, genus g."""

    r: int
    k: int
    g: int
    d: int
    e: int
    p: Polynomial

    def __post_init__(self):
        if self.k < 1 or self.k >= self.r:
            raise InvalidRankError(f"need 1 <= k < r, got k={self.k}, r={self.r}")
        if self.g < 0:
            raise InvalidInputError(f"genus must be nonnegative, got g={self.g}")
        if self.p.k != self.k:
            raise ValueError(
                f"polynomial has {self.p.k} variables, query has rank {self.k}"
            )

    @property
    def a(self) -> int:
        return decompose_degree(self.d, self.r)[0]

    @property
    def b(self) -> int:
        return decompose_degree(self.d, self.r)[1]

    @property
    def s_e(self) -> int:
        return self.d * self.k - self.r * self.e

    def required_degree(self) -> int:
        return self.s_e + self.k * (self.r - self.k) * (1 - self.g)

    def check_degree(self) -> None:
        got = self.p.weighted_degree()
        need = self.required_degree()
        if got != need:
            raise DegreeMismatchError(
                got,
                need,
                context=f"r={self.r}, k={self.k}, g={self.g}, d={self.d}, e={self.e}",
            )


def reduce_to_grassmannian(q: GromovQuery) -> tuple[int, Polynomial]:
    """Rewrite N_{d,e}(P) as the Grassmannian invariant N_{0,e'}(X_k^b P)."""
    q.check_degree()
    a, b = decompose_degree(q.d, q.r)
    e2 = q.e - a * q.k
    p2 = q.p * Monomial.x(q.k, q.k, b) if b else q.p
    need = -e2 * q.r + q.k * (q.r - q.k) * (1 - q.g)
    if p2.weighted_degree() != need:
        raise InternalConsistencyError(
            "reduction broke the degree condition: "
            f"{p2.weighted_degree()} != {need}"
        )
    return e2, p2


def tensor_shift(q: GromovQuery, d1: int) -> GromovQuery:
    """Twist by a line bundle of degree d1: d -> d + r*d1, e -> e + k*d1.

    s_e and the invariant itself are unchanged.
    """
    return GromovQuery(q.r, q.k, q.g, q.d + q.r * d1, q.e + q.k * d1, q.p)


def recursion_shift(e: int, p: Polynomial, r: int, k: int) -> tuple[int, Polynomial]:
    """The consistency shift (e, P) -> (e - k, X_k^r * P) for vi_sum."""
    return e - k, p * Monomial.x(k, k, r)


def query_warnings(q: GromovQuery) -> list[str]:
    """Human-readable notes when a query leaves the geometric regime."""
    notes = []
    if q.g < 2:
        notes.append(
            f"genus g={q.g} is below 2: the value is a formal extrapolation"
        )
    else:
        si = s_invariants(q.r, q.k, q.d, q.g)
        if q.e > si.e_max:
            notes.append(
                f"e={q.e} exceeds e_max={si.e_max}: no subsheaf of this degree "
                "exists for a general stable bundle, the value is formal"
            )
    return notes


def twisted_invariant(
    q: GromovQuery,
    *,
    backend: str | None = None,
    threads: int | None = None,
) -> Fraction:
    """Exact value of N_{d,e}(P), via reduction to the Grassmannian.

    Queries outside the geometric regime (g < 2, or e above e_max) still
    evaluate but emit a ``GeometricRangeWarning``.
    """
    q.check_degree()
    for note in query_warnings(q):
        warnings.warn(note, GeometricRangeWarning, stacklevel=2)
    e2, p2 = reduce_to_grassmannian(q)
    return vi_sum(q.r, q.k, q.g, e2, p2, backend=backend, threads=threads)
