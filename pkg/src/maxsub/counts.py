"""Counts of maximal subbundles.

m(r, d, k, g) is the number of rank-k subbundles of maximal degree in a
general stable bundle of rank r and degree d on a genus-g curve, defined
when the zero-dimensionality congruence k(r-k)(g-1) = k*d (mod r) holds.
Two independent evaluation paths are provided and checked against each
other: a direct root-of-unity sum, and the reduction through the twisted
Gromov invariant N_{d, e_max}(1).  Closed forms for k = 1 and for the
two admissible genus-2 rank-2 families serve as additional anchors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from ._backend import get_kernel
from .errors import (
    ConditionViolatedError,
    InternalConsistencyError,
    InvalidInputError,
    InvalidRankError,
    NonIntegralExponentError,
    NotApplicableError,
    PathMismatchError,
)
from .exact import cyclotomic_polynomial
from .polynomials import Polynomial
from .twisted import GromovQuery, SInvariants, decompose_degree, s_invariants, twisted_invariant
from .vi import _collect


@dataclass(frozen=True)
class CountQuery:
    r: int
    d: int
    k: int
    g: int

    def __post_init__(self):
        if self.k < 1 or self.k >= self.r:
            raise InvalidRankError(f"need 1 <= k < r, got k={self.k}, r={self.r}")
        if self.g < 2:
            raise InvalidInputError(f"counting requires genus >= 2, got g={self.g}")


@dataclass(frozen=True)
class CountResult:
    """A count together with its provenance.

    ``paths`` records every value that was actually computed (direct,
    reduction, closed_form); they are verified to agree exactly before
    the result is built.
    """

    value: int
    s_report: SInvariants
    paths: dict[str, Fraction]
    warnings: tuple[str, ...] = field(default_factory=tuple)


def zero_dim_condition(r: int, d: int, k: int, g: int) -> bool:
    """True when the space of maximal subbundles is a finite set of points."""
    if k < 1 or k >= r:
        raise InvalidRankError(f"need 1 <= k < r, got k={k}, r={r}")
    if g < 2:
        raise InvalidInputError(f"zero-dimensionality needs genus >= 2, got g={g}")
    return (k * (r - k) * (g - 1) - k * d) % r == 0


def _require_condition(q: CountQuery) -> None:
    if not zero_dim_condition(q.r, q.d, q.k, q.g):
        base = q.k * (q.r - q.k) * (q.g - 1)
        raise ConditionViolatedError(
            f"k(r-k)(g-1) = {base} is {base % q.r} (mod {q.r}) but "
            f"k*d = {q.k * q.d} is {(q.k * q.d) % q.r} (mod {q.r}); "
            f"epsilon = {(q.k * q.d - base) % q.r} instead of 0"
        )


def count_direct(
    q: CountQuery, *, backend: str | None = None, threads: int | None = None
) -> Fraction:
    """m(r,d,k,g) summed directly over root subsets.

    The summand is (prod rho)^(b-g+1) over the ordered-pair Vandermonde
    raised to g-1, with prefactor r^(k(g-1)) (-1)^((k-1)(bk-(g-1)k^2)/r);
    the congruence guarantees the sign exponent is an integer.
    """
    _require_condition(q)
    r, k, g = q.r, q.k, q.g
    _, b = decompose_degree(q.d, r)
    sign_num = (k - 1) * (b * k - (g - 1) * k * k)
    if sign_num % r:
        raise NonIntegralExponentError(
            f"(k-1)(bk-(g-1)k^2) = {sign_num} is not divisible by r = {r}"
        )
    sign = -1 if (sign_num // r) % 2 else 1
    kern = get_kernel(backend)
    phi = list(cyclotomic_polynomial(r).coefficients)
    subsets = list(combinations(range(r), k))
    nums, den = kern.vi_direct_sum(r, phi, k, g - 1, b - g + 1, subsets)
    total = _collect(r, [(1, (nums, den))])
    return sign * total * Fraction(r) ** (k * (g - 1))


def count_via_reduction(
    q: CountQuery, *, backend: str | None = None, threads: int | None = None
) -> Fraction:
    """m(r,d,k,g) as the twisted invariant N_{d, e_max}(1)."""
    _require_condition(q)
    si = s_invariants(q.r, q.k, q.d, q.g)
    gq = GromovQuery(q.r, q.k, q.g, q.d, si.e_max, Polynomial.one(q.k))
    return twisted_invariant(gq, backend=backend, threads=threads)


def closed_form_rank1(r: int, g: int) -> int:
    """m(r, d, 1, g) = r^g, for every admissible d."""
    if r < 2 or g < 2:
        raise InvalidInputError(f"need r >= 2 and g >= 2, got r={r}, g={g}")
    return r**g


def closed_form_k2_g2(r: int, b: int) -> int:
    """The two genus-2 rank-2 families: b = 2 and r = 2b - 4."""
    if r < 3:
        raise InvalidInputError(f"rank 2 counts need r >= 3, got r={r}")
    if b == 2:
        value = Fraction(r**3 * (r**2 - 1), 24)
    elif r == 2 * b - 4:
        value = Fraction(r**3 * (r**2 + 2), 48)
    else:
        raise NotApplicableError(
            f"no closed form for r={r}, b={b}: need b = 2 or r = 2b - 4"
        )
    assert value.denominator == 1
    return int(value)


def count(
    q: CountQuery,
    *,
    paths: str = "both",
    backend: str | None = None,
    threads: int | None = None,
) -> CountResult:
    """Count maximal subbundles, cross-checking every available path.

    ``paths`` selects "both" (default), "direct" or "reduction"; closed
    forms are attached automatically where they apply.  Any disagreement
    raises ``PathMismatchError``; a non-integer total raises
    ``InternalConsistencyError``.  A count below 1 is reported in the
    result's warnings, not raised.
    """
    if paths not in {"both", "direct", "reduction"}:
        raise ValueError(f"paths must be both, direct or reduction, got {paths!r}")
    _require_condition(q)
    si = s_invariants(q.r, q.k, q.d, q.g)
    computed: dict[str, Fraction] = {}
    if paths in {"both", "direct"}:
        computed["direct"] = count_direct(q, backend=backend, threads=threads)
    if paths in {"both", "reduction"}:
        computed["reduction"] = count_via_reduction(q, backend=backend, threads=threads)
    _, b = decompose_degree(q.d, q.r)
    if q.k == 1:
        computed["closed_form"] = Fraction(closed_form_rank1(q.r, q.g))
    elif q.k == 2 and q.g == 2:
        try:
            computed["closed_form"] = Fraction(closed_form_k2_g2(q.r, b))
        except NotApplicableError:
            pass
    values = set(computed.values())
    if len(values) > 1:
        detail = ", ".join(f"{name}={val}" for name, val in sorted(computed.items()))
        raise PathMismatchError(f"evaluation paths disagree for {q}: {detail}")
    value = values.pop()
    if value.denominator != 1:
        raise InternalConsistencyError(f"count for {q} is not an integer: {value}")
    notes = ()
    if value < 1:
        notes = (
            f"count m = {value} is below 1; a general stable bundle is expected "
            "to admit at least one maximal subbundle",
        )
    return CountResult(int(value), si, computed, notes)
