"""The auxiliary sums B(k, m) = sum over z^r = 1, z != 1 of z^m (1-z)^(-k).

Two engines are provided.  ``b_direct`` evaluates the sum in Q(zeta_r).
``b_recursive`` never touches cyclotomic numbers: starting from the root
sums B(0, m) (r-1 for m = 0 mod r, otherwise -1) it uses

    B(k, m) = B(k, 0) - sum_{i < m} B(k-1, i)
    B(k, 0) = (1/r) * sum_{i=0}^{r-2} (r - i - 1) B(k-1, i)

which follow from the stepping identity B(k, m) = B(k, m-1) - B(k-1, m-1)
(write z = 1 - (1 - z)) and the vanishing row sums.  The two engines are
tested to agree on the full lattice.

These sums give the rank-2 counts in closed form; ``m_rank2`` evaluates
that specialization.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConditionViolatedError, InvalidInputError
from .exact import CycNumber, make_root


@dataclass(frozen=True)
class BQuery:
    """B(k, m) at order r; m is stored reduced to [0, r)."""

    r: int
    k: int
    m: int

    def __post_init__(self):
        if self.r < 2:
            raise InvalidInputError(f"need r >= 2, got r={self.r}")
        if self.k < 0:
            raise InvalidInputError(f"need k >= 0, got k={self.k}")
        object.__setattr__(self, "m", self.m % self.r)


def b_direct(q: BQuery) -> Fraction:
    """Evaluate the defining sum exactly over the r-1 nontrivial roots."""
    r = q.r
    one = CycNumber.one(r)
    total = CycNumber.zero(r)
    for a in range(1, r):
        z_m = make_root(r, a * q.m)
        total = total + z_m * (one - make_root(r, a)) ** (-q.k)
    return total.as_rational()


_ROWS_CACHE: dict[int, list[list[Fraction]]] = {}
_ROWS_LOCK = threading.Lock()


def _rows(r: int, k: int) -> list[list[Fraction]]:
    with _ROWS_LOCK:
        rows = _ROWS_CACHE.setdefault(r, [])
        if not rows:
            rows.append([Fraction(r - 1)] + [Fraction(-1)] * (r - 1))
        while len(rows) <= k:
            prev = rows[-1]
            first = Fraction(
                sum((r - i - 1) * prev[i] for i in range(r - 1)), r
            )
            row = [first]
            running = Fraction(0)
            for m in range(1, r):
                running += prev[m - 1]
                row.append(first - running)
            rows.append(row)
        return rows


def b_recursive(q: BQuery) -> Fraction:
    """B(k, m) from the recursion system, no cyclotomic arithmetic."""
    return _rows(q.r, q.k)[q.k][q.m]


def m_rank2(r: int, b: int, g: int) -> Fraction:
    """The rank-2 count m(r, d, 2, g) for d = a*r - b, in B-sum form.

    Requires the zero-dimensionality congruence 2b - 4(g-1) = 0 (mod r);
    the value is r^(2(g-1)+1) (-1)^(g-1+(2b-4(g-1))/r) / 2 times
    B(2(g-1), b-g+1).
    """
    if g < 2:
        raise InvalidInputError(f"need genus >= 2, got g={g}")
    if r < 3:
        raise InvalidInputError(f"rank 2 needs r >= 3, got r={r}")
    cond = 2 * b - 4 * (g - 1)
    if cond % r:
        raise ConditionViolatedError(
            f"2b - 4(g-1) = {cond} is {cond % r} (mod {r}), not 0"
        )
    t = cond // r
    sign = -1 if (g - 1 + t) % 2 else 1
    scale = Fraction(r) ** (2 * (g - 1) + 1) / 2
    return sign * scale * b_direct(BQuery(r, 2 * (g - 1), b - g + 1))
