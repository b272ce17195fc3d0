"""Classical Schubert calculus on Gr(k, r) via the vertical-strip Pieri rule.

This is the independent oracle for the root-of-unity sums at genus 0 and
degree 0.  Schubert classes are indexed by partitions inside the
k x (r-k) box; the variable X_j corresponds to c_j of the dual
tautological subbundle, i.e. to the class of the column partition
(1,...,1) with j parts, and multiplying by it adds vertical strips of
size j (at most one box per row).  The intersection number of a product
of such classes is the coefficient of the full box.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DegreeMismatchError


@dataclass(frozen=True)
class Partition:
    """A partition drawn in a box with ``rows`` rows and ``cols`` columns."""

    parts: tuple[int, ...]
    rows: int
    cols: int

    def __post_init__(self):
        if any(p < 0 for p in self.parts):
            raise ValueError("parts must be nonnegative")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")
        trimmed = tuple(p for p in self.parts if p)
        if trimmed != self.parts:
            object.__setattr__(self, "parts", trimmed)
        if len(self.parts) > self.rows:
            raise ValueError(f"more than {self.rows} rows")
        if self.parts and self.parts[0] > self.cols:
            raise ValueError(f"part exceeds {self.cols} columns")

    @property
    def size(self) -> int:
        return sum(self.parts)


def pieri_vertical(lam: Partition, j: int) -> list[Partition]:
    """All ways to add a vertical strip of j boxes to lam inside its box."""
    if j < 0 or j > lam.rows:
        raise IndexError(f"strip size {j} outside 0..{lam.rows}")
    padded = list(lam.parts) + [0] * (lam.rows - len(lam.parts))
    out = []
    for grow in combinations(range(lam.rows), j):
        mu = list(padded)
        for i in grow:
            mu[i] += 1
        if mu[0] > lam.cols:
            continue
        if all(mu[i] >= mu[i + 1] for i in range(lam.rows - 1)):
            out.append(Partition(tuple(mu), lam.rows, lam.cols))
    return out


def classical_intersection(r: int, k: int, weights: Sequence[int] | Iterable[int]) -> int:
    """Intersection number of prod_i c_{w_i}(S*) on Gr(k, r).

    The weights must fill the dimension k(r-k) exactly; the answer is the
    multiplicity of the point class after iterated Pieri multiplication.
    """
    weights = list(weights)
    for w in weights:
        if w < 1 or w > k:
            raise IndexError(f"weight {w} outside 1..{k}")
    total = sum(weights)
    if total != k * (r - k):
        raise DegreeMismatchError(total, k * (r - k), context=f"Gr({k},{r})")
    state: dict[tuple[int, ...], int] = {(): 1}
    for w in weights:
        nxt: dict[tuple[int, ...], int] = {}
        for parts, mult in state.items():
            lam = Partition(parts, k, r - k)
            for mu in pieri_vertical(lam, w):
                nxt[mu.parts] = nxt.get(mu.parts, 0) + mult
        state = nxt
    return state.get((r - k,) * k, 0)
