"""Vafa-Intriligator sums: Grassmannian Gromov invariants as exact sums
over tuples of distinct r-th roots of unity.

For a homogeneous class polynomial P of weighted degree
-e*r + k*(r-k)*(1-g) the invariant evaluated here is

    N(P) = r^(k(g-1)) * (-1)^(e(k-1)) / k!
           * sum over k-tuples of distinct r-th roots (rho_1..rho_k) of
             P(sigma_1(rho), ..., sigma_k(rho))
             / (prod_i rho_i * prod_{i != j} (rho_i - rho_j))^(g-1)

with the pair product over ordered pairs.  The summand is symmetric in
the roots, so the implementation enumerates the C(r,k) subsets once and
cancels the k! against the prefactor.  The sign normalization above is
the one that reproduces classical Schubert numbers at g = 0, e = 0 and
the closed-form maximal-subbundle counts at genus 2; see the acceptance
suite for both anchors.

Everything is computed in Q(zeta_r), so results are exact; a floating
point evaluation path (`vi_sum_numeric`) provides an independent
cross-check.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ._backend import get_kernel
from .errors import DegreeMismatchError, InvalidRankError, NotRationalError
from .exact import CycNumber, cyclotomic_polynomial, make_root
from .polynomials import Monomial, Polynomial


@dataclass(frozen=True)
class RootSubset:
    """k distinct r-th roots of unity, identified by increasing exponents."""

    r: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) > self.r:
            raise ValueError("more roots than the order allows")
        if any(not 0 <= a < self.r for a in self.exponents):
            raise ValueError("exponents must lie in [0, r)")
        if any(a >= b for a, b in zip(self.exponents, self.exponents[1:])):
            raise ValueError("exponents must be strictly increasing")

    @property
    def k(self) -> int:
        return len(self.exponents)

    def roots(self) -> list[CycNumber]:
        return [make_root(self.r, a) for a in self.exponents]


def elementary_symmetric(roots: Sequence[CycNumber], j: int) -> CycNumber:
    """sigma_j of the given roots via the incremental product of (1 + rho*t)."""
    k = len(roots)
    if j < 0 or j > k:
        raise IndexError(f"symmetric function index {j} outside 0..{k}")
    r = roots[0].order if roots else 1
    sig = [CycNumber.one(r)] + [CycNumber.zero(r) for _ in range(k)]
    for i, rho in enumerate(roots):
        for idx in range(i + 1, 0, -1):
            sig[idx] = sig[idx] + sig[idx - 1] * rho
    return sig[j]


def vi_summand(s: RootSubset, m: Monomial, g: int) -> CycNumber:
    """One term of the root-of-unity sum, straight from the definition.

    This is the readable reference path; `vi_sum` goes through the
    selected kernel and is tied to this function by the test suite.
    """
    roots = s.roots()
    k = s.k
    if m.k != k:
        raise ValueError("monomial width does not match the subset size")
    num = CycNumber.one(s.r)
    for j, mj in enumerate(m.exponents, start=1):
        if mj:
            num = num * elementary_symmetric(roots, j) ** mj
    base = CycNumber.one(s.r)
    for rho in roots:
        base = base * rho
    for i in range(k):
        for j in range(k):
            if i != j:
                base = base * (roots[i] - roots[j])
    return num * base ** (-(g - 1))


def _required_degree(r: int, k: int, g: int, e: int) -> int:
    return -e * r + k * (r - k) * (1 - g)


def _sign(e: int, k: int) -> int:
    return -1 if (e * (k - 1)) % 2 else 1


def _check_query(r: int, k: int, g: int, e: int, p: Polynomial) -> None:
    if k < 1 or k >= r:
        raise InvalidRankError(f"need 1 <= k < r, got k={k}, r={r}")
    if p.k != k:
        raise ValueError(f"polynomial has {p.k} variables, query has rank {k}")
    got = p.weighted_degree()
    need = _required_degree(r, k, g, e)
    if got != need:
        raise DegreeMismatchError(got, need, context=f"r={r}, k={k}, g={g}, e={e}")


def _rotation_orbit_groups(r: int, k: int) -> list[tuple[int, list[tuple[int, ...]]]]:
    """Subsets grouped by orbit size under exponent rotation a -> a+1 (mod r).

    The summand is invariant under rotating all chosen exponents, so each
    orbit contributes its size times the representative's value.
    """
    seen: set[tuple[int, ...]] = set()
    by_size: dict[int, list[tuple[int, ...]]] = {}
    for comb in combinations(range(r), k):
        if comb in seen:
            continue
        orbit = {tuple(sorted((a + s) % r for a in comb)) for s in range(r)}
        seen.update(orbit)
        by_size.setdefault(len(orbit), []).append(comb)
    return sorted(by_size.items())


def _run_kernel_tasks(tasks, run_one, threads):
    if threads and threads > 1 and len(tasks) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(run_one, tasks))
    return [run_one(t) for t in tasks]


def _chunked(seq: list, n: int) -> list[list]:
    if n <= 1 or len(seq) <= 1:
        return [seq]
    size = (len(seq) + n - 1) // n
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def _collect(r: int, weighted_results) -> Fraction:
    """Combine weighted kernel outputs and certify the total is rational."""
    deg = cyclotomic_polynomial(r).degree
    total = [Fraction(0)] * deg
    for weight, (nums, den) in weighted_results:
        for i in range(deg):
            if nums[i]:
                total[i] += weight * Fraction(nums[i], den)
    if any(total[1:]):
        raise NotRationalError(
            f"root-of-unity sum over Q(zeta_{r}) left nonrational residue {total}"
        )
    return total[0]


def vi_sum(
    r: int,
    k: int,
    g: int,
    e: int,
    p: Polynomial,
    *,
    backend: str | None = None,
    threads: int | None = None,
    use_orbits: bool = False,
) -> Fraction:
    """Exact Gromov invariant N(P) for Gr(k, r) at genus g and degree -e.

    Genus 0 and 1 are accepted (the formula extrapolates; g = 0 is the
    classical Schubert regime used for cross-checks).  `use_orbits` prunes
    the subset enumeration by rotation symmetry and is bit-identical to
    the plain path.  `threads` splits the enumeration; exact arithmetic
    makes the result independent of chunking.
    """
    _check_query(r, k, g, e, p)
    kern = get_kernel(backend)
    phi = list(cyclotomic_polynomial(r).coefficients)
    terms = [
        (c.numerator, c.denominator, m.exponents) for c, m in p.terms
    ]
    if not terms:
        return Fraction(0)
    if use_orbits:
        groups = _rotation_orbit_groups(r, k)
    else:
        groups = [(1, list(combinations(range(r), k)))]
    tasks = []
    nthreads = threads or 1
    for weight, subsets in groups:
        for chunk in _chunked(subsets, nthreads):
            tasks.append((weight, chunk))
    results = _run_kernel_tasks(
        tasks,
        lambda task: (task[0], kern.vi_poly_sum(r, phi, k, g - 1, terms, task[1])),
        nthreads,
    )
    total = _collect(r, results)
    return _sign(e, k) * total * Fraction(r) ** (k * (g - 1))


class _CompensatedSum:
    """Neumaier compensated accumulation for one float."""

    __slots__ = ("total", "comp")

    def __init__(self):
        self.total = 0.0
        self.comp = 0.0

    def add(self, x: float) -> None:
        t = self.total + x
        if abs(self.total) >= abs(x):
            self.comp += (self.total - t) + x
        else:
            self.comp += (x - t) + self.total
        self.total = t

    def value(self) -> float:
        return self.total + self.comp


def vi_sum_numeric(r: int, k: int, g: int, e: int, p: Polynomial) -> complex:
    """Same sum in machine-precision complex arithmetic.

    Kept independent of the exact path so it can serve as an oracle; the
    imaginary part of the result is a diagnostic and should be near zero.
    """
    _check_query(r, k, g, e, p)
    if not p.terms:
        return 0j
    roots = [cmath.exp(2j * cmath.pi * a / r) for a in range(r)]
    terms = [(float(c), m.exponents) for c, m in p.terms]
    acc_re = _CompensatedSum()
    acc_im = _CompensatedSum()
    for subset in combinations(range(r), k):
        rho = [roots[a] for a in subset]
        sig = [1 + 0j] + [0j] * k
        for i, z in enumerate(rho):
            for idx in range(i + 1, 0, -1):
                sig[idx] = sig[idx] + sig[idx - 1] * z
        num = 0j
        for coeff, exps in terms:
            t = complex(coeff)
            for j, mj in enumerate(exps, start=1):
                if mj:
                    t *= sig[j] ** mj
            num += t
        base = 1 + 0j
        for z in rho:
            base *= z
        for i in range(k):
            for j in range(k):
                if i != j:
                    base *= rho[i] - rho[j]
        summand = num * base ** (-(g - 1))
        acc_re.add(summand.real)
        acc_im.add(summand.imag)
    prefactor = _sign(e, k) * float(r) ** (k * (g - 1))
    return complex(prefactor * acc_re.value(), prefactor * acc_im.value())
