"""Hot summation loops, pure-Python edition.

Fallback twin of the compiled kernel ``maxsub._cykernel``; both expose the
same two entry points and must return bit-identical results.  Elements of
Q(zeta_r) are represented here as an integer coefficient vector modulo
Phi_r plus one shared positive denominator, so the inner loops touch only
machine/big integers.  The single division per subset (the Vandermonde
power) is done with a fraction-free Euclidean algorithm that produces an
integer cofactor u and an integer constant c with u * v = c (mod Phi_r).
"""

from __future__ import annotations

from math import gcd

Vec = list  # integer coefficient vectors, constant term first


def _content(p: Vec) -> int:
    g = 0
    for c in p:
        if c:
            g = gcd(g, c)
            if g == 1:
                return 1
    return g


def _strip(p: Vec) -> Vec:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_mul(a: Vec, b: Vec) -> Vec:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i in range(len(a)):
        ai = a[i]
        if ai:
            for j in range(len(b)):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out


def _reduce(vec: Vec, phi: Vec, deg: int) -> Vec:
    # phi is monic with integer coefficients, so reduction stays integral
    for i in range(len(vec) - 1, deg - 1, -1):
        c = vec[i]
        if c:
            vec[i] = 0
            base = i - deg
            for j in range(deg):
                pj = phi[j]
                if pj:
                    vec[base + j] -= c * pj
    del vec[deg:]
    while len(vec) < deg:
        vec.append(0)
    return vec


def _mul_mod(a: Vec, b: Vec, phi: Vec, deg: int) -> Vec:
    return _reduce(_poly_mul(a, b), phi, deg)


def _pow_mod(a: Vec, n: int, phi: Vec, deg: int) -> Vec:
    acc = [1] + [0] * (deg - 1)
    base = a
    while n:
        if n & 1:
            acc = _mul_mod(acc, base, phi, deg)
        n >>= 1
        if n:
            base = _mul_mod(base, base, phi, deg)
    return acc


def _pseudo_divmod(a: Vec, b: Vec) -> tuple[Vec, Vec, int]:
    """Return (q, rem, alpha) with alpha * a = q * b + rem, all integral."""
    da, db = len(a) - 1, len(b) - 1
    lc = b[-1]
    q = [0] * (da - db + 1)
    rem = list(a)
    alpha = 1
    for i in range(da - db, -1, -1):
        c = rem[i + db]
        if c:
            alpha *= lc
            for idx in range(len(q)):
                q[idx] *= lc
            q[i] += c
            for idx in range(len(rem)):
                rem[idx] *= lc
            for j in range(db + 1):
                rem[i + j] -= c * b[j]
    return q, _strip(rem), alpha


def _invert_vec(v: Vec, phi: Vec) -> tuple[Vec, int]:
    """Inverse of an integer-vector element: u, c with u * v = c (mod Phi_r).

    Fraction-free Euclid on (Phi_r, v), carrying only the cofactor of v.
    The invariant at each step is r_i = u_i * v (mod Phi_r); remainders
    and cofactors are divided by their common content to bound growth.
    """
    deg = len(phi) - 1
    r1 = _strip(list(v))
    if not r1:
        raise ZeroDivisionError("inverse of zero in Q(zeta_r)")
    if len(r1) == 1:
        u, c = [1], r1[0]
    else:
        r0 = list(phi)
        u0: Vec = []
        u1: Vec = [1]
        while len(r1) > 1:
            q, rem, alpha = _pseudo_divmod(r0, r1)
            u_rem = [alpha * x for x in u0]
            qu = _poly_mul(q, u1)
            if len(u_rem) < len(qu):
                u_rem.extend([0] * (len(qu) - len(u_rem)))
            for i in range(len(qu)):
                u_rem[i] -= qu[i]
            _strip(u_rem)
            if not rem:
                raise ZeroDivisionError("element shares a factor with Phi_r")
            g = gcd(_content(rem), _content(u_rem))
            if g > 1:
                rem = [x // g for x in rem]
                u_rem = [x // g for x in u_rem]
            r0, u0 = r1, u1
            r1, u1 = rem, u_rem
        u, c = _reduce(list(u1), phi, deg), r1[0]
    if c < 0:
        c = -c
        u = [-x for x in u]
    g = gcd(_content(u), c)
    if g > 1:
        c //= g
        u = [x // g for x in u]
    u.extend([0] * (deg - len(u)))
    return u[:deg], c


def _roots_table(r: int, phi: Vec, deg: int) -> list[Vec]:
    table = []
    for a in range(r):
        vec = [0] * (a + 1)
        vec[a] = 1
        table.append(_reduce(vec, phi, deg))
    return table


def _sigmas(rho: list[Vec], phi: Vec, deg: int) -> list[Vec]:
    # Newton triangle: incrementally multiply out prod_i (1 + rho_i t)
    k = len(rho)
    sig: list[Vec] = [[1] + [0] * (deg - 1)] + [[0] * deg for _ in range(k)]
    for i in range(k):
        v = rho[i]
        for j in range(i + 1, 0, -1):
            term = _mul_mod(sig[j - 1], v, phi, deg)
            prev = sig[j]
            sig[j] = [prev[t] + term[t] for t in range(deg)]
    return sig


def _acc_add(acc: Vec, acc_den: int, s: Vec, s_den: int) -> tuple[Vec, int]:
    g = gcd(acc_den, s_den)
    m_acc = s_den // g
    m_s = acc_den // g
    return (
        [a * m_acc + b * m_s for a, b in zip(acc, s)],
        acc_den * m_acc,
    )


def _normalize(num: Vec, den: int) -> tuple[Vec, int]:
    g = gcd(_content(num), den)
    if g > 1:
        num = [x // g for x in num]
        den //= g
    return num, den


def _vandermonde_sq(rho: list[Vec], k: int, phi: Vec, deg: int) -> Vec:
    """prod over i != j of (rho_i - rho_j), taken over ordered pairs.

    Computed as (-1)^(k(k-1)/2) times the square of the i < j product.
    """
    v = [1] + [0] * (deg - 1)
    for i in range(k):
        for j in range(i + 1, k):
            diff = [rho[i][t] - rho[j][t] for t in range(deg)]
            v = _mul_mod(v, diff, phi, deg)
    v = _mul_mod(v, v, phi, deg)
    if (k * (k - 1) // 2) & 1:
        v = [-x for x in v]
    return v


def _apply_denominator(
    num: Vec, num_den: int, base: Vec, gm1: int, phi: Vec, deg: int
) -> tuple[Vec, int]:
    # multiply num by base^(-gm1); for gm1 <= 0 no inversion is needed
    if gm1 > 0:
        b = _pow_mod(base, gm1, phi, deg)
        u, c = _invert_vec(b, phi)
        return _mul_mod(num, u, phi, deg), num_den * c
    if gm1 < 0:
        return _mul_mod(num, _pow_mod(base, -gm1, phi, deg), phi, deg), num_den
    return num, num_den


def vi_poly_sum(r, phi, k, gm1, terms, subsets):
    """Sum of P(sigma(rho)) * (prod rho * Vandermonde)^(-gm1) over subsets.

    ``terms`` lists (coeff_numerator, coeff_denominator, exponents) for the
    class polynomial P; ``subsets`` yields increasing exponent tuples that
    pick k distinct r-th roots of unity.  Returns (coeff vector, positive
    denominator) of the exact total.
    """
    phi = list(phi)
    deg = len(phi) - 1
    roots = _roots_table(r, phi, deg)
    one = [1] + [0] * (deg - 1)
    acc = [0] * deg
    acc_den = 1
    for subset in subsets:
        rho = [roots[a] for a in subset]
        sig = _sigmas(rho, phi, deg)
        num = [0] * deg
        num_den = 1
        for cn, cd, exps in terms:
            t = one
            for j in range(k):
                mj = exps[j]
                if mj:
                    t = _mul_mod(t, _pow_mod(sig[j + 1], mj, phi, deg), phi, deg)
            num, num_den = _acc_add(num, num_den, [x * cn for x in t], cd)
        base = _mul_mod(
            roots[sum(subset) % r], _vandermonde_sq(rho, k, phi, deg), phi, deg
        )
        s, s_den = _apply_denominator(num, num_den, base, gm1, phi, deg)
        s, s_den = _normalize(s, s_den)
        acc, acc_den = _acc_add(acc, acc_den, s, s_den)
    return _normalize(acc, acc_den)


def vi_direct_sum(r, phi, k, gm1, t, subsets):
    """Sum of (prod rho)^t * Vandermonde^(-gm1) over subsets.

    The numerator (prod rho)^t is itself an r-th root of unity, looked up
    directly from the exponent sum, so negative t costs nothing.
    """
    phi = list(phi)
    deg = len(phi) - 1
    roots = _roots_table(r, phi, deg)
    acc = [0] * deg
    acc_den = 1
    for subset in subsets:
        rho = [roots[a] for a in subset]
        num = roots[(t * sum(subset)) % r]
        base = _vandermonde_sq(rho, k, phi, deg)
        s, s_den = _apply_denominator(num, 1, base, gm1, phi, deg)
        s, s_den = _normalize(s, s_den)
        acc, acc_den = _acc_add(acc, acc_den, s, s_den)
    return _normalize(acc, acc_den)
