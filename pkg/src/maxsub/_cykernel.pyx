# cython: language_level=3, boundscheck=False, wraparound=False
"""Hot summation loops, compiled edition.

Twin of maxsub._pykernel with the same contract and bit-identical output.
Coefficients are Python integers (they must stay arbitrary precision);
the speedup comes from typed index loops and from keeping rational
bookkeeping down to one denominator per element.
"""

from math import gcd


cdef _content(list p):
    cdef Py_ssize_t i
    g = 0
    for i in range(len(p)):
        c = p[i]
        if c:
            g = gcd(g, c)
            if g == 1:
                return 1
    return g


cdef list _strip(list p):
    while p and not p[len(p) - 1]:
        del p[len(p) - 1]
    return p


cdef list _poly_mul(list a, list b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return out


cdef list _red(list vec, list phi, Py_ssize_t deg):
    cdef Py_ssize_t i, j, base
    for i in range(len(vec) - 1, deg - 1, -1):
        c = vec[i]
        if c:
            vec[i] = 0
            base = i - deg
            for j in range(deg):
                pj = phi[j]
                if pj:
                    vec[base + j] = vec[base + j] - c * pj
    del vec[deg:]
    while len(vec) < deg:
        vec.append(0)
    return vec


cdef list _mul_mod(list a, list b, list phi, Py_ssize_t deg):
    return _red(_poly_mul(a, b), phi, deg)


cdef list _pow_mod(list a, long long n, list phi, Py_ssize_t deg):
    cdef list acc = [1] + [0] * (deg - 1)
    cdef list base = a
    while n:
        if n & 1:
            acc = _mul_mod(acc, base, phi, deg)
        n >>= 1
        if n:
            base = _mul_mod(base, base, phi, deg)
    return acc


cdef tuple _pseudo_divmod(list a, list b):
    cdef Py_ssize_t da = len(a) - 1, db = len(b) - 1, i, j, idx
    lc = b[db]
    cdef list q = [0] * (da - db + 1)
    cdef list rem = list(a)
    alpha = 1
    for i in range(da - db, -1, -1):
        c = rem[i + db]
        if c:
            alpha = alpha * lc
            for idx in range(len(q)):
                q[idx] = q[idx] * lc
            q[i] = q[i] + c
            for idx in range(len(rem)):
                rem[idx] = rem[idx] * lc
            for j in range(db + 1):
                rem[i + j] = rem[i + j] - c * b[j]
    return q, _strip(rem), alpha


cdef tuple _invert_vec(list v, list phi):
    cdef Py_ssize_t deg = len(phi) - 1, i
    cdef list r0, r1, u0, u1, u, rem, u_rem, qu
    r1 = _strip(list(v))
    if not r1:
        raise ZeroDivisionError("inverse of zero in Q(zeta_r)")
    if len(r1) == 1:
        u, c = [1], r1[0]
    else:
        r0 = list(phi)
        u0 = []
        u1 = [1]
        while len(r1) > 1:
            q, rem, alpha = _pseudo_divmod(r0, r1)
            u_rem = [alpha * x for x in u0]
            qu = _poly_mul(q, u1)
            if len(u_rem) < len(qu):
                u_rem.extend([0] * (len(qu) - len(u_rem)))
            for i in range(len(qu)):
                u_rem[i] = u_rem[i] - qu[i]
            _strip(u_rem)
            if not rem:
                raise ZeroDivisionError("element shares a factor with Phi_r")
            g = gcd(_content(rem), _content(u_rem))
            if g > 1:
                rem = [x // g for x in rem]
                u_rem = [x // g for x in u_rem]
            r0, u0 = r1, u1
            r1, u1 = rem, u_rem
        u, c = _red(list(u1), phi, deg), r1[0]
    if c < 0:
        c = -c
        u = [-x for x in u]
    g = gcd(_content(u), c)
    if g > 1:
        c = c // g
        u = [x // g for x in u]
    u.extend([0] * (deg - len(u)))
    return u[:deg], c


cdef list _roots_table(long r, list phi, Py_ssize_t deg):
    cdef list table = [], vec
    cdef long a
    for a in range(r):
        vec = [0] * (a + 1)
        vec[a] = 1
        table.append(_red(vec, phi, deg))
    return table


cdef list _sigmas(list rho, list phi, Py_ssize_t deg):
    cdef Py_ssize_t k = len(rho), i, j, t
    cdef list sig = [[1] + [0] * (deg - 1)]
    for i in range(k):
        sig.append([0] * deg)
    cdef list v, term, prev, merged
    for i in range(k):
        v = rho[i]
        for j in range(i + 1, 0, -1):
            term = _mul_mod(sig[j - 1], v, phi, deg)
            prev = sig[j]
            merged = [0] * deg
            for t in range(deg):
                merged[t] = prev[t] + term[t]
            sig[j] = merged
    return sig


cdef tuple _acc_add(list acc, acc_den, list s, s_den):
    cdef Py_ssize_t i, n = len(acc)
    g = gcd(acc_den, s_den)
    m_acc = s_den // g
    m_s = acc_den // g
    cdef list out = [0] * n
    for i in range(n):
        out[i] = acc[i] * m_acc + s[i] * m_s
    return out, acc_den * m_acc


cdef tuple _normalize(list num, den):
    g = gcd(_content(num), den)
    if g > 1:
        num = [x // g for x in num]
        den = den // g
    return num, den


cdef list _vandermonde_sq(list rho, Py_ssize_t k, list phi, Py_ssize_t deg):
    cdef Py_ssize_t i, j, t
    cdef list v = [1] + [0] * (deg - 1), diff, a, b
    for i in range(k):
        for j in range(i + 1, k):
            a = rho[i]
            b = rho[j]
            diff = [0] * deg
            for t in range(deg):
                diff[t] = a[t] - b[t]
            v = _mul_mod(v, diff, phi, deg)
    v = _mul_mod(v, v, phi, deg)
    if (k * (k - 1) // 2) & 1:
        v = [-x for x in v]
    return v


cdef tuple _apply_denominator(list num, num_den, list base, long gm1,
                              list phi, Py_ssize_t deg):
    cdef list b, u
    if gm1 > 0:
        b = _pow_mod(base, gm1, phi, deg)
        u, c = _invert_vec(b, phi)
        return _mul_mod(num, u, phi, deg), num_den * c
    if gm1 < 0:
        return _mul_mod(num, _pow_mod(base, -gm1, phi, deg), phi, deg), num_den
    return num, num_den


def vi_poly_sum(long r, phi, long k, long gm1, terms, subsets):
    """Exact sum of P(sigma(rho)) * (prod rho * Vandermonde)^(-gm1)."""
    cdef list phi_l = list(phi)
    cdef Py_ssize_t deg = len(phi_l) - 1, j
    cdef list roots = _roots_table(r, phi_l, deg)
    cdef list one = [1] + [0] * (deg - 1)
    cdef list acc = [0] * deg
    acc_den = 1
    cdef list terms_l = [(cn, cd, tuple(exps)) for cn, cd, exps in terms]
    cdef list rho, sig, num, t, base, s
    cdef long a, sa
    for subset in subsets:
        rho = []
        sa = 0
        for a in subset:
            rho.append(roots[a])
            sa += a
        sig = _sigmas(rho, phi_l, deg)
        num = [0] * deg
        num_den = 1
        for cn, cd, exps in terms_l:
            t = one
            for j in range(k):
                mj = exps[j]
                if mj:
                    t = _mul_mod(t, _pow_mod(sig[j + 1], mj, phi_l, deg), phi_l, deg)
            num, num_den = _acc_add(num, num_den, [x * cn for x in t], cd)
        base = _mul_mod(roots[sa % r], _vandermonde_sq(rho, k, phi_l, deg),
                        phi_l, deg)
        s, s_den = _apply_denominator(num, num_den, base, gm1, phi_l, deg)
        s, s_den = _normalize(s, s_den)
        acc, acc_den = _acc_add(acc, acc_den, s, s_den)
    return _normalize(acc, acc_den)


def vi_direct_sum(long r, phi, long k, long gm1, t, subsets):
    """Exact sum of (prod rho)^t * Vandermonde^(-gm1)."""
    cdef list phi_l = list(phi)
    cdef Py_ssize_t deg = len(phi_l) - 1
    cdef list roots = _roots_table(r, phi_l, deg)
    cdef list acc = [0] * deg
    acc_den = 1
    cdef list rho, num, base, s
    cdef long a
    for subset in subsets:
        rho = []
        sa = 0
        for a in subset:
            rho.append(roots[a])
            sa += a
        num = roots[(t * sa) % r]
        base = _vandermonde_sq(rho, k, phi_l, deg)
        s, s_den = _apply_denominator(num, 1, base, gm1, phi_l, deg)
        s, s_den = _normalize(s, s_den)
        acc, acc_den = _acc_add(acc, acc_den, s, s_den)
    return _normalize(acc, acc_den)
