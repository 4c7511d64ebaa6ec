# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels: exact rational polynomials and graded monomials.

Same API and semantics as gradedq._kernel_py; the speedup comes from
compiling the merge loops, Koszul crossing counts and dict plumbing,
while coefficients stay exact (fractions.Fraction).
"""

from fractions import Fraction

BACKEND = "c"


def poly_add(a, b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for exp, c in b.items():
        s = out.get(exp)
        if s is None:
            out[exp] = c
        else:
            s = s + c
            if s:
                out[exp] = s
            else:
                del out[exp]
    return out


def poly_neg(a):
    return {exp: -c for exp, c in a.items()}


def poly_scale(a, c):
    if not c:
        return {}
    return {exp: c * v for exp, v in a.items()}


def poly_mul(a, b):
    cdef Py_ssize_t k, n
    if not a or not b:
        return {}
    out = {}
    for ea, ca in a.items():
        n = len(ea)
        for eb, cb in b.items():
            exp = tuple([ea[k] + eb[k] for k in range(n)])
            c = ca * cb
            s = out.get(exp)
            if s is None:
                out[exp] = c
            else:
                s = s + c
                if s:
                    out[exp] = s
                else:
                    del out[exp]
    return out


def poly_partial(a, mu):
    cdef Py_ssize_t m = mu
    out = {}
    for exp, c in a.items():
        k = exp[m]
        if k:
            e = exp[:m] + (k - 1,) + exp[m + 1:]
            v = c * k
            s = out.get(e)
            if s is None:
                out[e] = v
            else:
                out[e] = s + v  # distinct sources never cancel here
    return out


def mono_mul(m1, m2, parity):
    """Multiply canonical monomials.  Returns (sign, mono); sign 0 means zero."""
    cdef Py_ssize_t i, j, n1, n2, lo, hi, mid, nodd
    cdef long swaps = 0
    cdef long g, g1, g2
    if not m1:
        return 1, m2
    if not m2:
        return 1, m1
    odd1 = [gp[0] for gp in m1 if parity[gp[0]]]
    nodd = len(odd1)
    for gp in m2:
        g = gp[0]
        if parity[g]:
            # crossings with odd letters of m1 that end up to the right
            lo, hi = 0, nodd
            while lo < hi:
                mid = (lo + hi) // 2
                if odd1[mid] <= g:
                    lo = mid + 1
                else:
                    hi = mid
            if lo and odd1[lo - 1] == g:
                return 0, None
            swaps += nodd - lo
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        g1, e1 = m1[i]
        g2, e2 = m2[j]
        if g1 < g2:
            out.append(m1[i])
            i += 1
        elif g2 < g1:
            out.append(m2[j])
            j += 1
        else:
            out.append((g1, e1 + e2))
            i += 1
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    sign = -1 if swaps & 1 else 1
    return sign, tuple(out)


def mono_partial(m, gid, parity, from_right):
    """Graded derivative of a monomial with respect to one generator.

    Returns (integer coefficient, reduced monomial).  Coefficient 0 means
    the generator is absent.  For odd generators the coefficient is the
    Koszul sign of commuting the derivation to the generator's slot.
    """
    cdef Py_ssize_t k, pos = -1, n = len(m)
    cdef long crossings
    for k in range(n):
        if m[k][0] == gid:
            pos = k
            break
    if pos < 0:
        return 0, None
    g, e = m[pos]
    if parity[gid]:
        crossings = 0
        if from_right:
            for k in range(pos + 1, n):
                if parity[m[k][0]]:
                    crossings += 1
        else:
            for k in range(pos):
                if parity[m[k][0]]:
                    crossings += 1
        coeff = -1 if crossings & 1 else 1
        reduced = m[:pos] + m[pos + 1:]
    else:
        coeff = e
        reduced = m[:pos] + ((g, e - 1),) + m[pos + 1:] if e > 1 else m[:pos] + m[pos + 1:]
    return coeff, reduced


def element_mul(f, g, parity):
    """Product of term maps {mono: polydict}; result is normalized."""
    out = {}
    for m1, p1 in f.items():
        for m2, p2 in g.items():
            sign, mono = mono_mul(m1, m2, parity)
            if sign == 0:
                continue
            prod = poly_mul(p1, p2)
            if not prod:
                continue
            if sign < 0:
                prod = poly_neg(prod)
            cur = out.get(mono)
            out[mono] = poly_add(cur, prod) if cur is not None else prod
    return {m: p for m, p in out.items() if p}
