"""Sparse multivariate polynomial kernel (pure-Python backend).

A polynomial in (t1, t2, s) with Gaussian-integer coefficients is a dict
mapping a packed monomial key to a coefficient pair (re, im).  Exponents
are non-negative and packed into a single int, 21 bits per variable, with
t1 in the highest field so that integer comparison of keys is exactly the
lexicographic order on (e_t1, e_t2, e_s).

The compiled twin of this module is ``_polycore_cy.pyx``; both expose the
same functions and must stay behaviourally identical.
"""

from math import gcd

BACKEND = "pure"

SHIFT1 = 42
SHIFT2 = 21
MASK = (1 << 21) - 1


def pack(e1, e2, es):
    return (e1 << SHIFT1) | (e2 << SHIFT2) | es


def unpack(m):
    return (m >> SHIFT1, (m >> SHIFT2) & MASK, m & MASK)


def p_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for m, (re, im) in b.items():
        cur = out.get(m)
        if cur is None:
            out[m] = (re, im)
        else:
            re += cur[0]
            im += cur[1]
            if re or im:
                out[m] = (re, im)
            else:
                del out[m]
    return out


def p_neg(a):
    return {m: (-re, -im) for m, (re, im) in a.items()}


def p_sub(a, b):
    out = dict(a)
    for m, (re, im) in b.items():
        cur = out.get(m)
        if cur is None:
            out[m] = (-re, -im)
        else:
            re = cur[0] - re
            im = cur[1] - im
            if re or im:
                out[m] = (re, im)
            else:
                del out[m]
    return out


def p_mul(a, b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    bitems = list(b.items())
    for ma, (ar, ai) in a.items():
        for mb, (br, bi) in bitems:
            m = ma + mb
            re = ar * br - ai * bi
            im = ar * bi + ai * br
            cur = get(m)
            if cur is None:
                out[m] = (re, im)
            else:
                re += cur[0]
                im += cur[1]
                if re or im:
                    out[m] = (re, im)
                else:
                    del out[m]
    return out


def p_mul_term(a, mono, cre, cim):
    # multiply by a single term cre+cim*i times the packed monomial
    if not a or (cre == 0 and cim == 0):
        return {}
    out = {}
    for m, (re, im) in a.items():
        out[m + mono] = (re * cre - im * cim, re * cim + im * cre)
    return out


def _mono_divisible(m1, m2):
    # componentwise e(m1) >= e(m2)
    if (m1 & MASK) < (m2 & MASK):
        return False
    if ((m1 >> SHIFT2) & MASK) < ((m2 >> SHIFT2) & MASK):
        return False
    return (m1 >> SHIFT1) >= (m2 >> SHIFT1)


def p_divexact(a, b):
    """Exact division in Z[i][t1,t2,s]; returns quotient dict or None."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    lb = max(b)
    bre, bim = b[lb]
    nb = bre * bre + bim * bim
    if len(b) == 1:
        out = {}
        for m, (re, im) in a.items():
            if not _mono_divisible(m, lb):
                return None
            zre = re * bre + im * bim
            zim = im * bre - re * bim
            if zre % nb or zim % nb:
                return None
            out[m - lb] = (zre // nb, zim // nb)
        return out
    rem = dict(a)
    bitems = list(b.items())
    q = {}
    while rem:
        lr = max(rem)
        if not _mono_divisible(lr, lb):
            return None
        rre, rim = rem[lr]
        zre = rre * bre + rim * bim
        zim = rim * bre - rre * bim
        if zre % nb or zim % nb:
            return None
        cre = zre // nb
        cim = zim // nb
        qm = lr - lb
        q[qm] = (cre, cim)
        get = rem.get
        for m, (sre, sim) in bitems:
            mm = m + qm
            pre = cre * sre - cim * sim
            pim = cre * sim + cim * sre
            cur = get(mm)
            if cur is None:
                rem[mm] = (-pre, -pim)
            else:
                pre = cur[0] - pre
                pim = cur[1] - pim
                if pre or pim:
                    rem[mm] = (pre, pim)
                else:
                    del rem[mm]
    return q


def p_int_content(a):
    g = 0
    for re, im in a.values():
        g = gcd(g, re)
        g = gcd(g, im)
        if g == 1:
            return 1
    return g


def p_div_int(a, g):
    return {m: (re // g, im // g) for m, (re, im) in a.items()}


def p_mono_min(a):
    e1 = e2 = es = MASK
    for m in a:
        v = m & MASK
        if v < es:
            es = v
        v = (m >> SHIFT2) & MASK
        if v < e2:
            e2 = v
        v = m >> SHIFT1
        if v < e1:
            e1 = v
        if not (e1 or e2 or es):
            return 0
    return (e1 << SHIFT1) | (e2 << SHIFT2) | es


def p_shift_down(a, mono):
    if mono == 0:
        return dict(a)
    return {m - mono: c for m, c in a.items()}
