# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of ``_polycore``.  Same functions, same semantics.

Coefficients are arbitrary-precision Python ints, so the win over the pure
backend comes from compiled dict traversal and reduced interpreter
overhead on the hot multiply/divide loops, not from machine arithmetic.
"""

from math import gcd

BACKEND = "compiled"

SHIFT1 = 42
SHIFT2 = 21
MASK = (1 << 21) - 1

cdef object _MASK = MASK
cdef int _S1 = 42
cdef int _S2 = 21


def pack(e1, e2, es):
    return (e1 << _S1) | (e2 << _S2) | es


def unpack(m):
    return (m >> _S1, (m >> _S2) & _MASK, m & _MASK)


def p_add(dict a, dict b):
    cdef dict out
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for m, c in b.items():
        cur = out.get(m)
        if cur is None:
            out[m] = c
        else:
            re = cur[0] + c[0]
            im = cur[1] + c[1]
            if re or im:
                out[m] = (re, im)
            else:
                del out[m]
    return out


def p_neg(dict a):
    cdef dict out = {}
    for m, c in a.items():
        out[m] = (-c[0], -c[1])
    return out


def p_sub(dict a, dict b):
    cdef dict out = dict(a)
    for m, c in b.items():
        cur = out.get(m)
        if cur is None:
            out[m] = (-c[0], -c[1])
        else:
            re = cur[0] - c[0]
            im = cur[1] - c[1]
            if re or im:
                out[m] = (re, im)
            else:
                del out[m]
    return out


def p_mul(dict a, dict b):
    cdef dict out = {}
    cdef list bitems
    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a
    bitems = list(b.items())
    for ma, ca in a.items():
        ar = ca[0]
        ai = ca[1]
        for mb, cb in bitems:
            br = cb[0]
            bi = cb[1]
            m = ma + mb
            re = ar * br - ai * bi
            im = ar * bi + ai * br
            cur = out.get(m)
            if cur is None:
                out[m] = (re, im)
            else:
                re = re + cur[0]
                im = im + cur[1]
                if re or im:
                    out[m] = (re, im)
                else:
                    del out[m]
    return out


def p_mul_term(dict a, mono, cre, cim):
    cdef dict out = {}
    if not a or (cre == 0 and cim == 0):
        return out
    for m, c in a.items():
        re = c[0]
        im = c[1]
        out[m + mono] = (re * cre - im * cim, re * cim + im * cre)
    return out


cdef bint _mono_divisible(m1, m2):
    if (m1 & _MASK) < (m2 & _MASK):
        return False
    if ((m1 >> _S2) & _MASK) < ((m2 >> _S2) & _MASK):
        return False
    return (m1 >> _S1) >= (m2 >> _S1)


def p_divexact(dict a, dict b):
    cdef dict rem, q, out
    cdef list bitems
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    lb = max(b)
    cb = b[lb]
    bre = cb[0]
    bim = cb[1]
    nb = bre * bre + bim * bim
    if len(b) == 1:
        out = {}
        for m, c in a.items():
            if not _mono_divisible(m, lb):
                return None
            re = c[0]
            im = c[1]
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
        cr = rem[lr]
        rre = cr[0]
        rim = cr[1]
        zre = rre * bre + rim * bim
        zim = rim * bre - rre * bim
        if zre % nb or zim % nb:
            return None
        cre = zre // nb
        cim = zim // nb
        qm = lr - lb
        q[qm] = (cre, cim)
        for mb, cb2 in bitems:
            sre = cb2[0]
            sim = cb2[1]
            mm = mb + qm
            pre = cre * sre - cim * sim
            pim = cre * sim + cim * sre
            cur = rem.get(mm)
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


def p_int_content(dict a):
    g = 0
    for c in a.values():
        g = gcd(g, c[0])
        g = gcd(g, c[1])
        if g == 1:
            return 1
    return g


def p_div_int(dict a, g):
    cdef dict out = {}
    for m, c in a.items():
        out[m] = (c[0] // g, c[1] // g)
    return out


def p_mono_min(dict a):
    e1 = e2 = es = _MASK
    for m in a:
        v = m & _MASK
        if v < es:
            es = v
        v = (m >> _S2) & _MASK
        if v < e2:
            e2 = v
        v = m >> _S1
        if v < e1:
            e1 = v
        if not (e1 or e2 or es):
            return 0
    return (e1 << _S1) | (e2 << _S2) | es


def p_shift_down(dict a, mono):
    cdef dict out
    if mono == 0:
        return dict(a)
    out = {}
    for m, c in a.items():
        out[m - mono] = c
    return out
