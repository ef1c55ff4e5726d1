"""Exact arithmetic in the field Q(i)(t1, t2, s), with s = e^{iu/2}.

Every partition-function value produced by this package is a ``Scalar``:
an unreduced fraction num/den of sparse polynomials in (t1, t2, s) with
Gaussian-integer coefficients.  Rational coefficients are folded into the
denominator, so the pair of integer-coefficient polynomials represents a
general element of Q(i)(t1, t2, s).

Equality is decided by cross-multiplication, which is exact and needs no
polynomial GCD.  Normalisation only strips cheap common factors: integer
content, (1+i) content, a common monomial, and a fixed library of "atom"
factors (s^k -+ 1, t1 +- t2) that account for essentially all pole loci in
this theory.

``USeries`` is the truncated Laurent expansion in u obtained from
s = e^{iu/2}; its coefficients are s-free Scalars, i.e. bivariate rational
functions of (t1, t2) over Q(i).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .backend import (
    MASK,
    SHIFT1,
    SHIFT2,
    p_add,
    p_div_int,
    p_divexact,
    p_int_content,
    p_mono_min,
    p_mul,
    p_mul_term,
    p_neg,
    p_shift_down,
    p_sub,
    pack,
    unpack,
)

P_ONE = {0: (1, 0)}

_MAX_ATOM_K = 30


def p_pow(a, n):
    if n < 0:
        raise ValueError("negative polynomial power")
    out = dict(P_ONE)
    base = a
    while n:
        if n & 1:
            out = p_mul(out, base)
        n >>= 1
        if n:
            base = p_mul(base, base)
    return out


def _sigma_deg(a):
    d = 0
    for m in a:
        es = m & MASK
        if es > d:
            d = es
    return d


def _t_degs(a):
    d1 = d2 = 0
    for m in a:
        e1 = m >> SHIFT1
        e2 = (m >> SHIFT2) & MASK
        if e1 > d1:
            d1 = e1
        if e2 > d2:
            d2 = e2
    return d1, d2


def sigma_atom(k, sign):
    """The polynomial s^k + sign (sign is +1 or -1)."""
    return {pack(0, 0, k): (1, 0), 0: (sign, 0)}


_T_ATOMS = (
    {pack(1, 0, 0): (1, 0), pack(0, 1, 0): (1, 0)},  # t1 + t2
    {pack(1, 0, 0): (1, 0), pack(0, 1, 0): (-1, 0)},  # t1 - t2
)


def _strip_one_plus_i(num, den):
    # divide both polys by (1+i) while every coefficient allows it
    while True:
        for a in (num, den):
            for re, im in a.values():
                if (re + im) & 1:
                    return num, den
        num = {m: ((re + im) >> 1, (im - re) >> 1) for m, (re, im) in num.items()}
        den = {m: ((re + im) >> 1, (im - re) >> 1) for m, (re, im) in den.items()}


def _normalize(num, den):
    if not den:
        raise ZeroDivisionError("zero divisor")
    if not num:
        return {}, dict(P_ONE)
    gm = p_mono_min(num)
    if gm:
        gd = p_mono_min(den)
        e1 = min(gm >> SHIFT1, gd >> SHIFT1)
        e2 = min((gm >> SHIFT2) & MASK, (gd >> SHIFT2) & MASK)
        es = min(gm & MASK, gd & MASK)
        g = pack(e1, e2, es)
        if g:
            num = p_shift_down(num, g)
            den = p_shift_down(den, g)
    g = gcd(p_int_content(num), p_int_content(den))
    if g > 1:
        num = p_div_int(num, g)
        den = p_div_int(den, g)
    num, den = _strip_one_plus_i(num, den)
    if len(den) > 1:
        sd = _sigma_deg(den)
        for k in range(min(sd, _MAX_ATOM_K), 0, -1):
            for sign in (-1, 1):
                atom = sigma_atom(k, sign)
                while True:
                    qd = p_divexact(den, atom)
                    if qd is None:
                        break
                    qn = p_divexact(num, atom)
                    if qn is None:
                        break
                    num, den = qn, qd
        d1, d2 = _t_degs(den)
        if d1 and d2:
            for atom in _T_ATOMS:
                while True:
                    qd = p_divexact(den, atom)
                    if qd is None:
                        break
                    qn = p_divexact(num, atom)
                    if qn is None:
                        break
                    num, den = qn, qd
    # unit-normalize the leading denominator coefficient
    lre, lim = den[max(den)]
    if lre == 0:
        # multiply through by -i
        num = {m: (im, -re) for m, (re, im) in num.items()}
        den = {m: (im, -re) for m, (re, im) in den.items()}
        lre, lim = lim, 0
    if lre < 0:
        num = p_neg(num)
        den = p_neg(den)
    return num, den


class Scalar:
    """Element of Q(i)(t1, t2, s) as an unreduced fraction num/den."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if den is None:
            den = dict(P_ONE)
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_int(n):
        return Scalar({0: (n, 0)} if n else {})

    @staticmethod
    def from_fraction(fr):
        fr = Fraction(fr)
        num = {0: (fr.numerator, 0)} if fr.numerator else {}
        return Scalar(num, {0: (fr.denominator, 0)})

    @staticmethod
    def gaussian(re, im=0):
        """Exact Gaussian rational re + im*i (re, im ints or Fractions)."""
        re = Fraction(re)
        im = Fraction(im)
        q = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (q // re.denominator)
        b = im.numerator * (q // im.denominator)
        num = {0: (a, b)} if a or b else {}
        return Scalar(num, {0: (q, 0)})

    @staticmethod
    def monomial(e1=0, e2=0, es=0, re=1, im=0):
        if re == 0 and im == 0:
            return ZERO
        num = {}
        den = {}
        n1, d1 = (e1, 0) if e1 >= 0 else (0, -e1)
        n2, d2 = (e2, 0) if e2 >= 0 else (0, -e2)
        ns, ds = (es, 0) if es >= 0 else (0, -es)
        num[pack(n1, n2, ns)] = (re, im)
        den[pack(d1, d2, ds)] = (1, 0)
        return Scalar(num, den)

    @staticmethod
    def t1_pow(k=1):
        return Scalar.monomial(e1=k)

    @staticmethod
    def t2_pow(k=1):
        return Scalar.monomial(e2=k)

    @staticmethod
    def sigma_pow(k=1):
        return Scalar.monomial(es=k)

    @staticmethod
    def i_pow(n):
        """The unit i^n (n any integer)."""
        re, im = ((1, 0), (0, 1), (-1, 0), (0, -1))[n % 4]
        return Scalar({0: (re, im)} if re or im else {})

    @staticmethod
    def neg_i_pow(n):
        """The unit (-i)^n (n any integer)."""
        return Scalar.i_pow(-n)

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self.num == self.den

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return Scalar({0: (x, 0)} if x else {})
        if isinstance(x, Fraction):
            return Scalar.from_fraction(x)
        return NotImplemented

    def __add__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return Scalar(p_add(self.num, other.num), dict(self.den))
        num = p_add(p_mul(self.num, other.den), p_mul(other.num, self.den))
        return Scalar(num, p_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(p_neg(self.num), dict(self.den), _normalized=True)

    def __sub__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return Scalar(p_sub(self.num, other.num), dict(self.den))
        num = p_sub(p_mul(self.num, other.den), p_mul(other.num, self.den))
        return Scalar(num, p_mul(self.den, other.den))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(p_mul(self.num, other.num), p_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("zero divisor")
        return Scalar(p_mul(self.num, other.den), p_mul(self.den, other.num))

    def __rtruediv__(self, other):
        return Scalar._coerce(other) / self

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("zero divisor")
        return Scalar(dict(self.den), dict(self.num))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return Scalar(p_pow(self.num, n), p_pow(self.den, n))

    def __eq__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num == other.num and self.den == other.den:
            return True
        if self.den == other.den:
            return False
        return p_mul(self.num, other.den) == p_mul(other.num, self.den)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    def conjugate(self):
        """Field automorphism i -> -i (t1, t2, s fixed)."""
        num = {m: (re, -im) for m, (re, im) in self.num.items()}
        den = {m: (re, -im) for m, (re, im) in self.den.items()}
        return Scalar(num, den)

    def is_real(self):
        return self == self.conjugate()

    def t_homogeneous_degree(self):
        """Total (t1, t2)-degree if num and den are t-homogeneous, else None."""

        def hdeg(a):
            degs = {(m >> SHIFT1) + ((m >> SHIFT2) & MASK) for m in a}
            return degs.pop() if len(degs) == 1 else None

        hn = hdeg(self.num)
        hd = hdeg(self.den)
        if hn is None or hd is None:
            return None
        return hn - hd

    def sigma_flip(self):
        """Substitute s -> -s."""

        def flip(a):
            return {m: ((re, im) if (m & MASK) % 2 == 0 else (-re, -im))
                    for m, (re, im) in a.items()}

        return Scalar(flip(self.num), flip(self.den))

    def is_even_in_sigma(self):
        return self == self.sigma_flip()

    # -- repr ----------------------------------------------------------

    def __repr__(self):
        return f"Scalar({format_scalar(self)})"


ZERO = Scalar({}, dict(P_ONE), _normalized=True)
ONE = Scalar(dict(P_ONE), dict(P_ONE), _normalized=True)
I = Scalar({0: (0, 1)}, dict(P_ONE), _normalized=True)


def arith(a, b, op):
    """Field operation dispatch: op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def equals(a, b):
    return a == b


# ---------------------------------------------------------------------
# specialization
# ---------------------------------------------------------------------


def _subst_poly(a, vals):
    """Substitute vals = (v1, v2, vs) (each Scalar or None) into a poly dict."""
    pows = [{0: ONE}, {0: ONE}, {0: ONE}]

    def power(i, e):
        cache = pows[i]
        got = cache.get(e)
        if got is None:
            k = e - 1
            while k not in cache:
                k -= 1
            got = cache[k]
            while k < e:
                got = got * vals[i]
                k += 1
                cache[k] = got
        return got

    acc = ZERO
    for m, (re, im) in a.items():
        e1, e2, es = unpack(m)
        k1 = 0 if vals[0] is not None else e1
        k2 = 0 if vals[1] is not None else e2
        ks = 0 if vals[2] is not None else es
        term = Scalar({pack(k1, k2, ks): (re, im)}, dict(P_ONE), _normalized=True)
        if vals[0] is not None and e1:
            term = term * power(0, e1)
        if vals[1] is not None and e2:
            term = term * power(1, e2)
        if vals[2] is not None and es:
            term = term * power(2, es)
        acc = acc + term
    return acc


def _cancel_root(num, den, atom):
    while True:
        qn = p_divexact(num, atom)
        if qn is None:
            return num, den
        qd = p_divexact(den, atom)
        if qd is None:
            return num, den
        num, den = qn, qd


def specialize(a, t1_val=None, t2_val=None, sigma_val=None):
    """Exact substitution of any subset of the variables.

    Values may be ints, Fractions or Scalars (possibly involving the
    remaining variables).  Raises ValueError if the denominator vanishes
    identically under the substitution.
    """
    vals = []
    for v in (t1_val, t2_val, sigma_val):
        if v is None:
            vals.append(None)
        else:
            v = Scalar._coerce(v)
            if v is NotImplemented:
                raise TypeError("specialize values must be Scalar-like")
            vals.append(v)
    num, den = a.num, a.den
    if vals[2] is not None and len(vals[2].num) <= 1 and len(vals[2].den) == 1:
        # rational sigma value p/q: cancel common (q*s - p) factors first
        if not vals[2].num:
            p, q = 0, 1
        else:
            (mn, (pre, pim)), = vals[2].num.items()
            (md, (qre, qim)), = vals[2].den.items()
            if mn == 0 and md == 0 and pim == 0 and qim == 0:
                p, q = pre, qre
            else:
                p = q = None
        if q is not None:
            atom = {pack(0, 0, 1): (q, 0), 0: (-p, 0)}
            num, den = _cancel_root(num, den, atom)
    dden = _subst_poly(den, vals)
    if dden.is_zero():
        raise ValueError("denominator vanishes under specialization")
    dnum = _subst_poly(num, vals)
    return dnum / dden


# ---------------------------------------------------------------------
# u-series
# ---------------------------------------------------------------------


class USeries:
    """Truncated Laurent series in u with s-free Scalar coefficients.

    Represents sum(coeffs[j] * u^(offset+j)) + O(u^(trunc+1)), where
    trunc = offset + len(coeffs) - 1.
    """

    __slots__ = ("offset", "coeffs")

    def __init__(self, offset, coeffs, strip=True):
        if strip:
            while coeffs and coeffs[0].is_zero():
                coeffs = coeffs[1:]
                offset += 1
        self.offset = offset
        self.coeffs = list(coeffs)

    @property
    def trunc(self):
        return self.offset + len(self.coeffs) - 1

    @property
    def order(self):
        return self.trunc

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def coeff(self, k):
        """Coefficient of u^k; k must not exceed the truncation order."""
        if k > self.trunc:
            raise ValueError(f"coefficient u^{k} beyond truncation u^{self.trunc}")
        if k < self.offset:
            return ZERO
        return self.coeffs[k - self.offset]

    def valuation(self):
        for j, c in enumerate(self.coeffs):
            if not c.is_zero():
                return self.offset + j
        return None

    def __neg__(self):
        return USeries(self.offset, [-c for c in self.coeffs], strip=False)

    def __add__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        off = min(self.offset, other.offset)
        hi = min(self.trunc, other.trunc)
        out = []
        for k in range(off, hi + 1):
            a = self.coeffs[k - self.offset] if self.offset <= k <= self.trunc else ZERO
            b = other.coeffs[k - other.offset] if other.offset <= k <= other.trunc else ZERO
            out.append(a + b)
        return USeries(off, out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return USeries(self.offset, [c * other for c in self.coeffs], strip=False)
        if not isinstance(other, USeries):
            return NotImplemented
        hi = min(self.trunc + other.offset, other.trunc + self.offset)
        if not self.coeffs or not other.coeffs:
            # an exactly-zero factor: the product is zero through hi
            return USeries(hi + 1, [], strip=False)
        off = self.offset + other.offset
        n = hi - off + 1
        if n <= 0:
            raise ValueError("empty truncation window in series product")
        out = [ZERO] * n
        for ja, ca in enumerate(self.coeffs):
            if ca.is_zero():
                continue
            jmax = n - ja
            for jb, cb in enumerate(other.coeffs[:jmax]):
                if cb.is_zero():
                    continue
                out[ja + jb] = out[ja + jb] + ca * cb
        return USeries(off, out)

    __rmul__ = __mul__

    def inverse(self):
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("inverting zero series")
        shift = v - self.offset
        c = self.coeffs[shift:]
        n = len(c)
        lead = c[0]
        inv = [ZERO] * n
        inv[0] = ONE / lead
        for k in range(1, n):
            s = ZERO
            for j in range(1, k + 1):
                if not c[j].is_zero():
                    s = s + c[j] * inv[k - j]
            inv[k] = -s / lead
        return USeries(-v, inv, strip=False)

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            return USeries(self.offset, [c / other for c in self.coeffs], strip=False)
        if not isinstance(other, USeries):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = USeries(0, [ONE] + [ZERO] * (len(self.coeffs) - 1), strip=False)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def agrees_with(self, other, through=None):
        """Exact equality of coefficients on the common window."""
        lo = min(self.offset, other.offset)
        hi = min(self.trunc, other.trunc)
        if through is not None:
            if hi < through:
                raise ValueError("series truncated below comparison order")
            hi = through
        if hi < lo:
            raise ValueError("series windows do not overlap")
        for k in range(lo, hi + 1):
            if self.coeff(k) != other.coeff(k):
                return False
        return True

    def is_real(self):
        return all(c.is_real() for c in self.coeffs)

    def __repr__(self):
        pieces = []
        for j, c in enumerate(self.coeffs):
            if not c.is_zero():
                pieces.append(f"({format_scalar(c)})*u^{self.offset + j}")
            if len(pieces) >= 6:
                pieces.append("...")
                break
        body = " + ".join(pieces) if pieces else "0"
        return f"USeries({body} + O(u^{self.trunc + 1}))"


_SIGMA_MINUS_1 = {pack(0, 0, 1): (1, 0), 0: (-1, 0)}


def _root_multiplicity(a, atom):
    mult = 0
    while True:
        q = p_divexact(a, atom)
        if q is None:
            return mult, a
        a = q
        mult += 1


def _poly_u_coeffs(a, kmax):
    """u-expansion coefficients 0..kmax of a(t1,t2,e^{iu/2}) as s-free Scalars."""
    by_s = {}
    for m, c in a.items():
        es = m & MASK
        tkey = m - es
        by_s.setdefault(es, {})[tkey] = c
    out = []
    fact = 1
    for n in range(kmax + 1):
        if n:
            fact *= 2 * n
        # coefficient of u^n: sum over s-groups of (i*es/2)^n / n! * group
        acc = {}
        for es, grp in by_s.items():
            w = es ** n
            if w == 0 and n > 0:
                continue
            wre, wim = ((w, 0), (0, w), (-w, 0), (0, -w))[n % 4]
            for tk, (re, im) in grp.items():
                cre = re * wre - im * wim
                cim = re * wim + im * wre
                cur = acc.get(tk)
                if cur is None:
                    if cre or cim:
                        acc[tk] = (cre, cim)
                else:
                    cre += cur[0]
                    cim += cur[1]
                    if cre or cim:
                        acc[tk] = (cre, cim)
                    else:
                        del acc[tk]
        out.append(Scalar(acc, {0: (fact, 0)}))
    return out


def expand_u_series(a, order):
    """Expand a Scalar through u^order (an explicit negative offset marks poles)."""
    if order < 0:
        raise ValueError("order must be non-negative")
    vd, _ = _root_multiplicity(a.den, _SIGMA_MINUS_1)
    k_num = order + vd
    num_c = _poly_u_coeffs(a.num, k_num)
    den_c = _poly_u_coeffs(a.den, k_num + vd)
    for j in range(vd):
        if not den_c[j].is_zero():
            raise AssertionError("denominator valuation mismatch in u-expansion")
    den_ser = USeries(vd, den_c[vd:], strip=False)
    num_ser = USeries(0, num_c, strip=False)
    return num_ser * den_ser.inverse()


# ---------------------------------------------------------------------
# JSON wire format
# ---------------------------------------------------------------------


def _poly_to_json(a):
    out = []
    for m in sorted(a, reverse=True):
        re, im = a[m]
        e1, e2, es = unpack(m)
        out.append({"c": [str(re), "1", str(im), "1"], "t1": e1, "t2": e2, "s": es})
    return out


def _poly_from_json(terms):
    acc = {}
    den_lcm = 1
    parsed = []
    for t in terms:
        re = Fraction(int(t["c"][0]), int(t["c"][1]))
        im = Fraction(int(t["c"][2]), int(t["c"][3]))
        m = pack(int(t["t1"]), int(t["t2"]), int(t["s"]))
        parsed.append((m, re, im))
        q = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        den_lcm = den_lcm * q // gcd(den_lcm, q)
    for m, re, im in parsed:
        cre = int(re * den_lcm)
        cim = int(im * den_lcm)
        cur = acc.get(m)
        if cur is None:
            if cre or cim:
                acc[m] = (cre, cim)
        else:
            cre += cur[0]
            cim += cur[1]
            if cre or cim:
                acc[m] = (cre, cim)
            else:
                del acc[m]
    return acc, den_lcm


def scalar_to_json(a):
    return {"num": _poly_to_json(a.num), "den": _poly_to_json(a.den)}


def scalar_from_json(obj):
    num, dn = _poly_from_json(obj["num"])
    den, dd = _poly_from_json(obj["den"])
    if dn != 1:
        den = p_mul_term(den, 0, dn, 0)
    if dd != 1:
        num = p_mul_term(num, 0, dd, 0)
    return Scalar(num, den)


# ---------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------


def _coeff_str(re, im):
    if im == 0:
        return str(re)
    if re == 0:
        return f"{im}*i" if im not in (1, -1) else ("i" if im == 1 else "-i")
    sign = "+" if im > 0 else "-"
    mag = abs(im)
    istr = "i" if mag == 1 else f"{mag}*i"
    return f"({re}{sign}{istr})"


def _term_str(m, c, q_mode=False):
    e1, e2, es = unpack(m)
    re, im = c
    parts = []
    if q_mode:
        if es % 2:
            raise ValueError("odd s-power in q-mode formatting")
        k = es // 2
        if k % 2:
            re, im = -re, -im
        if k:
            parts.append(f"q^{k}" if k != 1 else "q")
    else:
        if es:
            parts.append(f"s^{es}" if es != 1 else "s")
    if e1:
        parts.insert(0, f"t1^{e1}" if e1 != 1 else "t1")
    if e2:
        insert_at = 1 if (e1 and parts) else 0
        parts.insert(insert_at, f"t2^{e2}" if e2 != 1 else "t2")
    cs = _coeff_str(re, im)
    if not parts:
        return cs
    if cs == "1":
        return "*".join(parts)
    if cs == "-1":
        return "-" + "*".join(parts)
    return cs + "*" + "*".join(parts)


def _poly_str(a, q_mode=False):
    if not a:
        return "0"
    pieces = [_term_str(m, a[m], q_mode) for m in sorted(a, reverse=True)]
    out = pieces[0]
    for p in pieces[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def format_scalar(a, q_mode=False):
    ns = _poly_str(a.num, q_mode)
    if a.den == P_ONE:
        return ns
    ds = _poly_str(a.den, q_mode)
    return f"({ns}) / ({ds})"


def format_useries(s):
    if not s.coeffs:
        return f"O(u^{s.trunc + 1})"
    pieces = []
    for j, c in enumerate(s.coeffs):
        if c.is_zero():
            continue
        k = s.offset + j
        pieces.append(f"({format_scalar(c)})*u^{k}")
    body = " + ".join(pieces) if pieces else "0"
    return f"{body} + O(u^{s.trunc + 1})"
