"""The solved TQFT: pair-of-pants reconstruction, Frobenius structure,
and evaluation of arbitrary local partition functions by gluing.

The degree-d, genus-0, level-(0,0) three-holed-sphere tensor is recovered
by solving the linear system that matches powers of the Fock transfer
operator against unknown pants entries; the system matrix is shared by
all boundary pairs and its nonsingularity is guaranteed by the distinct
diagonal weights of the transfer operator.  Everything else (caps, tube
metric, level-shift and genus-adding operators, arbitrary gluings) is
assembled from the solved tensor and closed-form caps.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from math import factorial

from .backend import (
    MASK,
    p_add,
    p_divexact,
    p_int_content,
    p_mono_min,
    p_mul,
    pack,
)
from .characters import hurwitz3
from .fock import OperatorMatrix, inner_product, scaled_transfer_poly_matrix
from .linalg import (
    bareiss_solve_many,
    identity,
    mat_eq,
    mat_inverse,
    mat_mul,
    mat_pow,
    mat_trace,
    mat_vec,
)
from .partitions import Partition, all_partitions, zed
from .scalar import (
    ONE,
    P_ONE,
    ZERO,
    Scalar,
    USeries,
    expand_u_series,
    p_pow,
    scalar_from_json,
    scalar_to_json,
    specialize,
)

CACHE_FORMAT_VERSION = 1


# ---------------------------------------------------------------------
# closed-form pieces
# ---------------------------------------------------------------------


def star_exponent(d, g, k1, k2, boundary):
    """Exponent X with starred = (-i)^X * unstarred."""
    delta = sum(d - lam.length for lam in boundary)
    return d * (2 - 2 * g + k1 + k2) - delta


def star_factor(d, g, k1, k2, boundary):
    return Scalar.neg_i_pow(star_exponent(d, g, k1, k2, boundary))


def two_sin_half(k=1):
    """2 sin(k u / 2) = -i (s^k - s^-k) as a Scalar."""
    return Scalar.gaussian(0, -1) * (Scalar.sigma_pow(k) - Scalar.sigma_pow(-k))


def pants_dd2(d):
    """Starred pants value at ((d), (d), (2,1^{d-2})), closed form.

    Equals (1/2)((t1+t2)/(t1 t2)) (d((-q)^d+1)/((-q)^d-1) - ((-q)+1)/((-q)-1))
    with -q = s^2.
    """
    if d < 2:
        raise ValueError("defined for degree >= 2")
    sk = Scalar.sigma_pow(2 * d)
    s1 = Scalar.sigma_pow(2)
    bracket = (sk + 1) * d / (sk - 1) - (s1 + 1) / (s1 - 1)
    pref = (Scalar.t1_pow() + Scalar.t2_pow()) / (
        Scalar.monomial(e1=1, e2=1) * 2
    )
    return pref * bracket


def cap_level00(lam, starred=False):
    """Level-(0,0) cap: 1/(d! (t1 t2)^d) at (1^d), zero otherwise."""
    d = lam.size
    if lam.parts != (1,) * d:
        return ZERO
    val = ONE / (Scalar.monomial(e1=d, e2=d) * factorial(d))
    if starred:
        val = val * star_factor(d, 0, 0, 0, [lam])
    return val


def cap_cy(lam, side="left", starred=False):
    """Calabi-Yau cap: level (-1,0) for side='left', (0,-1) for 'right'."""
    d = lam.size
    l = lam.length
    t_e = 2 if side == "left" else 1
    sign = -1 if (d + l) % 2 else 1
    val = Scalar.from_int(sign) / (Scalar.monomial(e2=l) if side == "left" else Scalar.monomial(e1=l))
    val = val / zed(lam)
    for p in lam.parts:
        val = val / two_sin_half(p)
    if starred:
        k1, k2 = (-1, 0) if side == "left" else (0, -1)
        val = val * star_factor(d, 0, k1, k2, [lam])
    return val


# ---------------------------------------------------------------------
# pants tensor
# ---------------------------------------------------------------------


class PantsTensor:
    """Symmetric starred three-boundary tensor for one degree."""

    __slots__ = ("degree", "values")

    def __init__(self, degree, values):
        self.degree = degree
        self.values = values

    @staticmethod
    def key(mu, gamma, nu):
        return tuple(sorted((mu, gamma, nu), key=lambda p: p.parts, reverse=True))

    def get(self, mu, gamma, nu):
        return self.values[PantsTensor.key(mu, gamma, nu)]

    def __len__(self):
        return len(self.values)


def _clearing_candidate(d, npow):
    """m^{d+1} times [prod_k (s^{2k}-1)]^npow, a universal denominator multiple."""
    core = {pack(0, 0, 2): (1, 0), 0: (-1, 0)}
    for k in range(2, d + 1):
        core = p_mul(core, {pack(0, 0, 2 * k): (1, 0), 0: (-1, 0)})
    out = p_pow(core, npow)
    return {m + pack(d + 1, d + 1, 0): c for m, c in out.items()}


def _reduce_entry(x, dbig):
    """Rewrite x over the structured denominator dbig, if possible."""
    den = x.den
    c = p_int_content(den)
    if c > 1:
        from .backend import p_div_int

        den = p_div_int(den, c)
    q = p_divexact(p_mul(x.num, dbig), den)
    if q is None:
        return x, False
    new_den = dbig if c == 1 else {m: (re * c, im * c) for m, (re, im) in dbig.items()}
    return Scalar(q, new_den), True


def reconstruct_pants(d, progress=None):
    """Solve for all degree-d level-(0,0) starred pants values."""
    if d < 1:
        raise ValueError("degree must be positive")
    parts = all_partitions(d)
    if d == 1:
        one = parts[0]
        val = -ONE / Scalar.monomial(e1=1, e2=1)
        return PantsTensor(1, {PantsTensor.key(one, one, one): val})
    n = len(parts)
    index = {lam: i for i, lam in enumerate(parts)}
    i1 = index[Partition((1,) * d)]
    nmat, _dpoly = scaled_transfer_poly_matrix(d)
    # powers T_r = (2D)^r M^r for r = 0..n-1
    powers = [identity_polys(n)]
    for r in range(1, n):
        powers.append(_poly_mat_mul(nmat, powers[-1]))
        if progress:
            progress(f"transfer power {r}/{n - 1}")
    sign_d = -1 if d % 2 else 1
    a_rows = []
    for r in range(n):
        row = []
        for g in range(n):
            e = powers[r][g][i1]
            row.append({m: (sign_d * re, sign_d * im) for m, (re, im) in e.items()} if sign_d < 0 else dict(e))
        a_rows.append(row)
    pairs = [(a, b) for a in range(n) for b in range(a, n)]
    y_cols = [[dict(powers[r][a][b]) for r in range(n)] for a, b in pairs]
    # per-row content stripping (scales whole equations; solution unchanged)
    for r in range(n):
        entries = [a_rows[r][g] for g in range(n)] + [col[r] for col in y_cols]
        nonzero = [e for e in entries if e]
        if not nonzero:
            continue
        g = 0
        for e in nonzero:
            g = _gcd_int(g, p_int_content(e))
            if g == 1:
                break
        mono = None
        for e in nonzero:
            mm = p_mono_min(e)
            mono = mm if mono is None else _mono_min2(mono, mm)
            if mono == 0:
                break
        for e in entries:
            if not e:
                continue
            items = list(e.items())
            e.clear()
            for m, (re, im) in items:
                e[m - (mono or 0)] = (re // g, im // g) if g > 1 else (re, im)
    if progress:
        progress("solving linear system")
    sols = bareiss_solve_many(a_rows, y_cols)
    dbig = _clearing_candidate(d, n)
    values = {}
    unreduced = 0
    for (a, b), xs in zip(pairs, sols):
        mu = parts[a]
        nu = parts[b]
        ip = inner_product(mu, mu)
        for g in range(n):
            gamma = parts[g]
            val = xs[g] * ip
            val, ok = _reduce_entry(val, dbig)
            if not ok:
                unreduced += 1
            key = PantsTensor.key(mu, gamma, nu)
            prev = values.get(key)
            if prev is None:
                values[key] = val
            elif not (prev == val):
                raise AssertionError(
                    f"pants tensor symmetry violated at {key} (degree {d})"
                )
        if progress:
            progress(f"solved pair ({mu}, {nu})")
    if unreduced:
        raise AssertionError(
            f"{unreduced} pants entries escaped the structured denominator"
        )
    for key, val in values.items():
        if not val.is_even_in_sigma():
            raise AssertionError(f"odd s-parity in pants entry {key}")
    return PantsTensor(d, values)


def _gcd_int(a, b):
    from math import gcd

    return gcd(a, b)


def _mono_min2(m1, m2):
    from .backend import MASK, SHIFT1, SHIFT2

    e1 = min(m1 >> SHIFT1, m2 >> SHIFT1)
    e2 = min((m1 >> SHIFT2) & MASK, (m2 >> SHIFT2) & MASK)
    es = min(m1 & MASK, m2 & MASK)
    return pack(e1, e2, es)


def identity_polys(n):
    return [[dict(P_ONE) if i == j else {} for j in range(n)] for i in range(n)]


def _poly_mat_mul(a, b):
    n = len(a)
    out = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            x = a[i][k]
            if not x:
                continue
            for j in range(n):
                y = b[k][j]
                if not y:
                    continue
                out[i][j] = p_add(out[i][j], p_mul(x, y))
    return out


# ---------------------------------------------------------------------
# cache files
# ---------------------------------------------------------------------


def pants_cache_path(cache_dir, d):
    return os.path.join(cache_dir, f"pants_d{d}.json")


def save_pants(tensor, cache_dir):
    os.makedirs(cache_dir, exist_ok=True)
    parts = all_partitions(tensor.degree)
    obj = {
        "format": CACHE_FORMAT_VERSION,
        "degree": tensor.degree,
        "basis": [str(p) for p in parts],
        "entries": {
            "|".join(str(p) for p in key): scalar_to_json(val)
            for key, val in sorted(
                tensor.values.items(),
                key=lambda kv: tuple(p.parts for p in kv[0]),
                reverse=True,
            )
        },
    }
    path = pants_cache_path(cache_dir, tensor.degree)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(obj, fh, sort_keys=True)
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)
    return path


def load_pants(cache_dir, d):
    path = pants_cache_path(cache_dir, d)
    with open(path) as fh:
        obj = json.load(fh)
    if obj.get("format") != CACHE_FORMAT_VERSION:
        raise ValueError(f"unsupported cache format in {path}")
    if obj.get("degree") != d:
        raise ValueError(f"cache degree mismatch in {path}")
    parts = all_partitions(d)
    if obj.get("basis") != [str(p) for p in parts]:
        raise ValueError(f"cache basis order mismatch in {path}")
    values = {}
    from .partitions import parse_partition

    for key, sval in obj["entries"].items():
        trip = tuple(parse_partition(p) for p in key.split("|"))
        values[PantsTensor.key(*trip)] = scalar_from_json(sval)
    return PantsTensor(d, values)


_PANTS_MEMO = {}


def get_pants(d, cache_dir=None, progress=None):
    """Fetch the degree-d pants tensor: memory, then disk, then solve."""
    got = _PANTS_MEMO.get(d)
    if got is not None:
        return got
    if cache_dir:
        try:
            tensor = load_pants(cache_dir, d)
            _PANTS_MEMO[d] = tensor
            return tensor
        except (OSError, ValueError):
            pass
    tensor = reconstruct_pants(d, progress=progress)
    _PANTS_MEMO[d] = tensor
    if cache_dir:
        save_pants(tensor, cache_dir)
    return tensor


# ---------------------------------------------------------------------
# Frobenius data and operators
# ---------------------------------------------------------------------


@dataclass
class LocalCurveQuery:
    degree: int
    genus: int
    level: tuple
    boundary: list = field(default_factory=list)
    convention: str = "unstarred"

    def validate(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        if self.genus < 0:
            raise ValueError("genus must be >= 0")
        if self.convention not in ("starred", "unstarred"):
            raise ValueError("convention must be starred or unstarred")
        for lam in self.boundary:
            if lam.size != self.degree:
                raise ValueError(
                    f"boundary partition {lam} does not have size {self.degree}"
                )


class FrobeniusData:
    """Degree-d Frobenius structure derived from the starred pants tensor.

    Holds unstarred pants values, the diagonal tube metric, the unit, the
    four level-shift cap elements, and caches of multiplication/level
    operators.  Optional t1/t2 substitutions produce a specialized engine
    (used for the anti-diagonal and equal-parameter comparisons).
    """

    def __init__(self, degree, pants, t1_val=None, t2_val=None):
        if pants.degree != degree:
            raise ValueError("pants tensor degree mismatch")
        self.degree = degree
        self.parts = all_partitions(degree)
        self.index = {lam: i for i, lam in enumerate(self.parts)}
        self.t1_val = t1_val
        self.t2_val = t2_val

        def sub(x):
            if t1_val is None and t2_val is None:
                return x
            return specialize(x, t1_val=t1_val, t2_val=t2_val)

        t1 = sub(Scalar.t1_pow())
        t2 = sub(Scalar.t2_pow())
        self.t1 = t1
        self.t2 = t2
        self.m = t1 * t2
        d = degree
        # unstarred pants values
        self.pants = {}
        for key, val in pants.values.items():
            lsum = sum(p.length for p in key)
            self.pants[key] = sub(val) * Scalar.i_pow(lsum - d)
        # tube metric (diagonal) and raising factors
        self.metric = {}
        self.raise_factor = {}
        for lam in self.parts:
            z = zed(lam)
            ml = self.m ** lam.length
            self.raise_factor[lam] = ml * z
            self.metric[lam] = ONE / (ml * z)
        self.unit = Partition((1,) * d)
        self._mult = {}
        self._ops = {}
        self._op_pows = {}
        self._caps = None
        ident = identity(len(self.parts))
        if not mat_eq(self.mult_matrix(self.unit), ident):
            raise AssertionError("unit not identity")

    # -- structure ----------------------------------------------------

    def pants_unstarred(self, mu, gamma, nu):
        return self.pants[PantsTensor.key(mu, gamma, nu)]

    def mult_matrix(self, lam):
        """Matrix of multiplication by the basis element e_lam."""
        got = self._mult.get(lam)
        if got is not None:
            return got
        n = len(self.parts)
        mat = []
        for mu in self.parts:
            rf = self.raise_factor[mu]
            row = [self.pants_unstarred(lam, nu, mu) * rf for nu in self.parts]
            mat.append(row)
        self._mult[lam] = mat
        return mat

    def mult_by_vector(self, vec):
        """Matrix of multiplication by sum(vec[i] * e_i)."""
        n = len(self.parts)
        out = [[ZERO] * n for _ in range(n)]
        for lam, c in zip(self.parts, vec):
            if c.is_zero():
                continue
            m = self.mult_matrix(lam)
            for i in range(n):
                row = m[i]
                orow = out[i]
                for j in range(n):
                    if not row[j].is_zero():
                        orow[j] = orow[j] + row[j] * c
        return out

    def counit(self, vec):
        """Close one boundary with the level-(0,0) cap."""
        d = self.degree
        return vec[self.index[self.unit]] / (self.m ** d * factorial(d))

    def cap_vectors(self):
        """Raised cap elements for levels (0,0), (-1,0), (0,-1), (1,0), (0,1)."""
        if self._caps is not None:
            return self._caps
        n = len(self.parts)
        unit_vec = [ONE if lam == self.unit else ZERO for lam in self.parts]

        def cy_vec(side):
            out = []
            for lam in self.parts:
                val = cap_cy(lam, side=side)
                if self.t1_val is not None or self.t2_val is not None:
                    val = specialize(val, t1_val=self.t1_val, t2_val=self.t2_val)
                out.append(val * self.raise_factor[lam])
            return out

        eta = cy_vec("left")
        etabar = cy_vec("right")
        inv_eta = mat_vec(mat_inverse(self.mult_by_vector(eta)), unit_vec)
        inv_etabar = mat_vec(mat_inverse(self.mult_by_vector(etabar)), unit_vec)
        self._caps = {
            (0, 0): unit_vec,
            (-1, 0): eta,
            (0, -1): etabar,
            (1, 0): inv_eta,
            (0, 1): inv_etabar,
        }
        return self._caps

    def operator(self, name):
        """'G', 'A', or 'Abar' as a matrix."""
        got = self._ops.get(name)
        if got is not None:
            return got
        caps = self.cap_vectors()
        if name == "A":
            mat = self.mult_by_vector(caps[(-1, 0)])
        elif name == "Abar":
            mat = self.mult_by_vector(caps[(0, -1)])
        elif name == "G":
            handle = [ZERO] * len(self.parts)
            for lam in self.parts:
                col = [row[self.index[lam]] for row in self.mult_matrix(lam)]
                rf = self.raise_factor[lam]
                handle = [h + c * rf for h, c in zip(handle, col)]
            mat = self.mult_by_vector(handle)
        else:
            raise ValueError(f"unknown operator {name!r}")
        self._ops[name] = mat
        return mat

    def operator_power(self, name, k):
        if k == 0:
            return identity(len(self.parts))
        got = self._op_pows.get((name, k))
        if got is not None:
            return got
        base = self.operator(name)
        try:
            mat = mat_pow(base, k)
        except ZeroDivisionError:
            raise ZeroDivisionError(f"operator not invertible: {name}")
        self._op_pows[(name, k)] = mat
        return mat

    def level_genus_operator(self, g_exp, k1, k2):
        """G^{g_exp} A^{-k1} Abar^{-k2} as a matrix."""
        mat = self.operator_power("G", g_exp)
        if k1:
            mat = mat_mul(mat, self.operator_power("A", -k1))
        if k2:
            mat = mat_mul(mat, self.operator_power("Abar", -k2))
        return mat


def build_frobenius(d, pants, t1_val=None, t2_val=None):
    return FrobeniusData(d, pants, t1_val=t1_val, t2_val=t2_val)


def operators(frob):
    """The genus-adding and the two level-shift operators."""
    return {
        "G": OperatorMatrix(frob.degree, frob.operator("G")),
        "A": OperatorMatrix(frob.degree, frob.operator("A")),
        "Abar": OperatorMatrix(frob.degree, frob.operator("Abar")),
    }


_FROB_MEMO = {}


def get_frobenius(d, cache_dir=None):
    got = _FROB_MEMO.get(d)
    if got is None:
        got = build_frobenius(d, get_pants(d, cache_dir=cache_dir))
        _FROB_MEMO[d] = got
    return got


def evaluate(query, frob=None, cache_dir=None):
    """Exact partition function for the query, as a Scalar."""
    query.validate()
    d = query.degree
    g = query.genus
    k1, k2 = query.level
    if frob is None:
        frob = get_frobenius(d, cache_dir=cache_dir)
    boundary = list(query.boundary)
    r = len(boundary)
    if r == 0:
        op = frob.level_genus_operator(g - 1, k1, k2)
        val = mat_trace(op)
    else:
        vec = [
            ONE if lam == boundary[-1] else ZERO for lam in frob.parts
        ]
        for lam in reversed(boundary[:-1]):
            vec = mat_vec(frob.mult_matrix(lam), vec)
        op = frob.level_genus_operator(g, k1, k2)
        vec = mat_vec(op, vec)
        val = frob.counit(vec)
    if query.convention == "starred":
        val = val * star_factor(d, g, k1, k2, boundary)
    return val


# ---------------------------------------------------------------------
# series-mode evaluation (independent truncated-series route)
# ---------------------------------------------------------------------


def _smat(mat, order):
    return [[expand_u_series(x, order) for x in row] for row in mat]


def _svec(vec, order):
    return [expand_u_series(x, order) for x in vec]


def _smat_mul(a, b):
    n = len(a)
    m = len(b[0])
    k = len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = None
            for l in range(k):
                t = a[i][l] * b[l][j]
                acc = t if acc is None else acc + t
            row.append(acc)
        out.append(row)
    return out


def _smat_vec(a, v):
    out = []
    for row in a:
        acc = None
        for x, y in zip(row, v):
            t = x * y
            acc = t if acc is None else acc + t
        out.append(acc)
    return out


def _smat_inverse(a):
    n = len(a)
    work = [list(row) for row in a]
    # identity windows padded to match input truncation
    trunc = min(min(x.trunc for x in row) for row in work)
    inv = [
        [
            USeries(0, [ONE if i == j else ZERO] + [ZERO] * max(trunc, 0))
            for j in range(n)
        ]
        for i in range(n)
    ]
    for col in range(n):
        piv = None
        best = None
        for rr in range(col, n):
            v = work[rr][col].valuation()
            if v is not None and (best is None or v < best):
                best = v
                piv = rr
        if piv is None:
            raise ZeroDivisionError("singular series matrix")
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            inv[col], inv[piv] = inv[piv], inv[col]
        pinv = work[col][col].inverse()
        work[col] = [x * pinv for x in work[col]]
        inv[col] = [x * pinv for x in inv[col]]
        for rr in range(n):
            if rr == col:
                continue
            f = work[rr][col]
            if f.is_zero():
                continue
            work[rr] = [x - f * y for x, y in zip(work[rr], work[col])]
            inv[rr] = [x - f * y for x, y in zip(inv[rr], inv[col])]
    return inv


def _smat_pow(a, k):
    n = len(a)
    if k < 0:
        a = _smat_inverse(a)
        k = -k
    trunc = min(min(x.trunc for x in row) for row in a)
    out = [
        [USeries(0, [ONE if i == j else ZERO] + [ZERO] * max(trunc, 0)) for j in range(n)]
        for i in range(n)
    ]
    base = a
    while k:
        if k & 1:
            out = _smat_mul(out, base)
        k >>= 1
        if k:
            base = _smat_mul(base, base)
    return out


def evaluate_series(query, order, frob=None, cache_dir=None, margin=8):
    """Evaluate the query entirely in truncated u-series arithmetic."""
    query.validate()
    d = query.degree
    g = query.genus
    k1, k2 = query.level
    if frob is None:
        frob = get_frobenius(d, cache_dir=cache_dir)
    work_order = order + margin
    gmat = _smat(frob.operator("G"), work_order)
    amat = _smat(frob.operator("A"), work_order)
    bmat = _smat(frob.operator("Abar"), work_order)
    boundary = list(query.boundary)
    r = len(boundary)
    g_exp = g - 1 if r == 0 else g
    op = _smat_pow(gmat, g_exp)
    if k1:
        op = _smat_mul(op, _smat_pow(amat, -k1))
    if k2:
        op = _smat_mul(op, _smat_pow(bmat, -k2))
    if r == 0:
        acc = None
        for i in range(len(op)):
            acc = op[i][i] if acc is None else acc + op[i][i]
        val = acc
    else:
        vec = _svec(
            [ONE if lam == boundary[-1] else ZERO for lam in frob.parts], work_order
        )
        for lam in reversed(boundary[:-1]):
            vec = _smat_vec(_smat(frob.mult_matrix(lam), work_order), vec)
        vec = _smat_vec(op, vec)
        val = vec[frob.index[frob.unit]] * expand_u_series(
            ONE / (frob.m ** d * factorial(d)), work_order
        )
    if query.convention == "starred":
        val = val * star_factor(d, g, k1, k2, boundary)
    return val


# ---------------------------------------------------------------------
# q-form
# ---------------------------------------------------------------------


def to_q_form(a, sigma_shift):
    """Multiply by s^sigma_shift and verify the result depends on s^2 only.

    Returns the shifted Scalar in an even-s representation (so it is a
    rational function of q = -s^2); raises ValueError if odd powers remain.
    """
    val = a * Scalar.sigma_pow(sigma_shift)
    flip = val.sigma_flip()
    if not (val == flip):
        raise ValueError("odd s-powers remain")

    def even_only(poly):
        return all((m & MASK) % 2 == 0 for m in poly)

    if even_only(val.num) and even_only(val.den):
        return val
    # symmetrize the representation: multiply num and den by den(-s)
    sym = Scalar(p_mul(val.num, flip.den), p_mul(val.den, flip.den))
    if not (even_only(sym.num) and even_only(sym.den)):
        raise ValueError("odd s-powers remain")
    return sym


def hurwitz_structure_constant(alpha, beta, gamma):
    """u = 0 limit of the unstarred pants: (t1 t2)^{(d - sum l)/2} H(a,b,c)."""
    d = alpha.size
    h = hurwitz3(alpha, beta, gamma)
    if h == 0:
        return ZERO
    e2 = d - alpha.length - beta.length - gamma.length
    if e2 % 2:
        raise AssertionError("odd homogeneity with nonzero Hurwitz number")
    return Scalar.from_fraction(h) * Scalar.monomial(e1=e2 // 2, e2=e2 // 2)
