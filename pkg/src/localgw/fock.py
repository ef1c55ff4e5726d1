"""Degree-d Fock space, its nonstandard inner product, and the transfer
operator built from one simple-transposition insertion.

The operator acts on the basis indexed by partitions of d.  Its diagonal
part carries the weights F_k (rational in q = -s^2); the below-diagonal
part splits one part into two (weight t1*t2), the above-diagonal part
joins two parts into one.  The action is computed combinatorially on
basis vectors with the 1/z(mu) normalisation.
"""

from __future__ import annotations

from functools import lru_cache

from .backend import p_add, p_mul, p_mul_term, pack
from .partitions import Partition, all_partitions, zed
from .scalar import ONE, P_ONE, ZERO, Scalar


class FockVector:
    """Finitely supported map Partition(of d) -> Scalar."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs=None):
        self.degree = degree
        self.coeffs = {}
        if coeffs:
            for lam, c in coeffs.items():
                if lam.size != degree:
                    raise ValueError("basis partition of wrong degree")
                if not c.is_zero():
                    self.coeffs[lam] = c

    @staticmethod
    def basis(lam):
        return FockVector(lam.size, {lam: ONE})

    def add_term(self, lam, c):
        cur = self.coeffs.get(lam)
        cur = c if cur is None else cur + c
        if cur.is_zero():
            self.coeffs.pop(lam, None)
        else:
            self.coeffs[lam] = cur

    def __eq__(self, other):
        keys = set(self.coeffs) | set(other.coeffs)
        return all(
            self.coeffs.get(k, ZERO) == other.coeffs.get(k, ZERO) for k in keys
        )

    def __repr__(self):
        return f"FockVector(d={self.degree}, {self.coeffs!r})"


class OperatorMatrix:
    """p(d) x p(d) matrix of Scalars in the canonical partition order."""

    __slots__ = ("degree", "entries")

    def __init__(self, degree, entries):
        n = len(all_partitions(degree))
        if len(entries) != n or any(len(r) != n for r in entries):
            raise ValueError("operator matrix has wrong shape")
        self.degree = degree
        self.entries = entries

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]


def f_weight(k):
    """F_k = k((-q)^k+1)/((-q)^k-1) - ((-q)+1)/((-q)-1) with -q = s^2."""
    if k == 1:
        return ZERO
    sk = Scalar.sigma_pow(2 * k)
    s1 = Scalar.sigma_pow(2)
    one = ONE
    return (sk + one) * k / (sk - one) - (s1 + one) / (s1 - one)


def inner_product(mu, nu):
    """<mu|nu> = (-1)^{|mu|-l(mu)} / ((t1 t2)^{l(mu)} z(mu)) delta_{mu,nu}."""
    if mu.size != nu.size:
        raise ValueError("inner product requires equal degrees")
    if mu != nu:
        return ZERO
    sign = -1 if (mu.size - mu.length) % 2 else 1
    return Scalar.from_int(sign) / (
        Scalar.monomial(e1=mu.length, e2=mu.length) * zed(mu)
    )


def _splits_joins(mu):
    """All single split/join moves from mu with their integer weights.

    Returns (joins, splits): lists of (target Partition, weight) where the
    join weight is the plain integer and the split weight is the integer
    to be multiplied by t1*t2.
    """
    parts = list(mu.parts)
    mults = mu.multiplicities()
    joins = []
    distinct = sorted(mults)
    for a_i, k in enumerate(distinct):
        for l in distinct[a_i:]:
            if k == l and mults[k] < 2:
                continue
            rest = list(parts)
            rest.remove(k)
            rest.remove(l)
            rest.append(k + l)
            nu = Partition(rest)
            m_new = nu.mult(k + l)
            w = (k + l) * m_new if k != l else k * m_new
            joins.append((nu, w))
    splits = []
    for s in sorted(set(parts)):
        if s < 2:
            continue
        for k in range(1, s // 2 + 1):
            l = s - k
            rest = list(parts)
            rest.remove(s)
            rest.extend((k, l))
            nu = Partition(rest)
            if k != l:
                w = -k * l * nu.mult(k) * nu.mult(l)
            else:
                w = -(k * k) * nu.mult(k) * (nu.mult(k) - 1) // 2
            splits.append((nu, w))
    return joins, splits


def _column_action(mu):
    """Action on |mu>: (diag weight pieces, joins, splits).

    diag is the list of (k, k*m_k(mu)) pairs entering the F_k sum.
    """
    diag = [(k, k * m) for k, m in sorted(mu.multiplicities().items())]
    joins, splits = _splits_joins(mu)
    return diag, joins, splits


def apply_transfer(v):
    """Apply the degree-preserving transfer operator to a Fock vector."""
    out = FockVector(v.degree)
    t1t2 = Scalar.monomial(e1=1, e2=1)
    p12 = Scalar.t1_pow() + Scalar.t2_pow()
    for mu, c in v.coeffs.items():
        diag, joins, splits = _column_action(mu)
        acc = ZERO
        for k, km in diag:
            if k == 1:
                continue
            acc = acc + f_weight(k) * km
        if not acc.is_zero():
            out.add_term(mu, c * acc * p12 * Scalar.from_fraction("-1/2"))
        for nu, w in joins:
            out.add_term(nu, c * w)
        for nu, w in splits:
            out.add_term(nu, c * w * t1t2)
    return out


# spec name
apply_m2 = apply_transfer


@lru_cache(maxsize=None)
def m2_matrix(d):
    """Matrix of the transfer operator on the degree-d Fock space."""
    if d < 1:
        raise ValueError("degree must be positive")
    parts = all_partitions(d)
    index = {lam: i for i, lam in enumerate(parts)}
    n = len(parts)
    cols = []
    for nu in parts:
        w = apply_transfer(FockVector.basis(nu))
        col = [ZERO] * n
        for lam, c in w.coeffs.items():
            col[index[lam]] = c
        cols.append(col)
    entries = [[cols[j][i] for j in range(n)] for i in range(n)]
    return OperatorMatrix(d, entries)


def scaled_transfer_poly_matrix(d):
    """Integer-polynomial matrix N = 2*D*M and the clearing factor D.

    D = (s^2-1) * prod_{k=2..d} (s^{2k}-1) clears every F_k denominator, so
    N has Gaussian-integer polynomial entries; N^r equals (2D)^r M^r.
    Returns (N as list of list of poly dicts, D as poly dict).
    """
    parts = all_partitions(d)
    index = {lam: i for i, lam in enumerate(parts)}
    n = len(parts)
    s2m1 = {pack(0, 0, 2): (1, 0), 0: (-1, 0)}
    dpoly = dict(s2m1)
    for k in range(2, d + 1):
        dpoly = p_mul(dpoly, {pack(0, 0, 2 * k): (1, 0), 0: (-1, 0)})
    # D * F_k as a polynomial
    dfk = {}
    for k in range(2, d + 1):
        sk = {pack(0, 0, 2 * k): (1, 0), 0: (1, 0)}
        skm = {pack(0, 0, 2 * k): (1, 0), 0: (-1, 0)}
        s1p = {pack(0, 0, 2): (1, 0), 0: (1, 0)}
        num = p_add(
            p_mul_term(p_mul(sk, s2m1), 0, k, 0),
            {m: (-re, -im) for m, (re, im) in p_mul(s1p, skm).items()},
        )
        rest = dict(P_ONE)
        for j in range(2, d + 1):
            if j != k:
                rest = p_mul(rest, {pack(0, 0, 2 * j): (1, 0), 0: (-1, 0)})
        dfk[k] = p_mul(num, rest)
    mat = [[{} for _ in range(n)] for _ in range(n)]
    tsum = {pack(1, 0, 0): (1, 0), pack(0, 1, 0): (1, 0)}
    for nu in parts:
        j = index[nu]
        diag, joins, splits = _column_action(nu)
        acc = {}
        for k, km in diag:
            if k == 1:
                continue
            acc = p_add(acc, p_mul_term(dfk[k], 0, km, 0))
        if acc:
            mat[index[nu]][j] = p_mul_term(p_mul(acc, tsum), 0, -1, 0)
        for tgt, w in joins:
            mat[index[tgt]][j] = p_add(
                mat[index[tgt]][j], p_mul_term(dpoly, 0, 2 * w, 0)
            )
        for tgt, w in splits:
            mat[index[tgt]][j] = p_add(
                mat[index[tgt]][j],
                p_mul_term(dpoly, pack(1, 1, 0), 2 * w, 0),
            )
    return mat, dpoly
