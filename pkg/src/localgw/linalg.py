"""Exact linear algebra over the Scalar field.

Two layers: small dense matrix helpers over Scalars (products, powers,
Gauss-Jordan inverse), and a fraction-free Bareiss elimination over raw
polynomial dicts used by the pair-of-pants reconstruction, where the same
coefficient matrix is solved against many right-hand sides at once.
"""

from __future__ import annotations

from .backend import p_divexact, p_mul, p_neg, p_sub
from .scalar import ONE, P_ONE, ZERO, Scalar


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n = len(a)
    k = len(b)
    m = len(b[0])
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = ZERO
            for l in range(k):
                x = ai[l]
                if x.is_zero():
                    continue
                y = b[l][j]
                if y.is_zero():
                    continue
                acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        acc = ZERO
        for x, y in zip(row, v):
            if not x.is_zero() and not y.is_zero():
                acc = acc + x * y
        out.append(acc)
    return out


def mat_trace(a):
    acc = ZERO
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_scale(a, s):
    return [[x * s for x in row] for row in a]


def mat_inverse(a):
    """Gauss-Jordan inverse over the Scalar field; raises on singularity."""
    n = len(a)
    work = [list(row) + irow for row, irow in zip(a, identity(n))]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not work[r][col].is_zero():
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
        inv_p = work[col][col].inverse()
        work[col] = [x * inv_p for x in work[col]]
        for r in range(n):
            if r == col:
                continue
            f = work[r][col]
            if f.is_zero():
                continue
            work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def mat_pow(a, k):
    n = len(a)
    if k < 0:
        a = mat_inverse(a)
        k = -k
    out = identity(n)
    base = a
    while k:
        if k & 1:
            out = mat_mul(out, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return out


def bareiss_solve_many(a_polys, y_cols):
    """Solve A x = y for many columns, fraction-free.

    ``a_polys`` is an n x n matrix of polynomial dicts, ``y_cols`` a list of
    n-long columns of polynomial dicts.  Returns one list of Scalars per
    input column.  Elimination follows the Bareiss scheme, so intermediate
    entries are minors of the augmented integer-coefficient matrix and all
    interior divisions are exact.
    """
    n = len(a_polys)
    m = len(y_cols)
    rows = [list(a_polys[i]) + [col[i] for col in y_cols] for i in range(n)]
    width = n + m
    prev = dict(P_ONE)
    for k in range(n):
        piv_row = None
        for r in range(k, n):
            if rows[r][k]:
                piv_row = r
                break
        if piv_row is None:
            raise ZeroDivisionError("singular system")
        if piv_row != k:
            rows[k], rows[piv_row] = rows[piv_row], rows[k]
        piv = rows[k][k]
        for r in range(k + 1, n):
            lead = rows[r][k]
            if not lead:
                for j in range(k + 1, width):
                    if rows[r][j]:
                        q = p_divexact(p_mul(piv, rows[r][j]), prev)
                        if q is None:
                            raise AssertionError("non-exact Bareiss division")
                        rows[r][j] = q
                continue
            for j in range(k + 1, width):
                t = p_sub(p_mul(piv, rows[r][j]), p_mul(lead, rows[k][j]))
                if t:
                    t = p_divexact(t, prev)
                    if t is None:
                        raise AssertionError("non-exact Bareiss division")
                rows[r][j] = t
            rows[r][k] = {}
        prev = piv
    # back substitution in the Scalar field
    solutions = []
    for c in range(m):
        col = n + c
        x = [ZERO] * n
        for i in range(n - 1, -1, -1):
            acc = Scalar(dict(rows[i][col]))
            for j in range(i + 1, n):
                if rows[i][j] and not x[j].is_zero():
                    acc = acc - Scalar(dict(rows[i][j])) * x[j]
            x[i] = acc / Scalar(dict(rows[i][i]))
        solutions.append(x)
    return solutions
