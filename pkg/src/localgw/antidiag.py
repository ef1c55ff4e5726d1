"""Closed-form oracle for the anti-diagonal torus action (t1 = t, t2 = -t).

At this specialization the level-(0,0) algebra diagonalizes over the base
field, and every closed partition function is an explicit character sum.
The formulas here are computed directly from character data and never
touch the gluing engine; they serve as an independent cross-check of it.
The variable t is carried in the t1 slot of Scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .characters import character, dim, qdim_ratio
from .partitions import all_partitions, zed
from .scalar import ONE, ZERO, Scalar


@dataclass
class AntiDiagQuery:
    degree: int
    genus: int
    level: tuple

    def validate(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        if self.genus < 0:
            raise ValueError("genus must be >= 0")


def closed_formula(query):
    """Closed anti-diagonal partition function as a Scalar in (t, s).

    Sum over irreducibles of
    (d!/dim)^{2g-2} (dim/dim_Q)^{k1+k2} Q^{c(k1-k2)/2}, with the global
    sign (-1)^{d(g-1-k2)} and prefactor t^{d(2g-2-k1-k2)}; Q^{1/2} = s.
    """
    query.validate()
    d = query.degree
    g = query.genus
    k1, k2 = query.level
    sign = -1 if (d * (g - 1 - k2)) % 2 else 1
    pref = Scalar.t1_pow(d * (2 * g - 2 - k1 - k2)) * sign
    total = ZERO
    fact = factorial(d)
    for rho in all_partitions(d):
        dr = dim(rho)
        term = Scalar.from_fraction(fact) / dr
        term = term ** (2 * g - 2)
        if k1 + k2:
            # dim/dim_Q = (dim/d!) * (d!/dim_Q)
            ratio = qdim_ratio(rho) * dr / fact
            term = term * ratio ** (k1 + k2)
        c = rho.total_content()
        e = c * (k1 - k2)
        if e:
            term = term * Scalar.sigma_pow(e)
        total = total + term
    return pref * total


def lambda_eigenvalue(d, rho):
    """(it)^{2d} (d!/dim)^2: genus-adding eigenvalue at the anti-diagonal."""
    it2d = Scalar.t1_pow(2 * d) * (-1 if d % 2 else 1)
    return it2d * (Scalar.from_fraction(factorial(d)) / dim(rho)) ** 2


def eta_eigenvalue(d, rho, bar=False):
    """Left (bar=False) or right (bar=True) annihilation eigenvalue."""
    c = rho.total_content()
    base = Scalar.t1_pow(d) * (-1 if (bar and d % 2) else 1)
    qshift = Scalar.sigma_pow(c if bar else -c)
    dimq_over_dim = (
        Scalar.from_fraction(factorial(d)) / dim(rho) / qdim_ratio(rho)
    )
    return base * qshift * dimq_over_dim


def idempotent_basis_change(d):
    """Matrices V (e-basis -> idempotents, columns) and its inverse W.

    Column rho of V holds (dim/d!) (it)^{l(alpha)-d} chi^rho_alpha over
    alpha; W inverts it via the orthogonality relations.  V @ W = 1.
    """
    parts = all_partitions(d)
    fact = factorial(d)

    def it_pow(k):
        # (i t)^k for any integer k
        return Scalar.t1_pow(k) * Scalar.i_pow(k)

    v = []
    for alpha in parts:
        row = []
        for rho in parts:
            chi = character(rho, alpha)
            if chi == 0:
                row.append(ZERO)
                continue
            coef = Scalar.from_fraction(dim(rho)) / fact
            row.append(coef * it_pow(alpha.length - d) * chi)
        v.append(row)
    w = []
    for rho in parts:
        row = []
        for alpha in parts:
            chi = character(rho, alpha)
            if chi == 0:
                row.append(ZERO)
                continue
            coef = Scalar.from_fraction(fact) / dim(rho) / zed(alpha)
            row.append(coef * it_pow(d - alpha.length) * chi)
        w.append(row)
    return v, w
