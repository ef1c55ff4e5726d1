"""Symmetric-group characters, Hurwitz numbers, and q-dimensions.

Irreducible characters are computed by the Murnaghan-Nakayama border-strip
recursion on beta-sets (first-column hook lengths), memoized per pair of
partitions.  Hurwitz numbers for three branch points on the sphere come
from the standard character sum and are exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import Partition, all_partitions, zed
from .scalar import Scalar


def _beta_set(rho):
    parts = rho.parts
    n = len(parts)
    return tuple(parts[i] + (n - 1 - i) for i in range(n))


def _beta_to_partition(beta):
    n = len(beta)
    desc = sorted(beta, reverse=True)
    return tuple(b - (n - 1 - i) for i, b in enumerate(desc) if b - (n - 1 - i) > 0)


@lru_cache(maxsize=None)
def _char_rec(rho_parts, lam_parts):
    if not lam_parts:
        return 1
    rho = Partition(rho_parts)
    k = lam_parts[0]
    rest = lam_parts[1:]
    beta = list(_beta_set(rho))
    bset = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        nbeta = beta[:idx] + beta[idx + 1 :] + [nb]
        new_rho = _beta_to_partition(tuple(nbeta))
        term = _char_rec(new_rho, rest)
        total += -term if height % 2 else term
    return total


def character(rho, lam):
    """Character of the irreducible rho on the conjugacy class lam."""
    if rho.size != lam.size:
        raise ValueError("character requires |rho| == |lam|")
    return _char_rec(rho.parts, tuple(sorted(lam.parts, reverse=True)))


def dim(rho):
    """Dimension of the irreducible rho by the hook length formula."""
    n = rho.size
    out = factorial(n)
    for h in rho.hooks():
        out //= h
    return out


class CharacterTable:
    """Full character table of S_d, lazily filled and cached per degree."""

    def __init__(self, d):
        self.degree = d
        parts = all_partitions(d)
        self.table = {
            (rho, lam): character(rho, lam) for rho in parts for lam in parts
        }

    def __getitem__(self, key):
        return self.table[key]


@lru_cache(maxsize=None)
def character_table(d):
    return CharacterTable(d)


def hurwitz3(alpha, beta, gamma):
    """Hurwitz number of the sphere with three ramification profiles."""
    d = alpha.size
    if beta.size != d or gamma.size != d:
        raise ValueError("hurwitz3 requires equal partition sizes")
    za, zb, zc = zed(alpha), zed(beta), zed(gamma)
    total = Fraction(0)
    for rho in all_partitions(d):
        chi_a = character(rho, alpha)
        if chi_a == 0:
            continue
        chi_b = character(rho, beta)
        if chi_b == 0:
            continue
        chi_c = character(rho, gamma)
        if chi_c == 0:
            continue
        total += Fraction(factorial(d) * chi_a * chi_b * chi_c, dim(rho) * za * zb * zc)
    return total


def qdim_ratio(rho):
    """d!/dim_Q(rho) = prod over cells of (-i)(s^h - s^-h), as a Scalar."""
    out = Scalar.from_int(1)
    total_h = 0
    for h in rho.hooks():
        total_h += h
        # (-i)(s^{2h} - 1) = -i*s^{2h} + i
        out = out * (Scalar.monomial(es=2 * h, re=0, im=-1) + Scalar.gaussian(0, 1))
    return out / Scalar.sigma_pow(total_h)


def schur_specialized(rho):
    """Schur function at (1, Q, Q^2, ...) with Q = s^2, as a Scalar."""
    num = Scalar.sigma_pow(2 * rho.n_stat())
    den = Scalar.from_int(1)
    for h in rho.hooks():
        den = den * (Scalar.from_int(1) - Scalar.sigma_pow(2 * h))
    return num / den
