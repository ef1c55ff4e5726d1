"""Character values, Hurwitz numbers (with a brute-force cover-counting
oracle), and q-dimension specializations."""

from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from localgw.characters import (
    character,
    character_table,
    dim,
    hurwitz3,
    qdim_ratio,
    schur_specialized,
)
from localgw.partitions import Partition, all_partitions, zed
from localgw.scalar import ONE, Scalar, expand_u_series


def cycle_type(perm):
    n = len(perm)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        l = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            l += 1
        out.append(l)
    return tuple(sorted(out, reverse=True))


def brute_force_hurwitz(alpha, beta, gamma):
    """Count (a, b, c) in the three classes with a*b*c = 1, over d!."""
    d = alpha.size
    perms = list(permutations(range(d)))
    by_type = {}
    for p in perms:
        by_type.setdefault(cycle_type(p), []).append(p)
    count = 0
    cb = by_type.get(beta.parts, [])
    target = tuple(range(d))
    inv = {p: tuple(sorted(range(d), key=lambda i: p[i])) for p in perms}
    for a in by_type.get(alpha.parts, []):
        for b in cb:
            ab = tuple(a[b[i]] for i in range(d))
            # need c with ab*c = id, i.e. c = (ab)^-1, of type gamma
            if cycle_type(ab) == gamma.parts:
                count += 1
    return Fraction(count, factorial(d))


def test_character_examples():
    assert character(Partition((2,)), Partition((1, 1))) == 1
    assert character(Partition((1, 1)), Partition((2,))) == -1
    assert character(Partition((2, 1)), Partition((1, 1, 1))) == 2


def test_character_size_mismatch():
    with pytest.raises(ValueError):
        character(Partition((2,)), Partition((1, 1, 1)))


def test_dim_matches_hook_formula_and_character():
    for d in range(1, 9):
        for rho in all_partitions(d):
            byhook = factorial(d)
            for h in rho.hooks():
                byhook //= h
            assert dim(rho) == byhook
            assert dim(rho) == character(rho, Partition((1,) * d))
    assert dim(Partition((2, 1))) == 2
    assert dim(Partition((2, 2))) == 2
    assert dim(Partition((5,))) == 1


def test_column_orthogonality():
    for d in range(1, 9):
        parts = all_partitions(d)
        tbl = character_table(d)
        for a in parts:
            for b in parts:
                s = sum(tbl[(r, a)] * tbl[(r, b)] for r in parts)
                assert s == (zed(a) if a == b else 0)


def test_hurwitz_examples_and_symmetry():
    h = hurwitz3(Partition((2,)), Partition((2,)), Partition((1, 1)))
    assert h == Fraction(1, 2)
    assert hurwitz3(Partition((1,)), Partition((1,)), Partition((1,))) == 1
    assert hurwitz3(Partition((1, 1)), Partition((1, 1)), Partition((1, 1))) == Fraction(1, 2)
    assert hurwitz3(Partition((3,)), Partition((3,)), Partition((1, 1, 1))) == Fraction(1, 3)
    with pytest.raises(ValueError):
        hurwitz3(Partition((2,)), Partition((1,)), Partition((2,)))


def test_hurwitz_against_brute_force():
    for d in (2, 3, 4):
        parts = all_partitions(d)
        for a in parts:
            for b in parts:
                for c in parts:
                    assert hurwitz3(a, b, c) == brute_force_hurwitz(a, b, c), (a, b, c)


def test_hurwitz_permutation_symmetry():
    parts = all_partitions(4)
    import itertools

    for trip in itertools.combinations(parts, 3):
        vals = {hurwitz3(*p) for p in permutations(trip)}
        assert len(vals) == 1


def test_qdim_ratio_single_box():
    # d!/dim_Q at a single box is -i(s - 1/s) = 2 sin(u/2)
    val = qdim_ratio(Partition((1,)))
    ser = expand_u_series(val, 3)
    assert ser.coeff(1) == ONE
    assert ser.coeff(3) == Scalar.from_fraction(Fraction(-1, 24))


def test_qdim_ratio_leading_term():
    # leading u-coefficient of d!/dim_Q rho is (d!/dim rho) * u^d
    for d in range(1, 6):
        for rho in all_partitions(d):
            ser = expand_u_series(qdim_ratio(rho), d)
            v = ser.valuation()
            assert v == d
            assert ser.coeff(d) == Scalar.from_fraction(
                Fraction(factorial(d), dim(rho))
            )


def test_qdim_zeroth_power_is_one():
    assert qdim_ratio(Partition((2, 1))) ** 0 == ONE


def test_schur_specialized_examples():
    q = Scalar.sigma_pow(2)
    assert schur_specialized(Partition((1,))) == 1 / (1 - q)
    assert schur_specialized(Partition((2,))) == 1 / ((1 - q) * (1 - q**2))


def test_schur_consistency_with_qdim():
    # s_rho = Q^{-(d+c)/2} i^d dim_Q/d! for all rho of size <= 6
    for d in range(1, 7):
        for rho in all_partitions(d):
            c = rho.total_content()
            lhs = schur_specialized(rho)
            rhs = (
                Scalar.sigma_pow(-(d + c))
                * Scalar.i_pow(d)
                / qdim_ratio(rho)
            )
            assert lhs == rhs, rho


def test_schur_conjugation_involution():
    # omega-image: substituting Q -> Q in the conjugate matches the
    # expansion with signs (-1)^{d-l(alpha)} on power sums
    for d in range(1, 7):
        for rho in all_partitions(d):
            lhs = schur_specialized(rho.conjugate())
            # expand s_{rho'} via characters: sum_alpha chi^rho_alpha/z(alpha)
            # (-1)^{d-l(alpha)} p_alpha(Q) with p_k(Q) = 1/(1-Q^k)
            acc = Scalar.from_int(0)
            for alpha in all_partitions(d):
                chi = character(rho, alpha)
                if chi == 0:
                    continue
                term = Scalar.from_fraction(Fraction(chi, zed(alpha)))
                if (d - alpha.length) % 2:
                    term = -term
                for part in alpha.parts:
                    term = term / (1 - Scalar.sigma_pow(2 * part))
                acc = acc + term
            assert lhs == acc, rho
