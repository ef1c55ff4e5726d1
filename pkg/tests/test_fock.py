"""Fock-space inner product and the transfer operator."""

from fractions import Fraction

import pytest

from localgw.fock import (
    FockVector,
    apply_m2,
    f_weight,
    inner_product,
    m2_matrix,
    scaled_transfer_poly_matrix,
)
from localgw.partitions import Partition, all_partitions
from localgw.scalar import ONE, ZERO, Scalar, expand_u_series

M = Scalar.monomial(e1=1, e2=1)
PSUM = Scalar.t1_pow() + Scalar.t2_pow()


def test_inner_product_examples():
    one = Partition((1,))
    two = Partition((2,))
    oo = Partition((1, 1))
    assert inner_product(one, one) == 1 / M
    assert inner_product(two, two) == -1 / (M * 2)
    assert inner_product(two, oo).is_zero()
    with pytest.raises(ValueError):
        inner_product(one, two)


def test_f_weights():
    assert f_weight(1).is_zero()
    # each F_k vanishes at u = 0 (zero constant term)
    for k in range(2, 7):
        ser = expand_u_series(f_weight(k), 4)
        v = ser.valuation()
        assert v is not None and v >= 1
    # F_k = -i(k cot(ku/2) - cot(u/2)): odd real u-series after -i
    for k in range(2, 5):
        ser = expand_u_series(Scalar.gaussian(0, 1) * f_weight(k), 5)
        for j in range(ser.offset, 6):
            c = ser.coeff(j)
            if j % 2 == 0:
                assert c.is_zero()


def test_transfer_degree_one_is_zero():
    mat = m2_matrix(1)
    assert mat.entries[0][0].is_zero()


def test_transfer_degree_two_hand_computation():
    two = Partition((2,))
    oo = Partition((1, 1))
    v = apply_m2(FockVector.basis(oo))
    assert v == FockVector(2, {two: ONE})
    w = apply_m2(FockVector.basis(two))
    assert w.coeffs[two] == -PSUM * f_weight(2)
    assert w.coeffs[oo] == -M


def test_transfer_self_adjoint():
    for d in range(2, 7):
        mat = m2_matrix(d)
        parts = all_partitions(d)
        for i, mu in enumerate(parts):
            for j in range(i + 1, len(parts)):
                nu = parts[j]
                lhs = mat.entries[i][j] * inner_product(mu, mu)
                rhs = mat.entries[j][i] * inner_product(nu, nu)
                assert lhs == rhs, (d, mu, nu)


def test_diagonal_weights_distinct_through_10():
    # diagonal at t1 t2 = 0 is -(t1+t2)/2 sum k m_k F_k; distinctness of
    # the F-combinations proves the reconstruction system nonsingular
    for d in range(2, 11):
        combos = []
        for mu in all_partitions(d):
            acc = ZERO
            for k, m in mu.multiplicities().items():
                acc = acc + f_weight(k) * (k * m)
            combos.append(acc)
        for i in range(len(combos)):
            for j in range(i + 1, len(combos)):
                assert not (combos[i] == combos[j]), (d, i, j)


def test_split_join_triangular_structure():
    # splitting entries (below diagonal) carry t1*t2; joining entries
    # (above) are constants; order is the canonical one
    for d in (3, 4):
        mat = m2_matrix(d)
        parts = all_partitions(d)
        n = len(parts)
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                ent = mat.entries[i][j]
                if ent.is_zero():
                    continue
                if i > j:
                    # below diagonal: divisible by t1 t2
                    assert (ent / M).t_homogeneous_degree() == 0
                else:
                    assert ent.t_homogeneous_degree() == 0


def test_scaled_matrix_consistency():
    for d in (2, 3):
        nmat, dpoly = scaled_transfer_poly_matrix(d)
        mat = m2_matrix(d)
        dval = Scalar(dict(dpoly))
        n = len(all_partitions(d))
        for i in range(n):
            for j in range(n):
                assert Scalar(dict(nmat[i][j])) == mat.entries[i][j] * dval * 2
