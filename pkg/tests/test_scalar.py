"""Exact field arithmetic, u-expansion, specialization, wire format."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from localgw.scalar import (
    ONE,
    ZERO,
    Scalar,
    arith,
    equals,
    expand_u_series,
    format_scalar,
    scalar_from_json,
    scalar_to_json,
    specialize,
)

T1 = Scalar.t1_pow()
T2 = Scalar.t2_pow()
S = Scalar.sigma_pow(1)


def test_basic_arith_examples():
    assert arith(S, S, "mul") == Scalar.sigma_pow(2)
    assert arith(T1 / T2, T2 / T1, "add") == (T1 * T1 + T2 * T2) / (T1 * T2)
    assert (Scalar.sigma_pow(2) - 1) / (S + 1) == S - 1


def test_zero_divisor_error():
    with pytest.raises(ZeroDivisionError):
        arith(ONE, ZERO, "div")


def test_equals_examples():
    assert equals(Scalar.from_int(2) * S / 2, S)
    assert not equals(T1 / T2, T2 / T1)
    assert equals((1 - Scalar.sigma_pow(4)) / (1 - Scalar.sigma_pow(2)), 1 + Scalar.sigma_pow(2))


def test_negative_exponents_are_cleared():
    x = Scalar.sigma_pow(-3)
    assert x * Scalar.sigma_pow(3) == ONE
    y = Scalar.t1_pow(-2)
    assert y * Scalar.t1_pow(2) == ONE


# -- randomized field axioms -----------------------------------------


def scalars():
    coeff = st.integers(min_value=-4, max_value=4)
    mono = st.tuples(
        st.integers(0, 2), st.integers(0, 2), st.integers(0, 3), coeff, coeff
    )

    def build(monos, dens):
        num = ZERO
        for e1, e2, es, re, im in monos:
            num = num + Scalar.monomial(e1=e1, e2=e2, es=es, re=re, im=im)
        den = ZERO
        for e1, e2, es, re, im in dens:
            den = den + Scalar.monomial(e1=e1, e2=e2, es=es, re=re, im=im)
        if den.is_zero():
            den = ONE
        return num / den

    return st.builds(
        build,
        st.lists(mono, min_size=0, max_size=3),
        st.lists(mono, min_size=1, max_size=2),
    )


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == ONE


@settings(max_examples=40, deadline=None)
@given(scalars(), scalars())
def test_equals_agrees_with_random_evaluation(a, b):
    eq = a == b
    # rational evaluation at 20 deterministic points must agree whenever
    # the denominators survive the substitution
    pts = [
        (Fraction(2, 1 + k), Fraction(3 + k, 2), Fraction(5, 3 + 2 * k))
        for k in range(20)
    ]
    for x1, x2, xs in pts:
        try:
            va = specialize(a, t1_val=x1, t2_val=x2, sigma_val=xs)
            vb = specialize(b, t1_val=x1, t2_val=x2, sigma_val=xs)
        except ValueError:
            continue
        if eq:
            assert va == vb
        elif va != vb:
            return
    # if all sampled points agreed, the scalars must be equal
    if not eq:
        # extremely unlikely for unequal rational functions; recheck exact
        assert a != b


# -- u-series ---------------------------------------------------------


def taylor_2i_sin_half(order):
    # independent Taylor oracle for s - 1/s = 2i sin(u/2)
    out = []
    for n in range(order + 1):
        if n % 2 == 1:
            c = Fraction(1, 2**n) * Fraction((-1) ** ((n - 1) // 2))
            fact = 1
            for j in range(2, n + 1):
                fact *= j
            out.append(Scalar.gaussian(0, 2 * c / fact))
        else:
            out.append(ZERO)
    return out


def test_expand_two_i_sin_half():
    ser = expand_u_series(S - Scalar.sigma_pow(-1), 7)
    oracle = taylor_2i_sin_half(7)
    for k in range(8):
        assert ser.coeff(k) == oracle[k], k


def test_expand_two_sin_half():
    ser = expand_u_series(Scalar.gaussian(0, -1) * (S - Scalar.sigma_pow(-1)), 5)
    assert ser.coeff(1) == ONE
    assert ser.coeff(3) == Scalar.from_fraction(Fraction(-1, 24))
    assert ser.coeff(5) == Scalar.from_fraction(Fraction(1, 1920))
    assert ser.coeff(0).is_zero() and ser.coeff(2).is_zero()


def test_expand_cot_pole():
    # (s^2+1)/(s^2-1) = -i cot(u/2): simple pole, leading coefficient -2i
    ser = expand_u_series((Scalar.sigma_pow(2) + 1) / (Scalar.sigma_pow(2) - 1), 3)
    assert ser.offset == -1
    assert ser.coeff(-1) == Scalar.gaussian(0, -2)
    assert ser.coeff(0).is_zero()
    assert ser.coeff(1) == Scalar.gaussian(0, Fraction(1, 6))


def test_expand_negative_order_rejected():
    with pytest.raises(ValueError):
        expand_u_series(ONE, -1)


@settings(max_examples=25, deadline=None)
@given(scalars(), scalars())
def test_expand_is_ring_morphism(a, b):
    order = 6
    sa = expand_u_series(a, order)
    sb = expand_u_series(b, order)
    sab = expand_u_series(a * b, order)
    prod = sa * sb
    lo = max(sab.offset, prod.offset)
    hi = min(sab.trunc, prod.trunc)
    for k in range(lo, hi + 1):
        assert sab.coeff(k) == prod.coeff(k)
    ssum = expand_u_series(a + b, order)
    plus = sa + sb
    lo = max(ssum.offset, plus.offset)
    hi = min(ssum.trunc, plus.trunc)
    for k in range(lo, hi + 1):
        assert ssum.coeff(k) == plus.coeff(k)


# -- specialization ---------------------------------------------------


def test_specialize_antidiagonal_examples():
    assert specialize(T1 + T2, t1_val=T1, t2_val=-T1).is_zero()
    assert specialize(T1 * T2, t1_val=T1, t2_val=-T1) == -(T1**2)
    with pytest.raises(ValueError):
        specialize(ONE / (T1 + T2), t1_val=T1, t2_val=-T1)


def test_specialize_sigma_cancels_removable_zero():
    # (s^2-1)/(s-1) has a removable point at s=1
    x = (Scalar.sigma_pow(2) - 1) / (S - 1)
    assert specialize(x, sigma_val=1) == Scalar.from_int(2)


def test_conjugate_and_reality():
    x = (T1 + T2) / (T1 * T2)
    assert x.is_real()
    y = Scalar.gaussian(0, 1) * x
    assert not y.is_real()


# -- JSON -------------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(scalars())
def test_json_round_trip(a):
    assert scalar_from_json(scalar_to_json(a)) == a


def test_json_accepts_rational_coefficients():
    obj = {
        "num": [{"c": ["1", "2", "0", "1"], "t1": 0, "t2": 0, "s": 1}],
        "den": [{"c": ["1", "1", "0", "1"], "t1": 0, "t2": 0, "s": 0}],
    }
    assert scalar_from_json(obj) == S / 2


def test_json_deterministic():
    import json

    a = (T1 + T2 + S) / (T1 * T2 * 3)
    s1 = json.dumps(scalar_to_json(a), sort_keys=True)
    s2 = json.dumps(scalar_to_json((T1 + S + T2) / (3 * T2 * T1)), sort_keys=True)
    assert s1 == s2


def test_format_smoke():
    assert format_scalar(ONE) == "1"
    assert "t1" in format_scalar(T1 / T2)
