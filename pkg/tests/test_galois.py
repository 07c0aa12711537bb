import math

import pytest

from wittbox.errors import ConfigError, ValidationError
from wittbox.fqfield import field_params, fq, fq_enumerate
from wittbox.galois import (
    GRParams,
    from_digits,
    gr_enumerate,
    gr_make,
    gr_one,
    gr_to_fq,
    gr_zero,
    int_to_gr,
    ord_p,
    reduce_precision,
    teichmuller_lift,
    to_digits,
    witt_digit_op,
)
from wittbox.witt import PRODUCT, SUM

Z8 = GRParams(field_params(2), 3)
Z9 = GRParams(field_params(3), 2)
GR4_2 = GRParams(field_params(2, 2), 2)


def test_params_validation():
    with pytest.raises(ValidationError):
        GRParams(field_params(2), 0)
    assert Z8.char == 8
    assert GR4_2.char == 4


def test_basic_arithmetic_mod8():
    a = int_to_gr(5, Z8)
    b = int_to_gr(6, Z8)
    assert (a + b).coeffs == (3,)
    assert (a * b).coeffs == (6,)
    assert (-a).coeffs == (3,)
    assert (a ** 2).coeffs == (1,)
    assert (a - a).is_zero()


def test_gr42_multiplication():
    # oracle: t * t = t + 1 mod (t^2 + t + 1) lifts to 3 + 3t mod 4,
    # since t^2 = -t - 1 = 3 + 3t over Z/4.
    t = gr_make(GR4_2, [0, 1])
    assert (t * t).coeffs == (3, 3)


def test_cross_ring_mismatch():
    with pytest.raises(ConfigError):
        int_to_gr(1, Z8) + int_to_gr(1, Z9)


def test_residue_and_reduce():
    a = gr_make(GR4_2, [3, 2])
    assert gr_to_fq(a).coeffs == (1, 0)
    assert reduce_precision(int_to_gr(6, Z8), 2).coeffs == (2,)
    with pytest.raises(ValidationError):
        reduce_precision(int_to_gr(6, Z8), 4)


def test_teichmuller_fixed_points():
    for params in (Z8, Z9, GR4_2):
        q = params.field.q
        for a in fq_enumerate(params.field):
            z = teichmuller_lift(a, params)
            assert gr_to_fq(z) == a  # reduces to a mod p
            assert z ** q == z  # q-th power fixed point
    # frozen oracle: tau(2) = 8 in Z/9 (8^3 = 512 = 8 mod 9, 8 = 2 mod 3)
    assert teichmuller_lift(fq(Z9.field, 2), Z9).coeffs == (8,)


def test_digit_codec_roundtrip():
    for params in (Z8, Z9, GR4_2):
        p = params.p
        for y in gr_enumerate(params):
            digits = to_digits(y)
            assert len(digits) == params.precision
            assert from_digits(digits, params) == y
    # frozen oracle: 2 in GR(9,1) has digits (2, 1): 2 = tau(2) + 3*tau(1) = 8 + 3 mod 9
    assert tuple(d.coeffs for d in to_digits(int_to_gr(2, Z9))) == ((2,), (1,))


def test_from_digits_length_check():
    with pytest.raises(ValidationError):
        from_digits((fq(Z8.field, 1),), Z8)


def test_witt_digit_op_matches_direct():
    for params in (Z8, GR4_2):
        for a in gr_enumerate(params):
            da = to_digits(a)
            for b in gr_enumerate(params):
                db = to_digits(b)
                assert from_digits(witt_digit_op(da, db, SUM, params), params) == a + b
                assert from_digits(witt_digit_op(da, db, PRODUCT, params), params) == a * b


def test_witt_digit_op_shape_checks():
    da = to_digits(int_to_gr(3, Z8))
    with pytest.raises(ValidationError):
        witt_digit_op(da, da[:2], SUM, Z8)
    with pytest.raises(ValidationError):
        witt_digit_op(da[:2], da[:2], SUM, Z8)


def test_ord_p():
    assert ord_p(int_to_gr(6, Z8)) == 1
    assert ord_p(int_to_gr(4, Z8)) == 2
    assert ord_p(int_to_gr(1, Z8)) == 0
    assert ord_p(gr_zero(Z8)) == math.inf
    assert ord_p(gr_make(GR4_2, [2, 2])) == 1


def test_enumerate():
    elems = gr_enumerate(Z9)
    assert len(elems) == 9
    assert len(set(elems)) == 9
    assert elems[0] == gr_zero(Z9)
    assert elems[1] == gr_one(Z9)
    assert len(gr_enumerate(GR4_2)) == 16
