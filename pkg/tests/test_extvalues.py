import math

import pytest
from hypothesis import given, strategies as st

from uslev.extvalues import (NegInf, Nu, Real, ext_add, ext_ge, ext_gt, ext_le, ext_less,
                             ext_lt, ext_min, ext_scale, from_json, to_json)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
positive = st.floats(min_value=1e-3, max_value=1e3)
ext = st.one_of(finite.map(Real), st.just(NegInf), st.just(Nu))


@pytest.mark.parametrize("v, t, expected", [
    (Real(-1.0), 2.0, Real(1.0)),
    (NegInf, 5.0, NegInf),
    (Nu, 5.0, Nu),
])
def test_add_examples(v, t, expected):
    assert ext_add(v, t) == expected


@pytest.mark.parametrize("v, lam, expected", [
    (Real(3.0), 3.0, Real(1.0)),
    (Real(-2.0), 2.0, Real(-1.0)),
    (Nu, 2.0, Nu),
    (NegInf, 2.0, NegInf),
])
def test_scale_examples(v, lam, expected):
    assert ext_scale(v, lam) == expected


@pytest.mark.parametrize("lam", [0.0, -1.0, math.inf, math.nan])
def test_scale_rejects_nonpositive(lam):
    with pytest.raises(ValueError):
        ext_scale(Real(1.0), lam)


def test_nu_is_incomparable():
    assert not ext_le(Nu, 0.0)
    assert not ext_gt(Nu, 0.0)
    assert not ext_lt(Nu, 0.0)
    assert not ext_ge(Nu, 0.0)
    assert not ext_less(Nu, Nu)
    assert not ext_less(Real(0.0), Nu)


def test_neg_inf_below_everything():
    assert ext_le(NegInf, -1e9)
    assert ext_lt(NegInf, -1e300)
    assert ext_less(NegInf, Real(-1e300))


def test_real_payload_must_be_finite():
    with pytest.raises(ValueError):
        Real(math.inf)
    with pytest.raises(ValueError):
        Real(math.nan)


def test_min_skips_nu():
    assert ext_min([Nu, Real(2.0), Real(-1.0)]) == Real(-1.0)
    assert ext_min([Nu, Nu]) == Nu
    assert ext_min([Real(0.0), NegInf, Nu]) == NegInf


@pytest.mark.parametrize("v, encoded", [(Real(-1.5), -1.5), (NegInf, "-inf"), (Nu, "nu")])
def test_json_encoding(v, encoded):
    assert to_json(v) == encoded
    assert from_json(encoded) == v


@given(ext, finite)
def test_le_gt_trichotomy(v, t):
    if v.is_nu:
        assert not ext_le(v, t) and not ext_gt(v, t)
    else:
        assert ext_le(v, t) != ext_gt(v, t)


@given(ext, finite, finite)
def test_add_composes(v, s, t):
    lhs, rhs = ext_add(ext_add(v, s), t), ext_add(v, s + t)
    assert lhs.kind == rhs.kind
    if lhs.is_real:
        # exact up to the rounding of the two summation orders
        assert lhs.value == pytest.approx(rhs.value, rel=1e-15, abs=1e-9)


@given(ext, positive, positive)
def test_scale_composes(v, a, b):
    lhs, rhs = ext_scale(ext_scale(v, a), b), ext_scale(v, a * b)
    assert lhs.kind == rhs.kind
    if lhs.is_real:
        assert lhs.value == pytest.approx(rhs.value, rel=4e-16, abs=1e-300)


@given(ext)
def test_json_round_trip(v):
    assert from_json(to_json(v)) == v
