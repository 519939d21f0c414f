from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtorus.qfield import ONE, ZERO, Q, q_power
from qtorus.series import (BiTorusSeries, ScalarSeries, TorusSeries, c_n, expand_rational_t,
                           omega_series, s_series, t_series)
from qtorus.torus import TorusElement, X, Y
from strategies import laurent_scalars

QQ = Q + q_power(-1)


@st.composite
def scalar_series(draw, n=None):
    n = draw(st.integers(0, 8)) if n is None else n
    return ScalarSeries(draw(st.lists(st.one_of(st.just(ZERO), laurent_scalars()),
                                      min_size=n + 1, max_size=n + 1)))


def test_truncated_product():
    a = ScalarSeries([1, 1, 0])
    b = ScalarSeries([1, -1, 0])
    assert a * b == ScalarSeries([1, 0, -1])


def test_torus_coefficients_keep_factor_order():
    fx = TorusSeries.constant(X, 2)
    fy = TorusSeries.constant(Y, 2)
    assert (fx * fy)[0] == X * Y
    assert (fy * fx)[0] == (X * Y).scale(q_power(-2))


def test_scale_by_zero():
    f = omega_series(6)
    assert f.scale(0).is_zero()


def test_mixed_orders_truncate_to_minimum():
    assert (omega_series(6) + t_series(3)).order == 3


def test_shift_down():
    f = ScalarSeries([0, 0, 1, 1])
    assert f.shift_down(1) == ScalarSeries([0, 1, 1])
    with pytest.raises(ValueError, match="not divisible by t"):
        ScalarSeries([1, 1]).shift_down(1)


@settings(max_examples=50)
@given(scalar_series(), st.integers(0, 4))
def test_shift_round_trip(f, k):
    padded = ScalarSeries(list(f.coeffs) + [ZERO] * k)
    tk = ScalarSeries.from_poly([0] * k + [1], padded.order)
    assert (padded * tk).shift_down(k) == f


def test_compose_examples():
    w = omega_series(6)
    q2 = q_power(2)
    assert w.compose(t_series(6)) == ScalarSeries([1, 0, 2 * q2, 0, 2 * q2 ** 2, 0, 2 * q2 ** 3])
    qm2 = q_power(-2)
    assert omega_series(4).compose(s_series(4)) == ScalarSeries([1, 0, 2 * qm2, 0, 2 * qm2 ** 2])
    t = ScalarSeries([0, 1, 0, 0, 0, 0, 0])
    assert w.compose(t) == w


def test_compose_errors():
    with pytest.raises(ValueError, match="valuation"):
        omega_series(4).compose(ScalarSeries([1, 1, 0, 0, 0]))
    with pytest.raises(TypeError):
        omega_series(2).compose(TorusSeries.constant(X, 2))


def _compose_naive(f, g):
    """Sum f_i g^i with g^i from repeated multiplication; no valuation shortcuts."""
    n = f.order
    out = ScalarSeries.zero(n)
    for i, c in enumerate(f.coeffs):
        out = out + (g ** i).scale(c)
    return out


@settings(max_examples=30)
@given(scalar_series(n=5), scalar_series(n=5))
def test_compose_matches_naive_substitution(f, g):
    g = ScalarSeries([ZERO, *g.coeffs[1:]])
    assert f.compose(g) == _compose_naive(f, g)


def test_expand_rational_examples():
    q2 = q_power(2)
    qm2 = q_power(-2)
    assert expand_rational_t([1, 0, q2], [1, 0, -q2], 4) == ScalarSeries([1, 0, 2 * q2, 0, 2 * q2 ** 2])
    assert expand_rational_t([1], [1, -1], 3) == ScalarSeries([1, 1, 1, 1])
    assert expand_rational_t([1, 0, qm2], [1, 0, -qm2], 2) == ScalarSeries([1, 0, 2 * qm2])
    with pytest.raises(ZeroDivisionError):
        expand_rational_t([1], [0, 1], 3)


def test_omega_examples():
    assert omega_series(0) == ScalarSeries([1])
    w = omega_series(4)
    assert w == ScalarSeries([1, 0, 2 * QQ ** -2, 0, 6 * QQ ** -4])
    w = omega_series(15)
    assert all(not w[i] for i in range(1, 16, 2))
    for i in range(8):
        assert w[2 * i] == comb(2 * i, i) * QQ ** (-2 * i)


def test_t_and_s_examples():
    assert t_series(3) == ScalarSeries([0, QQ * Q, 0, -QQ * q_power(3)])
    assert s_series(3) == ScalarSeries([0, QQ * q_power(-1), 0, -QQ * q_power(-3)])


def test_t_clears_its_denominator():
    n = 12
    # T (q t^2 + q^-1) = (q + q^-1) t, exact through degree n
    lhs = t_series(n) * ScalarSeries.from_poly([q_power(-1), 0, Q], n)
    assert lhs == ScalarSeries.from_poly([0, QQ], n)
    lhs = s_series(n) * ScalarSeries.from_poly([Q, 0, q_power(-1)], n)
    assert lhs == ScalarSeries.from_poly([0, QQ], n)


def test_c_n_direct():
    assert c_n(0) == ONE
    terms = [(-1) ** (2 - i) * comb(2 * i, i) * comb(2 + i, 2 - i) for i in range(3)]
    assert terms == [1, -6, 6] and c_n(2) == ONE
    assert all(c_n(n) == ONE for n in range(41))


@settings(max_examples=50)
@given(scalar_series(n=6), scalar_series(n=6), scalar_series(n=6))
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=30)
@given(scalar_series(n=6))
def test_inverse(a):
    if not a[0]:
        a = a + ONE - a[0]
    assert a * a.inverse() == ScalarSeries.one(6)


def test_bivariate_grid():
    fs = BiTorusSeries.in_s(ScalarSeries([1, 1, 0]), 2)
    ft = BiTorusSeries.in_t(TorusSeries([X, Y, 0]), 2)
    prod = fs * ft
    assert prod.orders == (2, 2)
    assert prod.grid[1][1] == Y
    assert prod.grid[0][0] == X
    assert prod.shift(1, 0).grid[2][1] == Y
    assert (prod - prod).is_zero()
    data = prod.to_json()
    assert data["order"] == [2, 2]
    assert len(data["coeffs"]) == 3 and len(data["coeffs"][0]) == 3


def test_series_json():
    data = t_series(3).to_json()
    assert data["order"] == 3
    assert len(data["coeffs"]) == 4
    assert data["coeffs"][0] == {"num": [], "den": ["1"]}
    assert TorusSeries([X, 0]).to_json()["coeffs"][1] == {"terms": []}
