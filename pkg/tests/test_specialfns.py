import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lenstorsion.specialfns import (
    ZetaPoleError,
    ZetaValue,
    bernoulli_numbers,
    hurwitz_zeta,
    hurwitz_zeta_ds,
    log_gamma,
    riemann_zeta,
    riemann_zeta_ds,
)

# ζ(3, 1/4) from the direct-summation oracle below (frozen)
ZETA_3_QUARTER = 64.66386996876842


def direct_hurwitz(s: float, a: float, N: int = 10**6) -> float:
    """Plain partial sum plus the integral tail and its first corrections."""
    k = np.arange(N, dtype=float) + a
    head = math.fsum(k ** -s)
    x = N + a
    tail = x ** (1 - s) / (s - 1) + 0.5 * x**-s + s / 12 * x ** (-s - 1)
    return head + tail


def test_bernoulli_numbers():
    B = bernoulli_numbers(12)
    assert B[:5] == [1, -0.5, pytest.approx(1 / 6), 0, pytest.approx(-1 / 30)]
    assert float(B[12]) == pytest.approx(-691 / 2730)
    assert all(B[k] == 0 for k in range(3, 13, 2))


def test_hurwitz_examples():
    assert abs(hurwitz_zeta(0, 0.5).value) < 1e-14
    assert abs(hurwitz_zeta(2, 1).value - math.pi**2 / 6) < 1e-12
    z = hurwitz_zeta(3, 0.25)
    assert abs(z.value - ZETA_3_QUARTER) < 1e-11


def test_direct_summation_oracle():
    assert direct_hurwitz(2.0, 1.0) == pytest.approx(math.pi**2 / 6, abs=1e-12)
    assert direct_hurwitz(3.0, 0.25) == pytest.approx(ZETA_3_QUARTER, abs=1e-11)
    # independent closed form: ζ(3,1/4) = π³ + 28 ζ(3)
    assert math.pi**3 + 28 * direct_hurwitz(3.0, 1.0) == pytest.approx(ZETA_3_QUARTER, rel=1e-14)


@pytest.mark.parametrize("s", [2.0, 2.5, 3.0, 4.5, 7.0])
@pytest.mark.parametrize("a", [0.1, 0.25, 0.5, 0.9, 1.0])
def test_against_direct_sum_within_err(s, a):
    z = hurwitz_zeta(s, a)
    oracle = direct_hurwitz(s, a, N=200_000)
    # the oracle's own truncation is O(N^{-s-3}); add the float summation noise
    assert abs(z.value - oracle) <= z.err + 1e-13 * abs(oracle) + 1e-15


def test_hurwitz_derivative_examples():
    assert hurwitz_zeta_ds(0, 0.5).value.real == pytest.approx(-0.5 * math.log(2), abs=1e-12)
    assert hurwitz_zeta_ds(0, 1).value.real == pytest.approx(-0.5 * math.log(2 * math.pi), abs=1e-12)
    expect = log_gamma(0.25) - 0.5 * math.log(2 * math.pi)
    assert hurwitz_zeta_ds(0, 0.25).value.real == pytest.approx(expect, abs=1e-10)


def test_riemann_examples():
    assert riemann_zeta(0).value == pytest.approx(-0.5, abs=1e-12)
    assert riemann_zeta(2).value.real == pytest.approx(math.pi**2 / 6, abs=1e-12)
    assert riemann_zeta(-1).value.real == pytest.approx(-1 / 12, abs=1e-12)
    assert riemann_zeta_ds(0).value.real == pytest.approx(-0.5 * math.log(2 * math.pi), abs=1e-12)


def test_riemann_derivative_finite_difference():
    h = 1e-5
    fd = (riemann_zeta(2 + h).real - riemann_zeta(2 - h).real) / (2 * h)
    assert abs(riemann_zeta_ds(2).real - fd) < 1e-6
    # ζ'(2) = π²/6 (γ + log 2π − 12 log A); frozen to 16 digits
    assert riemann_zeta_ds(2).real == pytest.approx(-0.9375482543158437, abs=1e-13)


def test_log_gamma():
    assert log_gamma(1) == 0
    assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), abs=1e-15)
    assert log_gamma(5) == pytest.approx(math.log(24), abs=1e-15)
    with pytest.raises(ValueError):
        log_gamma(0)


def test_pole_and_domain():
    with pytest.raises(ZetaPoleError):
        hurwitz_zeta(1, 0.5)
    with pytest.raises(ZetaPoleError):
        riemann_zeta_ds(1 + 1e-10)
    for a in (0.0, -0.5, 1.5):
        with pytest.raises(ValueError):
            hurwitz_zeta(2, a)
    # close to the pole but outside the guard band still works
    z = riemann_zeta(1 + 1e-6)
    assert z.value.real == pytest.approx(1e6 + 0.5772156649, rel=1e-9)


def test_zeta_value_validation():
    assert complex(ZetaValue(1 + 2j, 0.0)) == 1 + 2j
    with pytest.raises(ValueError):
        ZetaValue(1.0, -1.0)


def test_complex_argument():
    # ζ(1/2 + 14.1347...i) is close to the first nontrivial zero
    z = riemann_zeta(complex(0.5, 14.134725141734693))
    assert abs(z.value) < 1e-10


s_values = st.floats(-5, 12, allow_nan=False).filter(lambda s: abs(s - 1) > 1e-3)
a_values = st.floats(1e-3, 1.0)


@given(s_values, a_values)
def test_error_bound_is_finite_and_nonnegative(s, a):
    z = hurwitz_zeta(s, a)
    assert math.isfinite(z.err) and z.err >= 0
    assert math.isfinite(abs(z.value))


@given(st.floats(-3, 10).filter(lambda s: abs(s - 1) > 1e-2), a_values)
def test_duplication_formula(s, a):
    # ζ(s, a/2) + ζ(s, (a+1)/2) = 2^s ζ(s, a)
    lhs = hurwitz_zeta(s, a / 2).value + hurwitz_zeta(s, (a + 1) / 2).value
    rhs = 2**s * hurwitz_zeta(s, a).value
    assert abs(lhs - rhs) <= 1e-11 * max(1.0, abs(rhs))


@given(st.floats(0.01, 0.99))
def test_pairing_at_zero(a):
    assert abs(hurwitz_zeta(0, a).value + hurwitz_zeta(0, 1 - a).value) < 1e-12
    chord = math.log(2 * math.sin(math.pi * a))
    d = hurwitz_zeta_ds(0, a).value.real + hurwitz_zeta_ds(0, 1 - a).value.real
    assert abs(d + chord) < 1e-10


@given(st.floats(-2, 8).filter(lambda s: abs(s - 1) > 0.05), st.floats(0.05, 1.0))
def test_derivative_matches_finite_difference(s, a):
    h = 1e-5
    fd = (hurwitz_zeta(s + h, a).value - hurwitz_zeta(s - h, a).value) / (2 * h)
    d = hurwitz_zeta_ds(s, a).value
    assert abs(d - fd) <= 1e-5 * max(1.0, abs(d))


@given(st.floats(-4, 0.0))
def test_negative_integers_and_bernoulli(s):
    # ζ(-m, a) = -B_{m+1}(a)/(m+1); check the m = 1 polynomial at any a
    a = (s + 4) / 4 + 1e-3
    a = min(a, 1.0)
    assert hurwitz_zeta(-1, a).value.real == pytest.approx(-(a * a - a + 1 / 6) / 2, abs=1e-12)
