from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from oracles import contains, mpf

from radical_forge.interval import DyadicInterval, cos_pi, decimal_string, pi_interval, sin_pi

fracs = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**9)
precs = st.sampled_from([64, 128, 256, 512])


@pytest.mark.parametrize("prec", [64, 128, 256, 1024, 4096])
def test_pi_encloses_pi(prec):
    pi = pi_interval(prec)
    with mpmath.workdps(prec // 3 + 40):
        assert contains(pi, mpmath.pi)
    assert pi.width <= Fraction(1, 2 ** (prec - 3))


@given(fracs, precs)
def test_exact_encloses_value(x, prec):
    iv = DyadicInterval.exact(x, prec)
    assert iv.lower <= x <= iv.upper
    assert iv.width <= abs(x) * Fraction(1, 2 ** (prec - 2)) + Fraction(0)


@given(fracs, fracs, precs)
def test_arithmetic_encloses(a, b, prec):
    x = DyadicInterval.exact(a, prec)
    y = DyadicInterval.exact(b, prec)
    assert (x + y).contains(a + b)
    assert (x - y).contains(a - b)
    assert (x * y).contains(a * b)
    assert x.square().contains(a * a)
    assert (-x).contains(-a)
    if b != 0:
        assert (x / y).contains(a / b)


@given(st.fractions(min_value=0, max_value=10**6, max_denominator=10**9), precs)
def test_sqrt_encloses(a, prec):
    root = DyadicInterval.exact(a, prec).sqrt()
    assert root.lower >= 0
    assert root.lower**2 <= a <= root.upper**2


def test_sqrt_of_exact_square_is_tight():
    assert DyadicInterval.exact(Fraction(9, 4), 64).sqrt().contains(Fraction(3, 2))
    r2 = DyadicInterval.exact(2, 256).sqrt()
    assert r2.width <= Fraction(1, 2**254)


@given(st.fractions(min_value=-50, max_value=50, max_denominator=10**6), precs)
def test_cos_sin_enclose_mpmath(q, prec):
    with mpmath.workdps(prec // 3 + 40):
        assert contains(cos_pi(q, prec), mpmath.cospi(mpf(q)))
        assert contains(sin_pi(q, prec), mpmath.sinpi(mpf(q)))


@given(st.fractions(min_value=-4, max_value=4, max_denominator=1000))
def test_pythagorean_identity(q):
    c = cos_pi(q, 256)
    s = sin_pi(q, 256)
    assert (c.square() + s.square()).contains(1)


def test_special_angles():
    assert cos_pi(Fraction(1, 3), 128).contains(Fraction(1, 2))
    assert cos_pi(Fraction(1, 2), 128).contains(0)
    assert sin_pi(Fraction(1, 6), 128).contains(Fraction(1, 2))
    assert cos_pi(Fraction(1), 128).contains(-1)


@given(fracs, fracs)
def test_higher_precision_nests_for_exact_inputs(a, b):
    assume(b != 0)
    lo = DyadicInterval.exact(a, 128) / DyadicInterval.exact(b, 128)
    hi = DyadicInterval.exact(a, 256) / DyadicInterval.exact(b, 256)
    assert lo.overlaps(hi)
    assert hi.width <= lo.width


def test_sign_and_overlap():
    x = DyadicInterval.from_bounds(Fraction(-1, 3), Fraction(1, 3), 64)
    assert x.sign() == 0
    assert DyadicInterval.exact(Fraction(1, 7), 64).sign() == 1
    assert DyadicInterval.exact(Fraction(-1, 7), 64).sign() == -1
    y = DyadicInterval.from_bounds(Fraction(1, 4), 1, 64)
    assert x.overlaps(y)
    assert x.hull(y).contains(x) and x.hull(y).contains(y)
    assert x.distance_bound(y) >= Fraction(4, 3)


def test_guaranteed_digits_and_format():
    x = DyadicInterval.from_bounds(Fraction(1, 3) - Fraction(1, 10**6), Fraction(1, 3) + Fraction(1, 10**6), 128)
    assert x.guaranteed_digits() == 5
    assert x.format().startswith("0.33333 ± 1.0e-06")
    js = x.to_json()
    assert js["mid"] == "0.33333" and js["digits"] == 5
    assert DyadicInterval.exact(1, 64).format(3) == "1.000"


def test_decimal_string_rounding():
    assert decimal_string(Fraction(1, 8), 2) == "0.13"
    assert decimal_string(Fraction(-1, 8), 2) == "-0.13"
    assert decimal_string(Fraction(-1, 1000), 2) == "0.00"
    assert decimal_string(Fraction(7, 2), 0) == "4"


def test_inverted_interval_rejected():
    with pytest.raises(ValueError):
        DyadicInterval(2, 1, 0, 64)
