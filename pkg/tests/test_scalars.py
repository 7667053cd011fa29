from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Poly, cyclotomic_poly, symbols

from qzm.scalars import (FieldError, GENERIC, ROOT, UsageError, cyclotomic,
                         make_field)


def sympy_cyclotomic(m):
    x = symbols("x")
    return tuple(reversed(Poly(cyclotomic_poly(m, x), x).all_coeffs()))


@pytest.mark.parametrize("m", list(range(1, 41)))
def test_cyclotomic_against_sympy(m):
    assert cyclotomic(m) == sympy_cyclotomic(m)


def test_phi8_and_phi6_frozen():
    assert cyclotomic(8) == (1, 0, 0, 0, 1)      # x^4 + 1
    assert cyclotomic(6) == (1, -1, 1)           # x^2 - x + 1


@pytest.mark.parametrize("h", [3, 4, 5, 6, 7, 8])
def test_modulus_divides_and_degree(h):
    f = make_field(ROOT, h)
    # Phi_{2h} divides x^h + 1: q^h = -1 as a scalar identity
    assert f.q_power(h) == f.minus_one
    assert f.q_power(2 * h) == f.one
    # degree is Euler's totient of 2h
    m = 2 * h
    assert f.degree == sum(1 for t in range(1, m + 1) if _gcd(t, m) == 1)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def test_make_field_rejects_small_h():
    with pytest.raises(UsageError):
        make_field(ROOT, 2)
    with pytest.raises(UsageError):
        make_field(ROOT)


def test_q_inverse_h4(field_h4):
    # q^{-1} = -q^3 when the modulus is x^4 + 1
    assert field_h4.q_power(-1).encode() == ["0", "0", "0", "-1"]


def test_q_int_values_h4(field_h4):
    f = field_h4
    assert f.q_int(0).is_zero()
    assert f.q_int(1) == f.one
    assert f.q_int(4).is_zero()
    assert f.q_int(2).encode() == ["0", "1", "0", "-1"]   # q - q^3
    assert f.q_factorial(0) == f.one
    assert f.q_factorial(1) == f.one
    assert f.q_factorial(2) == f.q_int(2)
    assert f.q_factorial(4).is_zero()


@pytest.mark.parametrize("h", [3, 4, 5, 6, 7, 8])
def test_q_int_identities(h):
    f = make_field(ROOT, h)
    for m in range(-3 * h, 3 * h + 1):
        assert f.q_int(-m) == -f.q_int(m)
        assert f.q_int(m + 2 * h) == f.q_int(m)
        assert f.q_int(m).is_zero() == (m % h == 0)
        assert f.q_int(2) * f.q_int(m) == f.q_int(m + 1) + f.q_int(m - 1)
    for m in range(1, h):
        assert f.q_int(h - m) == f.q_int(m)


def test_generic_q_int_never_vanishes(field_generic):
    for m in range(1, 12):
        assert not field_generic.q_int(m).is_zero()
        assert field_generic.q_int(-m) == -field_generic.q_int(m)
    assert field_generic.q_int(0).is_zero()
    g = field_generic
    for m in range(-6, 7):
        assert g.q_int(2) * g.q_int(m) == g.q_int(m + 1) + g.q_int(m - 1)


def test_division_by_zero(field_h4):
    with pytest.raises(FieldError):
        field_h4.zero.invert()
    with pytest.raises(FieldError):
        field_h4.one / field_h4.zero


def test_mixed_fields_rejected(field_h4):
    other = make_field(ROOT, 5)
    with pytest.raises(UsageError):
        field_h4.one + other.one


def scalars(h):
    f = make_field(ROOT, h)

    def build(coeffs, den):
        s = f.zero
        for j, c in enumerate(coeffs):
            if c:
                s = s + f.q_power(j) * f.from_fraction(Fraction(c, den))
        return s

    return st.builds(
        build,
        st.lists(st.integers(-9, 9), min_size=f.degree, max_size=f.degree),
        st.integers(1, 9),
    )


@settings(max_examples=60, deadline=None)
@given(a=scalars(5), b=scalars(5), c=scalars(5))
def test_field_axioms_h5(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(a=scalars(6))
def test_inverse_and_roundtrip_h6(a):
    f = make_field(ROOT, 6)
    assert f.decode(a.encode()) == a
    if not a.is_zero():
        assert a * a.invert() == f.one


@settings(max_examples=40, deadline=None)
@given(num=st.lists(st.integers(-6, 6), min_size=1, max_size=4),
       den=st.lists(st.integers(-6, 6), min_size=1, max_size=3))
def test_generic_canonical_roundtrip(num, den, field_generic):
    from qzm.scalars import _make_generic
    if not any(den):
        den = [1]
    s = _make_generic(field_generic, tuple(num), tuple(den))
    assert field_generic.decode(s.encode()) == s
    if not s.is_zero():
        assert s * s.invert() == field_generic.one
        # canonical form is unique: re-normalizing is the identity
        assert _make_generic(field_generic, s.num, s.den) == s
