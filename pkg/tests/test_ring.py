from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import polys, small_polys
from hodgecalc.ring import (
    L, ONE, U, V, Poly, PolySyntaxError, TPoly, builtin_class, format_poly,
    parse_poly, poly_arith, poly_invert_vars, poly_specialize_v, projective, torus,
)

F = Fraction


def P(text):
    return parse_poly(text)


# -- worked values -------------------------------------------------------------


def test_binomial_square():
    assert poly_arith("mul", L - 1, L - 1) == Poly({(2, 2): 1, (1, 1): -2, (0, 0): 1})


def test_additive_inverse():
    assert poly_arith("add", 1 + L, -1 - L) == Poly()
    assert poly_arith("add", 1 + L, poly_arith("neg", 1 + L)).is_zero()


def test_fractional_exponents_add():
    a = Poly.monomial(F(1, 2), F(1, 2))
    b = Poly.monomial(F(1, 3), F(2, 3))
    assert a * b == Poly.monomial(F(5, 6), F(7, 6))


def test_scale():
    assert poly_arith("scale", 1 + L, 3) == Poly({(0, 0): 3, (1, 1): 3})
    assert poly_arith("scale", 1 + L, 0).is_zero()


def test_invert_vars():
    assert poly_invert_vars(U + V) == Poly({(-1, 0): 1, (0, -1): 1})
    assert poly_invert_vars(P("u^2 + 20*u*v + v^2")) == P("u^-2 + 20*u^-1*v^-1 + v^-2")
    assert poly_invert_vars(Poly.const(5)) == Poly.const(5)


def test_specialize_v():
    k3 = P("1 + u + v + 18*u*v + u^2*v + u*v^2 + u^2*v^2")
    assert poly_specialize_v(k3) == TPoly({0: 2, 1: 20, 2: 2})
    assert poly_specialize_v((L - 1) ** 2) == TPoly({2: 1, 1: -2, 0: 1})
    frac = P("u^(1/3)*v^(2/3) + u^(2/3)*v^(1/3)")
    assert poly_specialize_v(frac) == TPoly({F(1, 3): 1, F(2, 3): 1})
    assert str(poly_specialize_v(frac)) == "t^(1/3) + t^(2/3)"
    assert str(poly_specialize_v(k3)) == "2 + 20*t + 2*t^2"


def test_canonical_storage():
    p = Poly({(F(2, 4), "3/6"): 2, (0, 0): 0})
    ((eu, ev), c), = p.items()
    assert (eu, ev, c) == (F(1, 2), F(1, 2), 2)
    assert list(P("u*v + v + u + 1").terms) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_no_floats():
    with pytest.raises(TypeError):
        Poly({(0.5, 0): 1})
    with pytest.raises(TypeError):
        Poly({(0, 0): F(1, 2)})


def test_big_coefficients_are_exact():
    p = Poly.const(10**40) * Poly.const(10**40)
    assert p.coeff(0, 0) == 10**80


# -- parsing and formatting ----------------------------------------------------


def test_parse_literals():
    assert parse_poly("-2 + 3*u*v").terms == {(0, 0): -2, (1, 1): 3}
    assert parse_poly("u^(5/6)*v^(7/6)").terms == {(F(5, 6), F(7, 6)): 1}
    assert parse_poly("  2 * u ^ 2 *v -u") == Poly({(2, 1): 2, (1, 0): -1})
    assert parse_poly("0") == Poly()
    assert parse_poly("u*u*v^(-1/2)") == Poly.monomial(2, F(-1, 2))


def test_parse_error_offset():
    with pytest.raises(PolySyntaxError) as exc:
        parse_poly("u^v")
    assert exc.value.pos == 2


@pytest.mark.parametrize("text, pos", [
    ("", 0),
    ("1 +", 3),
    ("2u", 1),
    ("u^(1/0)", 2),
    ("u^(1/2", 6),
    ("x", 0),
    ("+u", 0),
    ("u^1.5", 3),
    ("1 - - u", 4),
])
def test_malformed(text, pos):
    with pytest.raises(PolySyntaxError) as exc:
        parse_poly(text)
    assert exc.value.pos == pos


def test_zero_denominator_message():
    with pytest.raises(PolySyntaxError, match="not a rational literal"):
        parse_poly("u^(1/0)")


def test_format():
    assert format_poly(Poly({(0, 0): 1, (1, 1): -2, (2, 2): 1})) == "1 - 2*u*v + u^2*v^2"
    assert format_poly(Poly()) == "0"
    assert format_poly(Poly.monomial(F(1, 2), F(1, 2))) == "u^(1/2)*v^(1/2)"
    assert format_poly(Poly({(-1, 0): -1, (0, F(-1, 6)): 3})) == "-u^-1 + 3*v^(-1/6)"
    assert format_poly(-ONE) == "-1"


@given(polys)
def test_round_trip(p):
    assert parse_poly(format_poly(p)) == p


@settings(max_examples=300)
@given(st.text(alphabet="uv0123456789^()/*+- ", max_size=20))
def test_garbage_never_crashes(text):
    try:
        parse_poly(text)
    except PolySyntaxError as exc:
        assert 0 <= exc.pos <= len(text)


# -- ring laws -----------------------------------------------------------------


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a * ONE == a
    assert a + Poly() == a
    assert a - a == Poly()


@given(small_polys, small_polys)
def test_invert_is_ring_involution(a, b):
    assert a.invert_vars().invert_vars() == a
    assert (a * b).invert_vars() == a.invert_vars() * b.invert_vars()


@given(small_polys, small_polys)
def test_specialize_is_homomorphism(a, b):
    assert (a * b).specialize_v() == a.specialize_v() * b.specialize_v()
    assert (a + b).specialize_v() == a.specialize_v() + b.specialize_v()


# -- builtin classes -----------------------------------------------------------


def test_builtins():
    assert builtin_class("projective", 2) == 1 + L + L * L
    assert builtin_class("torus", 2) == Poly({(2, 2): 1, (1, 1): -2, (0, 0): 1})
    assert builtin_class("projective", -1) == Poly()
    assert builtin_class("lefschetz", 3) == Poly.monomial(3, 3)


@pytest.mark.parametrize("name, param", [("projective", -2), ("torus", -1), ("lefschetz", -1)])
def test_builtin_range(name, param):
    with pytest.raises(ValueError):
        builtin_class(name, param)


@pytest.mark.parametrize("m", range(0, 12))
def test_projective_steps(m):
    assert projective(m) - projective(m - 1) == L ** m


def test_torus_is_product():
    assert torus(3) == torus(1) * torus(2)


def test_negative_power_of_monomial():
    assert L ** -2 == Poly.monomial(-2, -2)
    with pytest.raises(ValueError):
        (1 + L) ** -1
