import pytest
from hypothesis import given
from hypothesis import strategies as st

from gen import small_polys
from hodgecalc.classes import (
    ClassSyntaxError, Leaf, blowup_class, cubical_class, eval_class, open_complement, parse_class,
)
from hodgecalc.ring import L, ONE, Poly, parse_poly, projective, torus

P1 = projective(1)
P2 = projective(2)
P3 = projective(3)

# orbit counts of the standard fans of P^1, P^2, P^3
FAN_ORBITS = {1: (2, 1), 2: (3, 3, 1), 3: (4, 6, 4, 1)}


def test_toric_plane():
    assert eval_class(Leaf("toric", (3, 3, 1))) == 1 + L + L * L
    assert eval_class(Leaf("toric", (3, 3, 1))) == eval_class(Leaf("projective", (2,)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_toric_matches_projective(n):
    assert eval_class(Leaf("toric", FAN_ORBITS[n])) == eval_class(Leaf("projective", (n,)))


def test_elliptic_curve():
    assert eval_class("curve(1)") == parse_poly("1 - u - v + u*v")
    # the E(2) level of the K3 degeneration: 32 lines and one elliptic curve
    assert eval_class("32*(point + lefschetz(1)) + curve(1)") == parse_poly("33 + 33*u*v - u - v")


def test_blowup_p2_by_repeated_points():
    total = P2
    for _ in range(16):
        total = blowup_class(total, ONE, 2)
    assert total == eval_class("blowup_p2(16)") == parse_poly("1 + 17*u*v + u^2*v^2")


def test_p1xp1_blown_up_in_16():
    total = eval_class("p1xp1")
    for _ in range(16):
        total = blowup_class(total, ONE, 2)
    assert total == eval_class("blowup_p2(17)")


def test_blowup_class_examples():
    # plane blown up in a point: Betti numbers 1, 2, 1 (degree-8 del Pezzo)
    assert blowup_class(P2, ONE, 2) == parse_poly("1 + 2*u*v + u^2*v^2")
    x = parse_poly("3 - u + u^(1/2)*v")
    assert blowup_class(x, parse_poly("7 + v"), 1) == x
    # P^3 along a line, expanded by hand: (1 + L + L^2 + L^3) + (1 + L) L
    assert blowup_class(P3, P1, 2) == parse_poly("1 + 2*u*v + 2*u^2*v^2 + u^3*v^3")
    with pytest.raises(ValueError):
        blowup_class(P2, ONE, 0)


@given(small_polys, small_polys, st.integers(1, 6))
def test_blowup_identity(x, y, c):
    z = blowup_class(x, y, c)
    exceptional = y * projective(c - 1)
    assert z - exceptional == x - y


def test_open_complement_examples():
    assert open_complement(P1, [Poly.const(2)]) == L - 1 == torus(1)
    assert open_complement(P2, [P1.scale(3), Poly.const(3)]) == torus(2)
    assert open_complement(P2, []) == P2


@given(small_polys, st.integers(0, 4))
def test_open_complement_zero_levels(x, n):
    assert open_complement(x, [Poly()] * n) == x


def test_cubical_examples():
    p = parse_poly("1 + u*v")
    assert cubical_class([(1, p)]) == p
    # nodal cubic: normalisation P^1, the node, and its two preimages
    nodal = cubical_class([(1, P1), (1, ONE), (2, Poly.const(2))])
    assert nodal == P1 - 2 + 1 == L
    a, b, c = parse_poly("u"), parse_poly("v^2"), parse_poly("3")
    assert cubical_class([(1, a), (1, b), (2, c)]) == a + b - c
    with pytest.raises(ValueError):
        cubical_class([(0, a)])


@pytest.mark.parametrize("g", range(0, 8))
def test_curve_euler(g):
    assert eval_class(Leaf("curve", (g,))).euler_characteristic() == 2 - 2 * g


@pytest.mark.parametrize("n", range(0, 8))
def test_projective_euler(n):
    assert eval_class(Leaf("projective", (n,))).euler_characteristic() == n + 1


def test_euler_needs_integral_exponents():
    with pytest.raises(ValueError):
        parse_poly("u^(1/2)*v^(1/2)").euler_characteristic()


# -- expression syntax ---------------------------------------------------------


@pytest.mark.parametrize("text, expected", [
    ("point", "1"),
    ("projective(2)", "1 + u*v + u^2*v^2"),
    ("2*curve(3) - projective(1)", "1 - 6*v - 6*u + u*v"),
    ("p1xp1", "1 + 2*u*v + u^2*v^2"),
    ("projective(1)^2 - p1xp1", "0"),
    ("torus(1) · torus(1)", "1 - 2*u*v + u^2*v^2"),
    ("-point + 3", "2"),
    ("poly(u^(1/2)*v^(1/2)) * poly(u^(1/2)*v^(1/2))", "u*v"),
    ("(point + lefschetz(1)) * 2", "2 + 2*u*v"),
    ("toric(1)", "1"),
])
def test_parse_class(text, expected):
    assert eval_class(parse_class(text)) == parse_poly(expected)


@pytest.mark.parametrize("text", [
    "curve(-1)", "projective()", "torus(1,2)", "sphere(2)", "poly(u^v)", "1 +", "", "curve(1",
    "toric(3,-1)", "point)",
])
def test_bad_class_text(text):
    with pytest.raises(ClassSyntaxError):
        parse_class(text)


def test_poly_error_offset_is_absolute():
    with pytest.raises(ClassSyntaxError) as exc:
        parse_class("point + poly(u^v)")
    assert exc.value.pos == len("point + poly(u^")
