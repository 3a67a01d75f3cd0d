import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given

from gen import random_equivariant, seeded
from hodgecalc.equivariant import (
    EquivariantHodgeStructure as EHS, a_k_milnor, convolution, equiv_hn_poly, from_fractional,
    milnor_from_vanishing, thom_sebastiani, thom_sebastiani_structure, to_fractional,
)
from hodgecalc.hodge import HodgeError, HodgeStructure, hn_poly, hs_tensor, validate_hs
from hodgecalc.ring import Poly, TPoly, parse_poly
from hodgecalc.spectra import saito_spectrum

F = Fraction
equivariant = seeded(random_equivariant)


def brieskorn_spectrum(exps) -> TPoly:
    """Spectrum of x1^a1 + ... + xr^ar from the monomial basis of its Jacobian ring.

    Each basis monomial prod x_i^(j_i - 1), 1 <= j_i < a_i, contributes t^(sum j_i / a_i).
    """
    acc: dict = {}
    for js in product(*(range(1, a) for a in exps)):
        s = sum(F(j, a) for j, a in zip(js, exps))
        acc[s] = acc.get(s, 0) + 1
    return TPoly(acc)


def test_fractional_examples():
    half = EHS({(0, F(1, 2)): {(0, 0): 1}})
    assert to_fractional(half) == HodgeStructure({(F(1, 2), F(1, 2)): 1})
    pair = EHS({(1, F(1, 3)): {(1, 0): 1}, (1, F(2, 3)): {(0, 1): 1}})
    assert to_fractional(pair).dims == {(F(4, 3), F(2, 3)): 1, (F(2, 3), F(4, 3)): 1}
    plain = EHS({(1, 0): {(1, 0): 2, (0, 1): 2}})
    assert to_fractional(plain) == HodgeStructure({(1, 0): 2, (0, 1): 2})


def test_weights_k_and_k_plus_one():
    e = EHS({(1, 0): {(1, 0): 1, (0, 1): 1}, (1, F(1, 4)): {(1, 0): 1}, (1, F(3, 4)): {(0, 1): 1}})
    assert to_fractional(e).weights() == {1: 2, 2: 2}


def test_convolution_examples():
    half = EHS({(0, F(1, 2)): {(0, 0): 1}})
    assert convolution(half, half) == EHS({(2, 0): {(1, 1): 1}})
    a2 = a_k_milnor(2)
    out = convolution(a2, half)
    assert out == EHS({(1, F(5, 6)): {(0, 1): 1}, (1, F(1, 6)): {(1, 0): 1}})
    assert (a2 @ half) == out


def test_single_angle_piece():
    # no pairing partner: only usable unchecked
    third = EHS.unchecked({(0, F(1, 3)): {(0, 0): 1}})
    half = EHS({(0, F(1, 2)): {(0, 0): 1}})
    frac = hs_tensor(to_fractional(third), to_fractional(half))
    assert frac.dims == {(F(5, 6), F(7, 6)): 1}
    e = from_fractional(HodgeStructure.unchecked(frac.dims))
    assert e.pieces == {(1, F(5, 6)): {(0, 1): 1}}


def test_constructor_checks():
    with pytest.raises(HodgeError):
        EHS({(0, F(1, 3)): {(0, 0): 1}})
    with pytest.raises(HodgeError):
        EHS({(1, 0): {(1, 1): 1}})
    with pytest.raises(HodgeError):
        EHS({(0, F(3, 2)): {(0, 0): 1}})
    assert EHS.unchecked({(0, F(1, 3)): {(0, 0): 1}}).violation() is not None


def test_from_fractional_rejects_non_integral_weight():
    with pytest.raises(HodgeError):
        from_fractional(HodgeStructure.unchecked({(F(1, 2), F(1, 3)): 1}))


@given(equivariant)
def test_round_trip(e):
    assert from_fractional(to_fractional(e)) == e
    assert validate_hs(to_fractional(e)) is None


@given(equivariant, equivariant)
def test_convolution_is_multiplicative(x, y):
    assert equiv_hn_poly(convolution(x, y)) == equiv_hn_poly(x) * equiv_hn_poly(y)
    assert convolution(x, y).total_dim() == x.total_dim() * y.total_dim()


@given(equivariant, equivariant, equivariant)
def test_convolution_associative_commutative(x, y, z):
    assert convolution(x, y) == convolution(y, x)
    assert convolution(convolution(x, y), z) == convolution(x, convolution(y, z))


def test_thom_sebastiani_cusp():
    phi_x3 = equiv_hn_poly(a_k_milnor(2))
    phi_y2 = equiv_hn_poly(a_k_milnor(1))
    ts = thom_sebastiani(phi_x3, phi_y2)
    assert ts == parse_poly("-u^(5/6)*v^(7/6) - u^(7/6)*v^(5/6)")
    assert saito_spectrum(-ts) == TPoly({F(5, 6): 1, F(7, 6): 1}) == brieskorn_spectrum((3, 2))


@pytest.mark.parametrize("exps", [(2, 2), (3, 2), (4, 2), (3, 3), (5, 3), (2, 2, 2), (3, 3, 3), (4, 3, 2)])
def test_iterated_join_matches_brieskorn(exps):
    structure = a_k_milnor(exps[0] - 1)
    phi, n = milnor_from_vanishing(equiv_hn_poly(structure), 0), 0
    for a in exps[1:]:
        g = a_k_milnor(a - 1)
        structure = thom_sebastiani_structure(structure, g)
        phi = thom_sebastiani(phi, equiv_hn_poly(g))
        n += 1
    milnor = milnor_from_vanishing(phi, n)
    assert milnor == equiv_hn_poly(structure)
    assert saito_spectrum(milnor) == brieskorn_spectrum(exps)


def test_random_ts_agreement():
    rng = random.Random(3)
    for _ in range(200):
        x, y = random_equivariant(rng), random_equivariant(rng)
        phi = thom_sebastiani(equiv_hn_poly(x), equiv_hn_poly(y))
        # x, y as Milnor data in even dimension n = 0; the join lives in n = 1
        assert milnor_from_vanishing(phi, 1) == equiv_hn_poly(thom_sebastiani_structure(x, y))


def test_a_k():
    assert a_k_milnor(1) == EHS({(0, F(1, 2)): {(0, 0): 1}})
    assert a_k_milnor(4).total_dim() == 4
    assert hn_poly(to_fractional(a_k_milnor(2))) == parse_poly("u^(1/3)*v^(2/3) + u^(2/3)*v^(1/3)")
    with pytest.raises(ValueError):
        a_k_milnor(0)


def test_milnor_sign():
    p = parse_poly("u*v")
    assert milnor_from_vanishing(p, 2) == p
    assert milnor_from_vanishing(p, 1) == -p
    assert thom_sebastiani(Poly(), p) == Poly()
