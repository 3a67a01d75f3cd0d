import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hodgecalc.hodge import HodgeStructure
from hodgecalc.ring import Poly, TPoly, parse_poly
from hodgecalc.spectra import (
    SpectrumTable, WeightDims, characteristic_pairs, jordan_block_counts, m_invariants,
    saito_spectrum, spectral_pairs, varchenko_spectrum,
)

F = Fraction
CUSP = parse_poly("u^(5/6)*v^(7/6) + u^(7/6)*v^(5/6)")


def weights_of_blocks(k: int, blocks: dict) -> dict:
    """Weight grading of a nilpotent N with the given Jordan blocks, centred at k.

    A block of size m is a string e, Ne, ..., N^(m-1)e with weights
    k+m-1, k+m-3, ..., k-m+1.
    """
    g: dict = {}
    for m, count in blocks.items():
        for i in range(m):
            w = k + m - 1 - 2 * i
            g[w] = g.get(w, 0) + count
    return g


def test_cusp_invariants():
    t = m_invariants(CUSP)
    assert t == SpectrumTable({(F(5, 6), 2): 1, (F(7, 6), 2): 1})
    assert characteristic_pairs(t, 1) == SpectrumTable({(F(1, 6), 2): 1, (F(-1, 6), 2): 1})
    assert spectral_pairs(t) == t
    assert saito_spectrum(CUSP) == TPoly({F(5, 6): 1, F(7, 6): 1})
    assert varchenko_spectrum(CUSP) == TPoly({F(-1, 6): 1, F(1, 6): 1})
    assert str(varchenko_spectrum(CUSP)) == "t^(-1/6) + t^(1/6)"


def test_integral_exponents_shift_weight():
    p = parse_poly("u*v + 2*u^(1/2)*v^(1/2)")
    assert spectral_pairs(m_invariants(p)) == SpectrumTable({(1, 3): 1, (F(1, 2), 1): 2})


def test_non_integral_weight_rejected():
    with pytest.raises(ValueError, match="non-integral"):
        m_invariants(parse_poly("u^(1/2)"))


def test_negative_entries_kept_but_checkable():
    t = m_invariants(parse_poly("-u*v"))
    assert t.total() == -1
    with pytest.raises(ValueError):
        t.check_nonnegative()
    m_invariants(CUSP).check_nonnegative()


def test_table_format():
    text = m_invariants(CUSP).format_table()
    lines = text.splitlines()
    assert lines[0].split() == ["alpha", "w", "m"]
    assert lines[1].split() == ["5/6", "2", "1"]
    assert m_invariants(CUSP).to_records() == [
        {"alpha": "5/6", "w": 2, "m": 1}, {"alpha": "7/6", "w": 2, "m": 1},
    ]


integral_weight_polys = st.lists(
    st.tuples(st.integers(-12, 24), st.sampled_from([1, 2, 3, 6]), st.integers(-2, 4),
              st.integers(-5, 5)),
    max_size=6,
).map(lambda xs: Poly({(F(n, d), w - F(n, d)): c for n, d, w, c in xs}) if xs else Poly())


@given(integral_weight_polys, st.integers(0, 4))
def test_totals_are_conserved(p, n):
    t = m_invariants(p)
    assert t.total() == sum(c for _, c in p.items())
    assert characteristic_pairs(t, n).total() == t.total()
    assert spectral_pairs(t).total() == t.total()
    assert sum(saito_spectrum(p).terms.values()) == t.total()
    assert varchenko_spectrum(p) == saito_spectrum(p).shift(-1)


# -- Jordan blocks ---------------------------------------------------------------


def test_k3_blocks():
    assert jordan_block_counts(WeightDims(2, {1: 2, 2: 18, 3: 2})) == {1: 18, 2: 2}
    assert jordan_block_counts(WeightDims(2, {2: 18, 3: 2})) == {1: 18, 2: 2}


def test_curve_blocks():
    assert jordan_block_counts(WeightDims(1, {0: 3, 2: 3})) == {2: 3}
    assert jordan_block_counts(WeightDims(1, {})) == {}


def test_from_hodge():
    h = HodgeStructure({(0, 0): 1, (1, 1): 4, (2, 2): 1})
    wd = WeightDims.from_hodge(h, 2)
    assert wd.g == {0: 1, 2: 4, 4: 1}
    assert jordan_block_counts(wd) == {1: 3, 3: 1}


def test_weight_errors():
    with pytest.raises(ValueError, match="symmetry"):
        WeightDims(2, {1: 2, 3: 1})
    with pytest.raises(ValueError):
        WeightDims(2, {2: -1})
    with pytest.raises(ValueError, match="monodromy"):
        jordan_block_counts(WeightDims(2, {2: 1, 4: 3}))


@given(st.integers(-2, 4), st.dictionaries(st.integers(1, 6), st.integers(1, 5), max_size=4))
def test_blocks_recovered_from_weights(k, blocks):
    g = weights_of_blocks(k, blocks)
    assert jordan_block_counts(WeightDims(k, g)) == blocks
    upper = {w: d for w, d in g.items() if w >= k}
    assert WeightDims(k, upper) == WeightDims(k, g)


def test_random_upper_halves():
    rng = random.Random(9)
    for _ in range(300):
        k = rng.randint(0, 4)
        blocks = {m: rng.randint(1, 4) for m in rng.sample(range(1, 7), rng.randint(0, 4))}
        assert jordan_block_counts(WeightDims(k, {w: d for w, d in weights_of_blocks(k, blocks).items()
                                                  if w >= k})) == blocks
