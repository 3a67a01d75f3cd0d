"""Hodge-Euler polynomials, motivic nearby fibres and singularity spectra."""

from .ring import Poly, TPoly, PolySyntaxError, parse_poly, format_poly
from .hodge import HodgeStructure, hn_poly, hs_sum, hs_tensor, hs_hom, dual
from .classes import eval_class, parse_class
from .degeneration import (
    BlowupCenter,
    Stratification,
    blowup_transform,
    middle_hodge_numbers,
    nearby_fibre,
    nearby_fibre_open,
    special_fibre_class,
    vanishing_fibre,
)
from .equivariant import EquivariantHodgeStructure, convolution, equiv_hn_poly, thom_sebastiani
from .spectra import SpectrumTable, WeightDims, jordan_block_counts, m_invariants

__version__ = "0.1.0"
