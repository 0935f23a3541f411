"""Exact-arithmetic construction and verification of generalized Onsager algebras."""

from .cartan import CartanMatrix, preset, symmetrizer, validate
from .characters import (
    Character,
    character_from_values,
    character_space,
    chi_affine,
    chi_finite,
    even_column_set,
    solve_character,
)
from .chevalley import (
    ChevElement,
    StructureTable,
    bracket_g,
    build_chevalley,
    eta,
    omega,
    sl_realization,
    sp_realization,
    sp_structure_table,
    verify_gl_presentation,
    y_basis,
)
from .exact_math import ExactMatrix, GaussianRational, Rational, nullspace_basis, rank, span_rank
from .freelie import (
    BracketExpr,
    FreeLieElement,
    lie_bracket,
    lyndon_words,
    parse_bracket,
    to_lyndon,
    witt_dimension,
)
from .loop import LoopElement, YIndex, bracket_loop, k_bracket_expand, omega_tilde, onsager_basis, y_affine
from .onsager import (
    Realization,
    affine_realization,
    filtration_dims,
    finite_realization,
    generation_check,
    psi_eval,
    realization_for,
    relations,
)
from .roots import AffineRoot, RootSystem, affine_positive_roots, coroot_coords, enumerate_positive_roots
from .serre_coeffs import CoeffRow, c0_closed_form, coeff_row, coeff_table, serre_relation

__version__ = "0.1.0"
