"""Ore algebra arithmetic and the polynomial Ore system."""

from .algebra import AlgebraMismatch, EndOp, L, OreElem, R, act_equal, ad_E, format_ore, ore_mul
from .equations import (
    DomainError, constant_solvable, degree_one_combination, eq_infty_c0, eq_infty_c1,
    eq_infty_residual, eq_residual, eq_table, first_N_implies_all, ore_identity_residual,
    recursion_residual, second_form, system_residual, top_form,
)
from .grammar import OreParseError, format_orepoly, parse_ore, parse_orepoly
from .orepoly import OrePoly, ad_E_power, ore_eval, subst_t_plus_H
from .representation import rep_factorization_check, rep_row_residual
