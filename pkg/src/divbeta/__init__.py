"""Exact computation of the modular forms attached to order-p divided beta family elements."""

from .betafamily import BetaIndex, enumerate_j, is_order_p, max_denominator, split_index
from .closedform import CaseTag, closed_form_p5, correction_c, correction_d, delta_power_form, recursive_top_form, theorem_form
from .conditions import ConditionReport, check_all, check_c1, check_c2, check_c3, check_c4_at_2, is_topgen_2
from .exactnum import FpPoly, bernoulli, factor_multiplicity, fp_poly_divrem
from .level1 import EE6Form, Level1Form, basis_coords, c3_divisible_by_epm1, eisenstein_rep_mod_p, form_to_q
from .level2 import (
    DehomogPoly,
    Level2Poly,
    dehomogenize,
    e4_div_order_p5,
    eisenstein_level2,
    epm1_div_check,
    fit_level2_from_q,
    iota2,
    l2,
    to_y_variable,
    v2,
)
from .qseries import GF, QQ, ZZ, QSeries, delta_q, eisenstein_q, gamma0_2_generators, ord_q, verschiebung
from .search import SearchProblem, divisibility_table, solve

__version__ = "0.1.0"
