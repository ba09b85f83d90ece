"""Exact arithmetic for Stirling triangles, generalized Fubini polynomials and
the transform matrix that links an initial row to a final column."""

from .kernel import (ONE, X, Y, ZERO, BiPoly, as_rational, binomial, factorial,
                     format_rational, parse_rational, poly_eval)
from .series import Series
from .stirling import stirling1, stirling2, stirling2_degenerate, stirling2_r
from .polyfam import (PolyFamily, bell, eulerian, family, frobenius_euler, fubini_classic,
                      fubini_gen, fubini_gen_degenerate, fubini_two_var)
from .transform import (SequenceWindow, TransformGrid, backward_fill, bernoulli, chen,
                        entry_from_column, entry_from_row, forward_fill, fubini_inverse,
                        fubini_transform, ones)
from .fps import (a_hat_s, b_s_operator, b_s_stirling_form, gf_degenerate,
                  gf_generalized_fubini)
from .stochastic import moment_monte_carlo, moment_partial_sum, tail_bound
from .identities import CheckResult, run_identity, run_suite

__version__ = "0.1.0"

__all__ = [
    "ONE", "X", "Y", "ZERO", "BiPoly", "as_rational", "binomial", "factorial",
    "format_rational", "parse_rational", "poly_eval", "Series",
    "stirling1", "stirling2", "stirling2_degenerate", "stirling2_r",
    "PolyFamily", "bell", "eulerian", "family", "frobenius_euler", "fubini_classic",
    "fubini_gen", "fubini_gen_degenerate", "fubini_two_var",
    "SequenceWindow", "TransformGrid", "backward_fill", "bernoulli", "chen",
    "entry_from_column", "entry_from_row", "forward_fill", "fubini_inverse",
    "fubini_transform", "ones",
    "a_hat_s", "b_s_operator", "b_s_stirling_form", "gf_degenerate", "gf_generalized_fubini",
    "moment_monte_carlo", "moment_partial_sum", "tail_bound",
    "CheckResult", "run_identity", "run_suite",
]
