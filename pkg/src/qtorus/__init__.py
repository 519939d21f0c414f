"""Exact arithmetic in the quantum torus and its q-Onsager alternating elements."""

from .alternating import AltFamily, alt_elem, alt_gf, full_suite
from .expr import ParseError, eval_expr, evaluate, parse_expr
from .qfield import ONE, Q, ZERO, PoleError, RatFunc, q_power, rf_arith, rf_canonicalize, rf_eval
from .render import render
from .report import Check, VerificationReport
from .series import BiTorusSeries, ScalarSeries, TorusSeries, c_n, omega_series, s_series, t_series
from .torus import TorusElement, ddagger, tau, w0, w1

__all__ = [
    "AltFamily", "alt_elem", "alt_gf", "full_suite",
    "ParseError", "eval_expr", "evaluate", "parse_expr",
    "ONE", "Q", "ZERO", "PoleError", "RatFunc", "q_power", "rf_arith", "rf_canonicalize", "rf_eval",
    "render", "Check", "VerificationReport",
    "BiTorusSeries", "ScalarSeries", "TorusSeries", "c_n", "omega_series", "s_series", "t_series",
    "TorusElement", "ddagger", "tau", "w0", "w1",
]
