"""Exact generating functions for planar Eulerian orientations and the
six-vertex model on random quartic maps."""

from .ring import LaurentOmega, PolyGamma, chebyshev_reduce, gamma_to_omega, rat
from .series import GAMMA, OMEGA, QQ, MPolyRing, ShiftedSeries, TruncSeries, exp, log, reversion
from .systems import Q_from_WH, closed_form_PCD, solve_PCD, solve_WH, thm1_G, thm2_Q1
from .theta import q_big_of_t, r_of_q, t_of_q, theta_at_alpha, theta_at_zero

__version__ = "0.1.0"

__all__ = [
    "GAMMA",
    "LaurentOmega",
    "MPolyRing",
    "OMEGA",
    "PolyGamma",
    "QQ",
    "Q_from_WH",
    "ShiftedSeries",
    "TruncSeries",
    "chebyshev_reduce",
    "closed_form_PCD",
    "exp",
    "gamma_to_omega",
    "log",
    "q_big_of_t",
    "r_of_q",
    "rat",
    "reversion",
    "solve_PCD",
    "solve_WH",
    "t_of_q",
    "theta_at_alpha",
    "theta_at_zero",
    "thm1_G",
    "thm2_Q1",
]
