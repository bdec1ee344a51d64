"""Implicit-series and functional-equation routes."""

from .implicit import implicit_R, thm1_G, thm1_kernel, thm1_R, thm2_kernel, thm2_Q1, thm2_R
from .kernel import Q_from_WH, Q_from_WH_at, WHState, apply_T, solve_WH, t_sum
from .pcd import PCDState, closed_form_PCD, initial_PCD, pcd_step, solve_PCD

__all__ = [
    "PCDState",
    "Q_from_WH",
    "Q_from_WH_at",
    "WHState",
    "apply_T",
    "closed_form_PCD",
    "implicit_R",
    "initial_PCD",
    "pcd_step",
    "solve_PCD",
    "solve_WH",
    "t_sum",
    "thm1_G",
    "thm1_R",
    "thm1_kernel",
    "thm2_Q1",
    "thm2_R",
    "thm2_kernel",
]
