"""Shifted staircase tableaux, 132-avoiding sorting networks and their limit shapes."""

from ._core import (
    StaircaseError,
    adjacencies,
    all_tableaux,
    apply_prefix,
    conjectured_adjacency_profile,
    count_tableaux,
    eg_forward,
    eg_inverse,
    entropy,
    experiment_table,
    first_element_limit_trajectory,
    first_row_limit,
    g_tilde,
    intermediate_limit_curve,
    inverse_partial_promotion,
    is_132_network,
    is_sorting_network,
    limit_energy,
    limit_trajectory,
    partial_promotion,
    sample_staircase,
    sample_tableau,
    surface,
    surface_L,
    trajectory,
    verify,
)
from ._core import __version__

__all__ = [
    "StaircaseError",
    "adjacencies",
    "all_tableaux",
    "apply_prefix",
    "conjectured_adjacency_profile",
    "count_tableaux",
    "eg_forward",
    "eg_inverse",
    "entropy",
    "experiment_table",
    "first_element_limit_trajectory",
    "first_row_limit",
    "g_tilde",
    "intermediate_limit_curve",
    "inverse_partial_promotion",
    "is_132_network",
    "is_sorting_network",
    "limit_energy",
    "limit_trajectory",
    "partial_promotion",
    "sample_staircase",
    "sample_tableau",
    "surface",
    "surface_L",
    "trajectory",
    "verify",
]
