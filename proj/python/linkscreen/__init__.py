"""Diagonal-space screens, Regge symmetry, and four-bar cycles."""

from ._core import (
    bretschneider_area,
    canonicalize,
    caustic_residual,
    caustic_x,
    caustic_y,
    classify_case,
    conjugation_sign_law,
    denormalize_screen,
    gates,
    grashof_test,
    heron_area,
    input_angle_limits,
    movement_types,
    normalize_screen,
    regge_conjugate,
    regge_variables,
    ridge_x,
    ridge_y,
    screen_bounds,
    screen_csv,
    screen_json,
    solve_position,
    symmetry_orbit,
    tetra_volume,
    trace_cycle,
    triad_feasible,
)

__all__ = [
    "bretschneider_area",
    "canonicalize",
    "caustic_residual",
    "caustic_x",
    "caustic_y",
    "classify_case",
    "conjugation_sign_law",
    "denormalize_screen",
    "gates",
    "grashof_test",
    "heron_area",
    "input_angle_limits",
    "movement_types",
    "normalize_screen",
    "regge_conjugate",
    "regge_variables",
    "ridge_x",
    "ridge_y",
    "screen_bounds",
    "screen_csv",
    "screen_json",
    "solve_position",
    "symmetry_orbit",
    "tetra_volume",
    "trace_cycle",
    "triad_feasible",
]

__version__ = "1.0.0"
