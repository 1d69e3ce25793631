"""Burning number of planar point sets, exact and approximate."""

from ._core import (
    ApproxResult,
    BurnReport,
    Circle,
    ExactResult,
    GuessRecord,
    InvalidSchedule,
    Model,
    ParseError,
    Point,
    PointSet,
    Schedule,
    Subsolver,
    approx_burning,
    candidate_centers,
    covers,
    exact_burning,
    gen_clustered,
    gen_grid,
    gen_path_forest,
    gen_uniform,
    load,
    load_schedule,
    render_svg,
    save,
    save_schedule,
    simulate,
    smallest_enclosing_circle,
    verify_schedule,
)

__all__ = [
    "ApproxResult",
    "BurnReport",
    "Circle",
    "ExactResult",
    "GuessRecord",
    "InvalidSchedule",
    "Model",
    "ParseError",
    "Point",
    "PointSet",
    "Schedule",
    "Subsolver",
    "approx_burning",
    "candidate_centers",
    "covers",
    "exact_burning",
    "gen_clustered",
    "gen_grid",
    "gen_path_forest",
    "gen_uniform",
    "load",
    "load_schedule",
    "render_svg",
    "save",
    "save_schedule",
    "simulate",
    "smallest_enclosing_circle",
    "verify_schedule",
]
