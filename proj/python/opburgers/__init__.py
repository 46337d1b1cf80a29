"""Exact solutions of operator Burgers equations: special functions, the
scenario catalog, residual checks and the exponential transform."""

from ._core import (
    OpBurgersError,
    backward,
    brownian_solution,
    candidate_value,
    describe,
    eigen_check,
    forward_heat,
    gamma,
    heat_kernel,
    hermite,
    mittag_leffler,
    residual,
    riccati,
    scenario_ids,
    sweep,
)

__all__ = [
    "OpBurgersError",
    "backward",
    "brownian_solution",
    "candidate_value",
    "describe",
    "eigen_check",
    "forward_heat",
    "gamma",
    "heat_kernel",
    "hermite",
    "mittag_leffler",
    "residual",
    "riccati",
    "scenario_ids",
    "sweep",
]
