"""Quantum states, their time evolution, and quadratic forms."""

from .dynamics import (
    OddAverageExperiment,
    Propagator,
    TimeSeriesRow,
    average,
    average_angle,
    evolve,
    is_steady,
    odd_average_experiment,
    taylor_evolve,
    time_series,
)
from .quadratic import STATE_KIND_OF_FORM, FormKind, quadratic_form, root_superset_check
from .state import StateKind, StateVector, state_dimension

__all__ = [
    "StateKind",
    "StateVector",
    "state_dimension",
    "Propagator",
    "TimeSeriesRow",
    "OddAverageExperiment",
    "average",
    "average_angle",
    "evolve",
    "is_steady",
    "odd_average_experiment",
    "taylor_evolve",
    "time_series",
    "FormKind",
    "STATE_KIND_OF_FORM",
    "quadratic_form",
    "root_superset_check",
]
