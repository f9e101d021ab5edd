"""Python bindings for the lottery pruning library."""

from ._core import (
    CapacityError,
    ConvergenceError,
    Distribution,
    DomainError,
    Error,
    Network,
    ShapeError,
    ValidationError,
    composition_error_bound,
    coverage_check,
    coverage_probability,
    lower_bound_min_params,
    lower_bound_min_width,
    normalize,
    prune,
    random_network,
    set_threads,
    solve_subset_sum,
    spectral_norm,
    sup_error,
    sweep,
    threads,
    width_plan,
)

__all__ = [name for name in dir() if not name.startswith("_")]
