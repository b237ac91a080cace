"""Sojourn times of the simple random walk on the integers.

Paths are lists of +1/-1 steps. Counts come back as Python ints and
probabilities as ``fractions.Fraction``.
"""

from ._core import (
    DegenerateOutputError,
    ResourceLimitError,
    binomial,
    cdf,
    classify,
    conditional_positive_probability,
    count_all,
    count_bridges,
    count_bridges_by_sojourn,
    count_by_sojourn,
    count_positive_end_by_sojourn,
    count_positive_end_by_sojourn_sum,
    density,
    enumerate_counts,
    estimate_conditional_positive,
    finite_n_ks_distance,
    is_positive_side,
    ks_distance_counts,
    position,
    simulate_sojourn,
    sojourn_pmf,
    sojourn_time,
)

__all__ = [
    "DegenerateOutputError",
    "ResourceLimitError",
    "binomial",
    "cdf",
    "classify",
    "conditional_positive_probability",
    "count_all",
    "count_bridges",
    "count_bridges_by_sojourn",
    "count_by_sojourn",
    "count_positive_end_by_sojourn",
    "count_positive_end_by_sojourn_sum",
    "density",
    "enumerate_counts",
    "estimate_conditional_positive",
    "finite_n_ks_distance",
    "is_positive_side",
    "ks_distance_counts",
    "position",
    "simulate_sojourn",
    "sojourn_pmf",
    "sojourn_time",
]
