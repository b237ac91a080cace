from fractions import Fraction
from math import comb

import pytest

import sojourn


def test_path_classifiers():
    assert sojourn.position([1, -1], 2) == 0
    assert sojourn.sojourn_time([1, -1]) == 2
    assert sojourn.sojourn_time([-1, 1]) == 0
    assert sojourn.is_positive_side([1, -1], 2)
    assert sojourn.classify([1, -1]) == ["all", "bridge", "positive-end"]
    assert sojourn.classify([-1, 1]) == ["all", "bridge"]
    with pytest.raises(IndexError):
        sojourn.is_positive_side([1, -1], 0)
    with pytest.raises(ValueError):
        sojourn.classify([])


def test_counts_are_python_ints():
    assert sojourn.count_bridges(68) == comb(68, 34)
    assert sojourn.count_by_sojourn(2, 1) == 4
    assert sojourn.count_bridges_by_sojourn(3, 2) == 5
    assert sojourn.count_positive_end_by_sojourn(200, 70) == sojourn.count_positive_end_by_sojourn_sum(200, 70)
    with pytest.raises(ValueError):
        sojourn.count_by_sojourn(2, 3)


def test_enumeration_matches_closed_forms():
    table = sojourn.enumerate_counts(10, partitions=4)
    for k in range(6):
        assert table["all"][2 * k] == sojourn.count_by_sojourn(5, k)
        assert table["bridge"][2 * k] == sojourn.count_bridges_by_sojourn(5, k)
        assert table["positive-end"][2 * k] == sojourn.count_positive_end_by_sojourn(5, k)
    with pytest.raises(RuntimeError):
        sojourn.enumerate_counts(40)


def test_probabilities_are_fractions():
    assert sojourn.conditional_positive_probability(10, 7) == Fraction(7, 10)
    assert sojourn.sojourn_pmf(2, "positive-end") == [0, Fraction(1, 4), Fraction(3, 4)]
    assert sum(sojourn.sojourn_pmf(50, "bridge")) == 1


def test_limit_laws():
    assert sojourn.cdf("arcsine", 0.5) == pytest.approx(0.5)
    assert sojourn.cdf("mp-positive", 0.5) == pytest.approx(0.181690113816209)
    assert sojourn.density("mp-negative", 0.5) == pytest.approx(0.6366197723675814)
    assert sojourn.finite_n_ks_distance(1000, "positive-end", "mp-positive") <= 0.05
    assert sojourn.ks_distance_counts([1, 0, 3], "arcsine") > 0


def test_sampling_is_reproducible():
    a = sojourn.simulate_sojourn(20, 5000, seed=3, condition="positive-end")
    b = sojourn.simulate_sojourn(20, 5000, seed=3, condition="positive-end", threads=2)
    assert a == b
    assert sum(a["counts"]) == a["accepted"] <= a["proposals"] == 5000
    est = sojourn.estimate_conditional_positive(5, 20000, seed=1)
    if 5 in est:
        assert est[5][0] == 1.0
    if 0 in est:
        assert est[0][0] == 0.0
