"""
Tests for range partitioning, merged scans and census reports.
"""
import pytest

from src.application.census.runner import CensusRunner
from src.application.census.scanner import (
    CensusLevel,
    CensusMode,
    fiber_entries,
    partition,
    sample_summary,
    split_counter,
)
from src.shared.exceptions import BudgetExceededError


def test_partition_covers_the_range():
    assert partition(10, 3, 4) == [(0, 4), (4, 8), (8, 10)]
    assert partition(10, 8, 4) == [(0, 4), (4, 8), (8, 10)]
    assert partition(10, 1, 4) == [(0, 10)]
    assert partition(0, 2, 4) == []


def test_counter_helpers():
    counter = {"1": 3, "1,2": 4, "sample": 2, "brute:1,2": 5, "formula:1,2": 5, "degenerate": 1}
    assert fiber_entries(counter) == {"1": 3, "1,2": 4}
    assert split_counter(counter, "brute:") == {"1,2": 5}
    assert sample_summary(counter) == (2, {"1,2": 5}, {"1,2": 5})
    assert sample_summary({"1": 1}) is None


def test_budget_is_enforced():
    with pytest.raises(BudgetExceededError):
        CensusRunner(budget=10).count_x_fibers(3)
    with pytest.raises(BudgetExceededError):
        CensusRunner().count_x_fibers(5)


def test_scan_does_not_depend_on_workers():
    stop = 3 ** 9
    single = CensusRunner(workers=1, chunk_size=5000).scan(3, CensusLevel.X, stop=stop)
    double = CensusRunner(workers=2, chunk_size=5000).scan(3, CensusLevel.X, stop=stop)
    assert single == double
    assert sum(single.values()) <= stop


def test_brute_sample_agrees_with_formula():
    runner = CensusRunner(chunk_size=2000, sample_fraction=0.05)
    counter = runner.scan(3, CensusLevel.V, CensusMode.BRUTE, seed=7, stop=3 ** 8)
    points, brute, formula = sample_summary(counter)
    assert points > 0
    assert brute == formula
    assert all(key.count(",") == 1 for key in fiber_entries(counter))


@pytest.mark.slow
def test_full_x_census_at_three():
    report = CensusRunner(workers=2).count_x_fibers(3)
    assert report.fiber_counts == {"1": 1516320, "2": 1632960}
    assert report.total == 3149280
    assert report.match
    assert report.ratios == {}


@pytest.mark.slow
def test_full_v_census_at_three():
    report = CensusRunner(workers=2).count_v_fibers(3, CensusMode.FORMULA)
    assert report.match
    assert set(report.fiber_counts.values()) == {382112640}
