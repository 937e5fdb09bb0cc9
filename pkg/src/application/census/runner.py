"""
CensusRunner: exhaustive fiber counts over F_p compared with orbit predictions.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel, Field
from toolz import merge_with

from src.application.census.kernels import kernel_matrix
from src.application.census.predictions import predicted_orbit_counts
from src.application.census.scanner import (
    CensusLevel,
    CensusMode,
    Counter,
    fiber_entries,
    make_tasks,
    partition,
    sample_summary,
    scan_range,
)
from src.shared.config import settings
from src.shared.exceptions import BudgetExceededError

logger = logging.getLogger(__name__)

KERNEL_DIM = 14


class SampleCheck(BaseModel):
    """Brute-force and closed-formula V-level counts on the same sampled points."""

    points: int
    brute: Dict[str, int]
    formula: Dict[str, int]
    match: bool


class CensusReport(BaseModel):
    """Observed fiber counts, their predictions and whether they agree exactly."""

    p: int
    level: CensusLevel
    mode: CensusMode
    fiber_counts: Dict[str, int]
    predictions: Dict[str, int]
    ratios: Dict[str, str] = Field(default_factory=dict)
    total: int
    match: bool
    workers: int
    seed: int
    elapsed: float
    sample: Optional[SampleCheck] = None


class CensusRunner:
    """
    Runner for finite-field censuses.

    The coefficient space of ker(psi) is cut into contiguous ranges that are
    scanned independently and merged by addition, so the result does not
    depend on the number of workers.
    """

    def __init__(
        self,
        workers: Optional[int] = None,
        chunk_size: Optional[int] = None,
        budget: Optional[int] = None,
        sample_fraction: Optional[float] = None,
    ):
        """
        Initialize the runner.

        Args:
            workers: Worker processes; 1 scans in-process
            chunk_size: Points per vectorized batch
            budget: Largest admissible number of kernel points
            sample_fraction: Share of points re-counted by brute force in brute mode
        """
        self.workers = workers or settings.CENSUS_WORKERS
        self.chunk_size = chunk_size or settings.CENSUS_CHUNK_SIZE
        self.budget = budget or settings.CENSUS_POINT_BUDGET
        self.sample_fraction = (
            sample_fraction if sample_fraction is not None else settings.CENSUS_SAMPLE_FRACTION
        )

    def _check_budget(self, p: int) -> int:
        total = p ** KERNEL_DIM
        if total > self.budget:
            raise BudgetExceededError(
                f"p = {p} needs {total} kernel points, above the budget of {self.budget}"
            )
        return total

    def scan(
        self,
        p: int,
        level: CensusLevel,
        mode: CensusMode = CensusMode.FORMULA,
        seed: int = 0,
        stop: Optional[int] = None,
    ) -> Counter:
        """
        Scan kernel indices [0, stop) and return the merged counter.

        Args:
            p: Odd prime
            level: X or V
            mode: Formula or brute at level V
            seed: Seed of the brute-force sample
            stop: Optional prefix of the index space, for partial scans
        """
        total = self._check_budget(p)
        stop = total if stop is None else min(stop, total)
        ranges = partition(stop, self.workers * 4, self.chunk_size)
        tasks = make_tasks(
            p, level, mode, kernel_matrix(p), ranges, self.chunk_size, self.sample_fraction, seed
        )
        logger.info(f"Census p={p} level={level.value}: {len(tasks)} ranges on {self.workers} workers")
        if self.workers == 1:
            parts: List[Counter] = [scan_range(task) for task in tasks]
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                parts = list(pool.map(scan_range, tasks))
        return merge_with(sum, *parts) if parts else {}

    def _report(
        self,
        p: int,
        level: CensusLevel,
        mode: CensusMode,
        counter: Counter,
        predictions: Dict[str, int],
        seed: int,
        started: float,
    ) -> CensusReport:
        observed = fiber_entries(counter)
        ratios = {
            key: str(Fraction(observed.get(key, 0), expected))
            for key, expected in predictions.items()
            if observed.get(key, 0) != expected
        }
        match = not ratios and set(observed) <= set(predictions)
        sample = None
        summary = sample_summary(counter)
        if summary is not None:
            points, brute, formula = summary
            sample = SampleCheck(points=points, brute=brute, formula=formula, match=brute == formula)
            match = match and sample.match
        if not match:
            logger.warning(f"Census at p={p}, level {level.value} disagrees with predictions: {ratios}")
        return CensusReport(
            p=p,
            level=level,
            mode=mode,
            fiber_counts=observed,
            predictions=predictions,
            ratios=ratios,
            total=sum(observed.values()),
            match=match,
            workers=self.workers,
            seed=seed,
            elapsed=round(time.monotonic() - started, 3),
            sample=sample,
        )

    def count_x_fibers(self, p: int, seed: int = 0) -> CensusReport:
        """Counts of x in ker(psi)(F_p) per nonzero value of f1."""
        started = time.monotonic()
        table = predicted_orbit_counts(p)
        counter = self.scan(p, CensusLevel.X, CensusMode.FORMULA, seed)
        return self._report(p, CensusLevel.X, CensusMode.FORMULA, counter, table.x_fibers, seed, started)

    def count_v_fibers(self, p: int, mode: CensusMode = CensusMode.FORMULA, seed: int = 0) -> CensusReport:
        """Counts of (x, v) per pair of nonzero values (f1, f2)."""
        started = time.monotonic()
        table = predicted_orbit_counts(p)
        counter = self.scan(p, CensusLevel.V, mode, seed)
        return self._report(p, CensusLevel.V, mode, counter, table.v_fibers, seed, started)


def count_x_fibers(p: int, **options) -> CensusReport:
    return CensusRunner(**options).count_x_fibers(p)


def count_v_fibers(p: int, mode: CensusMode = CensusMode.FORMULA, seed: int = 0, **options) -> CensusReport:
    return CensusRunner(**options).count_v_fibers(p, mode, seed)
