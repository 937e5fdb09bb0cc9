"""
Range scans over ker(psi)(F_p) producing mergeable fiber counters.
"""
import logging
from enum import Enum
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from src.application.census.kernels import (
    all_vectors,
    det_mod_batch,
    f1_batch,
    f2_gram_batch,
    legendre_table,
    phi_batch,
    points_block,
    quadratic_values,
)
from src.application.census.predictions import fiber_key
from src.domain.qforms.finite import count_representations
from src.domain.qforms.forms import radical_split
from src.domain.scalars.fields import prime_field
from src.domain.scalars.linalg import to_matrix

logger = logging.getLogger(__name__)

Counter = Dict[str, int]


class CensusLevel(str, Enum):
    """What is counted: f1-fibers in X or (f1, f2)-fibers in V."""
    X = "X"
    V = "V"


class CensusMode(str, Enum):
    """How the v-direction is counted at level V."""
    FORMULA = "formula"
    BRUTE = "brute"


class ScanTask(NamedTuple):
    """One contiguous range of kernel coefficient indices; picklable for worker processes."""
    p: int
    level: str
    mode: str
    start: int
    stop: int
    kernel: Tuple[Tuple[int, ...], ...]
    chunk_size: int
    sample_fraction: float
    seed: int


def _add(counter: Counter, key: str, value: int) -> None:
    if value:
        counter[key] = counter.get(key, 0) + int(value)


def _degenerate_counts(gram: np.ndarray, p: int) -> Dict[int, int]:
    """Exact fallback for a singular Gram matrix: counts of v with v^t G v = j for j != 0."""
    ctx = prime_field(p)
    diag, radical = radical_split(ctx, to_matrix(ctx, gram.tolist()))
    ints = [int(a) for a in diag]
    return {j: count_representations(ints, radical, j, p) for j in range(1, p)}


def _v_formula(
    counter: Counter, f1: np.ndarray, grams: np.ndarray, p: int, chi: np.ndarray, prefix: str = ""
) -> None:
    """Closed-form counts p^5 - eta p^2 (eta = chi(-det G)) for each nonzero value of f2."""
    det = det_mod_batch(grams, p)
    singular = det == 0
    eta = chi[(-det) % p]
    per_value = p ** 5 - eta * p ** 2
    for i in range(1, p):
        mask = (f1 == i) & ~singular
        total = int(per_value[mask].sum())
        for j in range(1, p):
            _add(counter, prefix + fiber_key(i, j), total)
    for row in np.nonzero(singular)[0]:
        logger.warning(f"Singular f2 Gram matrix at a point with f1 = {int(f1[row])}")
        _add(counter, prefix + "degenerate", 1)
        for j, n in _degenerate_counts(grams[row], p).items():
            _add(counter, prefix + fiber_key(int(f1[row]), j), n)


def _v_brute(counter: Counter, f1: np.ndarray, grams: np.ndarray, p: int, vectors: np.ndarray) -> None:
    values = quadratic_values(grams, vectors, p)
    for i in range(1, p):
        rows = f1 == i
        if not rows.any():
            continue
        for j in range(1, p):
            _add(counter, "brute:" + fiber_key(i, j), int((values[rows] == j).sum()))


def scan_range(task: ScanTask) -> Counter:
    """
    Count one range of kernel points.

    Keys are ``"i"`` at level X and ``"i,j"`` at level V; in brute mode the
    sampled points add ``"sample"``, ``"brute:i,j"`` and ``"formula:i,j"``.
    """
    p = task.p
    kernel = np.array(task.kernel, dtype=np.int64)
    chi = legendre_table(p)
    vectors = all_vectors(p) if task.mode == CensusMode.BRUTE.value else None
    counter: Counter = {}
    for lo in range(task.start, task.stop, task.chunk_size):
        hi = min(lo + task.chunk_size, task.stop)
        points = points_block(kernel, p, lo, hi)
        if task.level == CensusLevel.X.value:
            f1 = f1_batch(points, p)
            counts = np.bincount(f1, minlength=p)
            for i in range(1, p):
                _add(counter, fiber_key(i), counts[i])
            continue

        f1 = f1_batch(points, p)
        keep = f1 != 0
        points, f1 = points[keep], f1[keep]
        grams = f2_gram_batch(phi_batch(points, p), p)
        _v_formula(counter, f1, grams, p, chi)
        if vectors is not None:
            rng = np.random.default_rng([task.seed, lo])
            sample = rng.random(points.shape[0]) < task.sample_fraction
            if sample.any():
                _add(counter, "sample", int(sample.sum()))
                _v_formula(counter, f1[sample], grams[sample], p, chi, prefix="formula:")
                _v_brute(counter, f1[sample], grams[sample], p, vectors)
    logger.debug(f"Scanned [{task.start}, {task.stop}) at p={p}, level {task.level}")
    return counter


def partition(total: int, parts: int, chunk_size: int) -> List[Tuple[int, int]]:
    """Contiguous ranges covering [0, total), at most ``parts`` of them and chunk-aligned."""
    chunks = -(-total // chunk_size)
    parts = max(1, min(parts, chunks))
    per_part = -(-chunks // parts)
    ranges = []
    for k in range(parts):
        start = k * per_part * chunk_size
        stop = min(total, (k + 1) * per_part * chunk_size)
        if start < stop:
            ranges.append((start, stop))
    return ranges


def make_tasks(
    p: int,
    level: CensusLevel,
    mode: CensusMode,
    kernel: np.ndarray,
    ranges: List[Tuple[int, int]],
    chunk_size: int,
    sample_fraction: float,
    seed: int,
) -> List[ScanTask]:
    frozen = tuple(tuple(int(c) for c in row) for row in kernel)
    return [
        ScanTask(p, level.value, mode.value, start, stop, frozen, chunk_size, sample_fraction, seed)
        for start, stop in ranges
    ]


def split_counter(counter: Counter, prefix: str) -> Counter:
    """Entries whose key starts with ``prefix``, with the prefix removed."""
    return {k[len(prefix):]: v for k, v in counter.items() if k.startswith(prefix)}


def fiber_entries(counter: Counter) -> Counter:
    """Plain fiber keys only (digits and commas)."""
    return {k: v for k, v in counter.items() if k.replace(",", "").isdigit()}


def sample_summary(counter: Counter) -> Optional[Tuple[int, Counter, Counter]]:
    if "sample" not in counter:
        return None
    return counter["sample"], split_counter(counter, "brute:"), split_counter(counter, "formula:")
