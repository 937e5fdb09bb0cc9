"""Finite-field censuses of the (f1, f2) fibers."""
from src.application.census.predictions import PredictionTable, predicted_orbit_counts
from src.application.census.runner import (
    CensusReport,
    CensusRunner,
    SampleCheck,
    count_v_fibers,
    count_x_fibers,
)
from src.application.census.scanner import CensusLevel, CensusMode

__all__ = [
    "CensusLevel",
    "CensusMode",
    "CensusReport",
    "CensusRunner",
    "PredictionTable",
    "SampleCheck",
    "count_v_fibers",
    "count_x_fibers",
    "predicted_orbit_counts",
]
