"""JSON documents, sweep CSV output and run persistence."""

from .documents import (
    ALL_DOCUMENTS,
    RationalModel,
    GroupDocument,
    ThetaDocument,
    SuenDocument,
    SweepMetadata,
    SweepPointModel,
    ExactValueDocument,
    ExactDistributionDocument,
    MissStatsDocument,
)
from .run_output import CSV_HEADER, SweepRunOutput, write_sweep_csv, sweep_csv_text, sweep_metadata

__all__ = [
    "ALL_DOCUMENTS",
    "RationalModel",
    "GroupDocument",
    "ThetaDocument",
    "SuenDocument",
    "SweepMetadata",
    "SweepPointModel",
    "ExactValueDocument",
    "ExactDistributionDocument",
    "MissStatsDocument",
    "CSV_HEADER",
    "SweepRunOutput",
    "write_sweep_csv",
    "sweep_csv_text",
    "sweep_metadata",
]
