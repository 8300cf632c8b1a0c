"""Exact counts of rational plane curves with an m-fold singular point."""

from ._core import (
    Engine,
    InvalidQuery,
    MemoFormatError,
    blowup_gw,
    codim_j,
    count,
    fixed_singularity_count,
    golden_tables,
    n_plane,
    verify,
)

__all__ = [
    "Engine",
    "InvalidQuery",
    "MemoFormatError",
    "blowup_gw",
    "codim_j",
    "count",
    "fixed_singularity_count",
    "golden_tables",
    "n_plane",
    "verify",
]
