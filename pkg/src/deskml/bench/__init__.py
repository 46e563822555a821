"""Madelon-style data, file loaders and the timing harness."""

from .datasets import DESK_SCALE, MadelonSpec, make_madelon
from .io import load_csv, load_svmlight, write_csv, write_svmlight
from .runner import (
    ALGORITHMS,
    DEFAULT_PARAMS,
    BenchConfig,
    BenchRecord,
    parse_config,
    read_records,
    render_table,
    run_bench,
)

__all__ = [
    "ALGORITHMS",
    "DEFAULT_PARAMS",
    "DESK_SCALE",
    "BenchConfig",
    "BenchRecord",
    "MadelonSpec",
    "load_csv",
    "load_svmlight",
    "make_madelon",
    "parse_config",
    "read_records",
    "render_table",
    "run_bench",
    "write_csv",
    "write_svmlight",
]
