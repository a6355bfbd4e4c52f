"""
File formats and rendering
"""

from freeway_oracle.trace_io.dataset import (
    DATASET_HEADER,
    DatasetRow,
    read_dataset,
    read_results,
    write_dataset,
    write_results,
)
from freeway_oracle.trace_io.graph_export import write_search_graph
from freeway_oracle.trace_io.render import render_animation, render_ascii
from freeway_oracle.trace_io.trace import (
    dumps_trace,
    loads_trace,
    read_trace,
    verify_trace,
    write_trace,
    write_y_series,
)

__all__ = [
    "DATASET_HEADER",
    "DatasetRow",
    "dumps_trace",
    "loads_trace",
    "read_dataset",
    "read_results",
    "read_trace",
    "render_animation",
    "render_ascii",
    "verify_trace",
    "write_dataset",
    "write_results",
    "write_search_graph",
    "write_trace",
    "write_y_series",
]
