"""
Game traces as JSON, plus the per-timestep Y series as CSV
"""

import csv
from pathlib import Path
from typing import Union

import orjson
from pydantic import ValidationError

from freeway_oracle.env.actions import decode_actions
from freeway_oracle.exceptions import GameOverError, TraceParseError, TraceValidationError
from freeway_oracle.experiments.games import build_trace
from freeway_oracle.experiments.types import GameTrace

PathLike = Union[str, Path]

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_APPEND_NEWLINE


def dumps_trace(trace: GameTrace) -> bytes:
    """Canonical JSON encoding of a trace"""
    return orjson.dumps(trace.model_dump(mode="json"), option=JSON_OPTIONS)


def loads_trace(data: Union[bytes, str]) -> GameTrace:
    """Parses and validates a trace"""
    try:
        payload = orjson.loads(data)
    except orjson.JSONDecodeError as e:
        raise TraceParseError(f"invalid JSON: {e}") from e

    if not isinstance(payload, dict):
        raise TraceParseError("a trace must be a JSON object")

    try:
        return GameTrace.model_validate(payload)
    except ValidationError as e:
        raise TraceValidationError(str(e)) from e


def write_trace(trace: GameTrace, path: PathLike) -> None:
    """Writes a trace. Identical traces always give byte-identical files"""
    Path(path).write_bytes(dumps_trace(trace))


def read_trace(path: PathLike) -> GameTrace:
    """Reads a trace written by `write_trace`"""
    return loads_trace(Path(path).read_bytes())


def verify_trace(trace: GameTrace) -> None:
    """Replays a trace and checks its score, crossings and Y series against the simulator"""
    try:
        replayed = build_trace(trace.seed, decode_actions(trace.actions), trace.config)
    except GameOverError as e:
        raise TraceValidationError(f"the actions run past the end of the game: {e}") from e

    if replayed.score != trace.score:
        raise TraceValidationError(f"replay scores {replayed.score}, trace claims {trace.score}")
    if replayed.crossings != trace.crossings:
        raise TraceValidationError("replayed crossings differ from the trace")
    if replayed.y_series != trace.y_series:
        raise TraceValidationError("replayed y series differs from the trace")


def write_y_series(trace: GameTrace, path: PathLike) -> None:
    """Writes `t,y` for every timestep of the trace"""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(("t", "y"))
        writer.writerows(enumerate(trace.y_series))
