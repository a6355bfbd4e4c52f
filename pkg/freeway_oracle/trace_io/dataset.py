"""
Scenario datasets as CSV.

```
seed,start_t,length,actions,all_up,solvable
4211,873,57,111111111111111111111111111111111111111111111111111111111,true,true
```
"""

import csv
from pathlib import Path
from typing import Iterable, List, Sequence, Union

from pydantic import BaseModel, ConfigDict, ValidationError

from freeway_oracle.exceptions import TraceParseError, TraceValidationError
from freeway_oracle.experiments.types import ScenarioResult, ScenarioSpec

DATASET_HEADER = ("seed", "start_t", "length", "actions", "all_up", "solvable")

PathLike = Union[str, Path]


class DatasetRow(BaseModel):
    """One line of a dataset file"""

    model_config = ConfigDict(frozen=True)

    seed: int
    start_t: int
    length: int
    actions: str
    all_up: bool
    solvable: bool

    @classmethod
    def from_result(cls, result: ScenarioResult) -> "DatasetRow":
        """Row for a scenario result"""
        return cls(
            seed=result.spec.seed,
            start_t=result.spec.start_t,
            length=result.length,
            actions=result.actions,
            all_up=result.all_up,
            solvable=result.solvable,
        )

    def to_result(self) -> ScenarioResult:
        """Scenario result carried by the row; validates every invariant of ScenarioResult"""
        return ScenarioResult(
            spec=ScenarioSpec(seed=self.seed, start_t=self.start_t),
            length=self.length,
            actions=self.actions,
            all_up=self.all_up,
            solvable=self.solvable,
        )


def _format_bool(value: bool) -> str:
    return "true" if value else "false"


def _parse_bool(value: str, line: int, field: str) -> bool:
    if value == "true":
        return True
    if value == "false":
        return False
    raise TraceParseError(f"{field} must be 'true' or 'false', got {value!r}", line)


def _parse_int(value: str, line: int, field: str) -> int:
    try:
        return int(value)
    except ValueError as e:
        raise TraceParseError(f"{field} must be an integer, got {value!r}", line) from e


def write_dataset(rows: Iterable[DatasetRow], path: PathLike) -> None:
    """Writes rows in the order given. Identical rows always give byte-identical files"""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(DATASET_HEADER)
        for row in rows:
            writer.writerow(
                (
                    row.seed,
                    row.start_t,
                    row.length,
                    row.actions,
                    _format_bool(row.all_up),
                    _format_bool(row.solvable),
                )
            )


def write_results(results: Sequence[ScenarioResult], path: PathLike) -> None:
    """Writes scenario results as a dataset file"""
    write_dataset((DatasetRow.from_result(r) for r in results), path)


def read_dataset(path: PathLike) -> List[DatasetRow]:
    """Reads and validates a dataset file. Errors carry the 1-based line number"""
    rows: List[DatasetRow] = []

    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None or tuple(header) != DATASET_HEADER:
            raise TraceParseError(f"expected header {','.join(DATASET_HEADER)}", 1)

        for line, fields in enumerate(reader, start=2):
            if len(fields) != len(DATASET_HEADER):
                raise TraceParseError(f"expected {len(DATASET_HEADER)} fields, got {len(fields)}", line)

            seed, start_t, length, actions, all_up, solvable = fields
            if set(actions) - {"0", "1", "2"}:
                raise TraceParseError(f"actions may only contain 0, 1 and 2, got {actions!r}", line)

            row = DatasetRow(
                seed=_parse_int(seed, line, "seed"),
                start_t=_parse_int(start_t, line, "start_t"),
                length=_parse_int(length, line, "length"),
                actions=actions,
                all_up=_parse_bool(all_up, line, "all_up"),
                solvable=_parse_bool(solvable, line, "solvable"),
            )
            try:
                row.to_result()
            except ValidationError as e:
                raise TraceValidationError(str(e), line) from e

            rows.append(row)

    return rows


def read_results(path: PathLike) -> List[ScenarioResult]:
    """Reads a dataset file back into scenario results"""
    return [row.to_result() for row in read_dataset(path)]
