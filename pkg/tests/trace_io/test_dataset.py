from pathlib import Path

import pytest

from freeway_oracle.exceptions import TraceParseError, TraceValidationError
from freeway_oracle.experiments.types import ScenarioResult, ScenarioSpec
from freeway_oracle.trace_io.dataset import DATASET_HEADER, DatasetRow, read_dataset, read_results, write_results

HEADER = ",".join(DATASET_HEADER)


@pytest.fixture
def results() -> list:
    return [
        ScenarioResult(spec=ScenarioSpec(seed=1, start_t=0), length=57, actions="1" * 57, all_up=True),
        ScenarioResult(spec=ScenarioSpec(seed=1, start_t=9), length=4, actions="1021", all_up=False),
        ScenarioResult(spec=ScenarioSpec(seed=8, start_t=2), length=0, actions="", all_up=False, solvable=False),
    ]


def write_lines(path: Path, *lines: str) -> Path:
    path.write_text("".join(f"{line}\n" for line in lines), encoding="utf-8")
    return path


def test_write_format(tmp_path: Path, results: list) -> None:
    path = tmp_path / "dataset.csv"

    write_results(results, path)

    assert path.read_text(encoding="utf-8").splitlines() == [
        HEADER,
        f"1,0,57,{'1' * 57},true,true",
        "1,9,4,1021,false,true",
        "8,2,0,,false,false",
    ]


def test_written_files_are_byte_identical(tmp_path: Path, results: list) -> None:
    write_results(results, tmp_path / "a.csv")
    write_results(results, tmp_path / "b.csv")

    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    assert b"\r" not in (tmp_path / "a.csv").read_bytes()


def test_read_back(tmp_path: Path, results: list) -> None:
    path = tmp_path / "dataset.csv"
    write_results(results, path)

    assert read_results(path) == results
    assert read_dataset(path)[0] == DatasetRow.from_result(results[0])


def test_empty_dataset(tmp_path: Path) -> None:
    assert read_dataset(write_lines(tmp_path / "empty.csv", HEADER)) == []


def test_bad_header(tmp_path: Path) -> None:
    with pytest.raises(TraceParseError) as error:
        read_dataset(write_lines(tmp_path / "bad.csv", "seed,start,length"))

    assert error.value.line == 1


def test_missing_file_header(tmp_path: Path) -> None:
    (tmp_path / "blank.csv").write_text("", encoding="utf-8")

    with pytest.raises(TraceParseError):
        read_dataset(tmp_path / "blank.csv")


@pytest.mark.parametrize(
    "row",
    [
        "1,0,3,111,yes,true",
        "x,0,3,111,true,true",
        "1,0,3,131,false,true",
        "1,0,3,111,true",
    ],
)
def test_malformed_rows(tmp_path: Path, row: str) -> None:
    path = write_lines(tmp_path / "bad.csv", HEADER, "1,0,2,11,true,true", row)

    with pytest.raises(TraceParseError) as error:
        read_dataset(path)

    assert error.value.line == 3
    assert str(error.value).startswith("line 3: ")


@pytest.mark.parametrize(
    "row",
    [
        "1,0,4,111,true,true",
        "1,0,3,111,false,true",
        "1,0,3,101,true,true",
        "1,3000,3,111,true,true",
    ],
)
def test_rows_violating_invariants(tmp_path: Path, row: str) -> None:
    path = write_lines(tmp_path / "bad.csv", HEADER, row)

    with pytest.raises(TraceValidationError) as error:
        read_dataset(path)

    assert error.value.line == 2
