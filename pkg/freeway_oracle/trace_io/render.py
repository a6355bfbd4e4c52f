"""
Text rendering of a trace, one frame per timestep
"""

from typing import Iterator, List

from freeway_oracle.env.config import GameConfig
from freeway_oracle.env.model import car_x
from freeway_oracle.exceptions import UsageError
from freeway_oracle.experiments.types import GameTrace

FRAME_COLUMNS = 80
LABEL_WIDTH = 5

CHICKEN = "C"
HIT = "*"
RIGHT_CAR = ">"
LEFT_CAR = "<"
EMPTY = "."
STRIP = " "


def column_of(x: int, config: GameConfig) -> int:
    """Screen column of an X coordinate"""
    return x * FRAME_COLUMNS // config.x_range


def chicken_row(y: int, config: GameConfig) -> int:
    """
    Row index of the chicken counted from the bottom: 0 is the start strip, 1..lane_count are the lanes and
    lane_count + 1 is the top strip.
    """
    if y >= config.y_cross:
        return config.lane_count + 1
    if y < config.lane_bands[0][0]:
        return 0
    lane = min((y - config.lane_base) // config.lane_width_step, config.lane_count - 1)
    return lane + 1


def _row(label: str, cells: List[str]) -> str:
    return f"{label:>{LABEL_WIDTH}} |{''.join(cells)}|"


def render_ascii(trace: GameTrace, t: int) -> str:
    """
    Frame of the trace at timestep `t`. Top strip first, then lanes 9 to 0, then the start strip. Cars are drawn
    with their direction, the chicken sits over the middle of the collision window.
    """
    if not 0 <= t < len(trace.y_series):
        raise UsageError(f"t must be in [0, {len(trace.y_series) - 1}], got {t}")

    config = trace.config
    y = trace.y_series[t]
    target = chicken_row(y, config)
    chicken_column = column_of((config.collide_x_lo + config.collide_x_hi) // 2, config)

    rows: List[str] = []
    for row in range(config.lane_count + 1, -1, -1):
        if row in (0, config.lane_count + 1):
            cells = [STRIP] * FRAME_COLUMNS
            label = "top" if row else "start"
        else:
            lane = row - 1
            cells = [EMPTY] * FRAME_COLUMNS
            marker = RIGHT_CAR if config.directions[lane] > 0 else LEFT_CAR
            cells[column_of(car_x(trace.seed, lane, t, config), config)] = marker
            label = f"L{lane}"

        if row == target:
            cells[chicken_column] = HIT if cells[chicken_column] in (RIGHT_CAR, LEFT_CAR) else CHICKEN
        rows.append(_row(label, cells))

    width = len(rows[0])
    score = sum(1 for c in trace.crossings if c.start_t + c.length <= t)
    header = f"t={t} y={y} score={score}"[:width].ljust(width)
    return "\n".join([header, *rows])


def render_animation(trace: GameTrace) -> Iterator[str]:
    """Every frame of the trace in order"""
    for t in range(len(trace.y_series)):
        yield render_ascii(trace, t)
