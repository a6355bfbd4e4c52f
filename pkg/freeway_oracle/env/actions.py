"""
The three-valued input alphabet
"""

from enum import IntEnum
from typing import Iterable, List, Sequence

from freeway_oracle.exceptions import UsageError


class Action(IntEnum):
    """Inputs accepted by the game, using the numeric codes of the Atari action space"""

    STAY = 0
    UP = 1
    DOWN = 2

    @classmethod
    def parse(cls, code: str) -> "Action":
        """Parses one character code ('0', '1' or '2')"""
        if code not in ("0", "1", "2"):
            raise UsageError(f"invalid action code {code!r}")
        return cls(int(code))


# expansion order of the oracle
EXPANSION_ORDER = (Action.UP, Action.STAY, Action.DOWN)


def encode_actions(actions: Iterable[Action]) -> str:
    """Encodes actions as a string over {0, 1, 2}"""
    return "".join(str(int(a)) for a in actions)


def decode_actions(codes: str) -> List[Action]:
    """Inverse of `encode_actions`"""
    return [Action.parse(c) for c in codes]


def is_all_up(actions: Sequence[Action]) -> bool:
    """True if the sequence is non-empty and made only of UP"""
    return bool(actions) and all(a is Action.UP for a in actions)
