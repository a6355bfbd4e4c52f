"""
Contains exceptions thrown by the library
"""

from typing import Optional


class FreewayOracleError(Exception):
    """Base error for everything raised by freeway_oracle"""


class UsageError(FreewayOracleError, ValueError):
    """Error indicating a call was made with arguments outside its preconditions"""


class GameOverError(FreewayOracleError):
    """Error indicating a step was attempted on a game that has already reached its final timestep"""


class NoPathError(FreewayOracleError):
    """Error indicating the search frontier was exhausted before any crossing was found"""


class PathReconstructionError(FreewayOracleError):
    """Error indicating a node's parent chain does not lead back to the start node"""


class TraceParseError(FreewayOracleError):
    """Error indicating a dataset or trace file could not be parsed"""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class TraceValidationError(TraceParseError):
    """Error indicating a file parsed but its contents violate an invariant of the carried type"""


class RecordNotFoundError(FreewayOracleError):
    """Error indicating a missing record in the results store"""
