"""
Deterministic 64-bit hashing and streams.

Every stochastic quantity in the simulator is a pure function of its inputs through `hash64`, a
SplitMix-style avalanche that is defined arithmetically so traces and datasets reproduce bit-for-bit on any
platform.
"""

from dataclasses import dataclass
from typing import Sequence

from freeway_oracle.exceptions import UsageError

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB

MAX_HASH_INPUTS = 8

# stream tags
CHICKEN_TAG = 0x43484943_4B454E00
CAR_TAG = 0x43415253_00000000
LEN_TAG = 0x4C454E47_54480000
SAMPLE_TAG = 0x53414D50_4C450000


def finalize(z: int) -> int:
    """The three-step SplitMix64 avalanche, modulo 2^64"""
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


def hash64(inputs: Sequence[int]) -> int:
    """
    Folds an ordered list of 64-bit words into one 64-bit value.

    Starting from GOLDEN, every word is xor-ed into the accumulator which is then avalanched:

    >>> hex(hash64([0]))
    '0xe220a8397b1dcdaf'
    """
    if not inputs:
        raise UsageError("hash64 requires at least one input")
    if len(inputs) > MAX_HASH_INPUTS:
        raise UsageError(f"hash64 accepts at most {MAX_HASH_INPUTS} inputs, got {len(inputs)}")

    acc = GOLDEN
    for word in inputs:
        acc = finalize(acc ^ (word & MASK64))
    return acc


@dataclass(frozen=True, slots=True)
class StreamState:
    """Value type for a deterministic stream. Streams only advance through `stream_mix`"""

    state: int


def stream_init(seed: int, tag: int) -> StreamState:
    """Creates the stream identified by (seed, tag)"""
    return StreamState(hash64((seed, tag)))


def stream_mix(stream: StreamState, word: int) -> StreamState:
    """Returns a new stream whose state folds `word` into `stream`"""
    return StreamState(hash64((stream.state, word)))


def draw_uniform(stream: StreamState, n: int) -> int:
    """Reads an integer in [0, n) from the stream without advancing it"""
    if n < 1:
        raise UsageError(f"draw_uniform needs n >= 1, got {n}")
    return stream.state % n
