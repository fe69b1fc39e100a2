# Licensed to the Apache Software Foundation (ASF) under one or more
# contributor license agreements. See the NOTICE file distributed with
# this work for additional information regarding copyright ownership.
# The ASF licenses this file to You under the Apache License, Version 2.0
# (the "License"); you may not use this file except in compliance with
# the License. You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Block decomposition of embedding coordinates.

A coordinate is split into ``m`` little-endian blocks of ``l`` bits; block ``j`` carries the
weight ``w_j = (2^l)^j``.
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from pprhs.exceptions import CapacityError, CodecError

MAX_BLOCK_BITS = 8
MAX_TOTAL_BITS = 62


@dataclass(frozen=True)
class BlockParams:
    l: int  # noqa: E741
    m: int

    def __post_init__(self):
        if not isinstance(self.l, int) or not 1 <= self.l <= MAX_BLOCK_BITS:
            raise CodecError(f"Block size l must be an integer in [1, {MAX_BLOCK_BITS}], got {self.l}")
        if not isinstance(self.m, int) or self.m < 1:
            raise CodecError(f"Block count m must be a positive integer, got {self.m}")
        if self.l * self.m > MAX_TOTAL_BITS:
            raise CodecError(f"m*l must not exceed {MAX_TOTAL_BITS} bits, got {self.l * self.m}")

    @property
    def base(self) -> int:
        """Number of distinct block values, 2^l."""
        return 1 << self.l

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(self.weight(j) for j in range(self.m))

    @property
    def capacity(self) -> int:
        """Largest coordinate representable in m blocks."""
        return (1 << (self.l * self.m)) - 1

    @property
    def max_payload(self) -> int:
        """Bound on the magnitude of any weighted difference."""
        return (self.base - 1) * self.weight(self.m - 1)

    def weight(self, j: int) -> int:
        if not 0 <= j < self.m:
            raise CodecError(f"Block index {j} out of range [0, {self.m})")
        return 1 << (self.l * j)

    @classmethod
    def for_max_value(cls, max_value: int, l: int) -> "BlockParams":  # noqa: E741
        """Smallest m such that ``max_value`` fits into m blocks of l bits."""
        if max_value < 0:
            raise CodecError(f"Coordinates are unsigned, got {max_value}")
        bits = max(max_value.bit_length(), 1)
        return cls(l=l, m=-(-bits // l))


def check_capacity(value: int, p: BlockParams) -> None:
    if not isinstance(value, int) or value < 0 or value > p.capacity:
        raise CapacityError(f"Coordinate {value} does not fit into {p.m} blocks of {p.l} bits")


def decompose(value: int, p: BlockParams) -> List[int]:
    """
    Split ``value`` into ``p.m`` blocks, least significant first.
    """
    check_capacity(value, p)
    mask = p.base - 1
    return [(value >> (p.l * j)) & mask for j in range(p.m)]


def recompose(blocks: Sequence[int], p: BlockParams) -> int:
    if len(blocks) != p.m:
        raise CodecError(f"Expected {p.m} blocks, got {len(blocks)}")
    value = 0
    for j, block in enumerate(blocks):
        _check_block(block, p)
        value += block * p.weight(j)
    return value


def weighted_difference(q: int, block: int, j: int, p: BlockParams) -> int:
    """
    The quantity a rider masks for candidate value ``q``: ``(q - block) * w_j``.
    """
    _check_block(q, p)
    _check_block(block, p)
    return (q - block) * p.weight(j)


def _check_block(block: int, p: BlockParams) -> None:
    if not isinstance(block, int) or not 0 <= block < p.base:
        raise CodecError(f"Block value {block} out of range [0, {p.base})")
