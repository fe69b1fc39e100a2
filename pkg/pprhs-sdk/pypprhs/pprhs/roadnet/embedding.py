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
Landmark-subset road network embedding: coordinate ``i`` of node ``u`` is the shortest-path
distance from ``u`` to the nearest node of landmark subset ``S_i``.
"""
import logging
import numbers
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from pprhs.codec import BlockParams, check_capacity
from pprhs.exceptions import CapacityError, RoadNetworkError

if TYPE_CHECKING:
    from pprhs.roadnet.network import RoadNetwork

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RneVector:
    coords: Tuple[int, ...]

    def __post_init__(self):
        if any(isinstance(c, bool) or not isinstance(c, numbers.Integral) for c in self.coords):
            raise RoadNetworkError(f"Embedding coordinates must be integers, got {tuple(self.coords)}")
        coords = tuple(int(c) for c in self.coords)
        if any(c < 0 for c in coords):
            raise RoadNetworkError(f"Embedding coordinates are unsigned, got {coords}")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def check_capacity(self, p: BlockParams) -> None:
        for i, value in enumerate(self.coords):
            try:
                check_capacity(value, p)
            except CapacityError as e:
                raise CapacityError(f"Coordinate {i} of {self.coords}: {e.message}") from e


VectorLike = Union[RneVector, Sequence[int]]


def rne_distance(a: VectorLike, b: VectorLike) -> int:
    """Max-metric distance ``max_i |a_i - b_i|``."""
    if len(a) != len(b):
        raise RoadNetworkError(f"Embedding dimension mismatch: {len(a)} != {len(b)}")
    return max((abs(int(x) - int(y)) for x, y in zip(a, b)), default=0)


class EmbeddingTable:
    """
    Embedding of every node of a network as an ``N x n`` integer matrix; row ``u`` is ``E(u)``.
    """

    def __init__(self, matrix: np.ndarray):
        if matrix.ndim != 2 or matrix.shape[0] == 0:
            raise RoadNetworkError("Embedding table is empty")
        self._matrix = matrix.astype(np.int64, copy=True)
        self._matrix.setflags(write=False)

    @classmethod
    def build(cls, net: "RoadNetwork") -> "EmbeddingTable":
        matrix = np.zeros((len(net), net.dim), dtype=np.int64)
        for i in range(net.dim):
            for node, dist in net.landmark_distances(i).items():
                matrix[node, i] = dist
        _logger.debug("Embedded %d nodes into %d dimensions", len(net), net.dim)
        return cls(matrix)

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[1]

    @property
    def max_coordinate(self) -> int:
        return int(self._matrix.max())

    def __len__(self) -> int:
        return self._matrix.shape[0]

    def vector(self, node: int) -> RneVector:
        if not 0 <= node < len(self):
            raise RoadNetworkError(f"Unknown node id {node!r}")
        return RneVector(tuple(int(c) for c in self._matrix[node]))

    def distances_to(self, vec: VectorLike) -> np.ndarray:
        """Max-metric distance from ``vec`` to every row."""
        if len(vec) != self.dim:
            raise RoadNetworkError(f"Embedding dimension mismatch: {len(vec)} != {self.dim}")
        target = np.asarray([int(c) for c in vec], dtype=np.int64)
        return np.abs(self._matrix - target).max(axis=1)

    def nodes_matching(self, vec: VectorLike) -> List[int]:
        return [int(u) for u in np.flatnonzero(self.distances_to(vec) == 0)]


def rne_embed(net: "RoadNetwork", node: int, params: Optional[BlockParams] = None) -> RneVector:
    """
    Embedding of ``node``; rows come from the network's cached table. When ``params`` is given,
    every coordinate must fit into its ``m`` blocks of ``l`` bits.
    """
    net.check_node(node)
    vec = net.embedding_table.vector(int(node))
    if params is not None:
        vec.check_capacity(params)
    return vec
