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

import logging
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from pprhs.codec import BlockParams
from pprhs.entities._pprhs_object import _PprhsObject
from pprhs.exceptions import ConfigurationError, RoadNetworkError
from pprhs.roadnet.embedding import EmbeddingTable
from pprhs.utils.fileio import read_text, write_text

_logger = logging.getLogger(__name__)

WEIGHT = "weight"

DEFAULT_NUM_LANDMARKS = 8
DEFAULT_LANDMARK_SIZE = 1


class RoadNetwork(_PprhsObject):
    """
    Weighted undirected road graph with dense node ids ``0..N-1`` and the landmark subsets
    ``S_1..S_n`` that define its embedding.
    """

    def __init__(
        self,
        num_nodes: int,
        edges: Iterable[Tuple[int, int, int]],
        landmark_subsets: Sequence[Iterable[int]],
    ):
        if num_nodes < 1:
            raise RoadNetworkError(f"A road network needs at least one node, got {num_nodes}")
        graph = nx.Graph()
        graph.add_nodes_from(range(num_nodes))
        for u, v, w in edges:
            for node in (u, v):
                if not isinstance(node, int) or not 0 <= node < num_nodes:
                    raise RoadNetworkError(f"Edge ({u}, {v}) references unknown node {node}")
            if not isinstance(w, int) or w < 0:
                raise RoadNetworkError(
                    f"Edge ({u}, {v}) has invalid weight {w}, expected integer meters >= 0"
                )
            graph.add_edge(u, v, **{WEIGHT: w})
        if not nx.is_connected(graph):
            raise RoadNetworkError("Road network is not connected")

        subsets = []
        for index, subset in enumerate(landmark_subsets):
            frozen = frozenset(subset)
            if not frozen:
                raise RoadNetworkError(f"Landmark subset {index} is empty")
            unknown = [node for node in frozen if node not in graph]
            if unknown:
                raise RoadNetworkError(f"Landmark subset {index} references unknown nodes {sorted(unknown)}")
            subsets.append(frozen)
        if not subsets:
            raise RoadNetworkError("At least one landmark subset is required")

        self._graph = nx.freeze(graph)
        self._landmark_subsets = tuple(subsets)

    @property
    def nodes(self) -> List[int]:
        """Dense node ids."""
        return list(range(self._graph.number_of_nodes()))

    @property
    def edges(self) -> List[Tuple[int, int, int]]:
        """Edges as ``(u, v, weight)`` with ``u < v``, sorted."""
        return sorted((min(u, v), max(u, v), w) for u, v, w in self._graph.edges(data=WEIGHT))

    @property
    def landmark_subsets(self) -> Tuple[frozenset, ...]:
        return self._landmark_subsets

    @property
    def graph(self) -> nx.Graph:
        """Frozen networkx view of the road graph."""
        return self._graph

    @property
    def dim(self) -> int:
        """Embedding dimension n."""
        return len(self._landmark_subsets)

    def __len__(self) -> int:
        return self._graph.number_of_nodes()

    def check_node(self, node: int) -> None:
        if isinstance(node, bool) or not isinstance(node, (int, np.integer)) or node not in self._graph:
            raise RoadNetworkError(f"Unknown node id {node!r}")

    def landmark_distances(self, index: int) -> dict:
        """Distance from every node to the nearest member of landmark subset ``index``."""
        return nx.multi_source_dijkstra_path_length(
            self._graph, set(self._landmark_subsets[index]), weight=WEIGHT
        )

    @cached_property
    def diameter(self) -> int:
        """Largest shortest-path distance over all node pairs."""
        lengths = nx.all_pairs_dijkstra_path_length(self._graph, weight=WEIGHT)
        return max(max(dist.values()) for _, dist in lengths)

    @cached_property
    def embedding_table(self) -> EmbeddingTable:
        """Embedding of every node, computed once per network."""
        return EmbeddingTable.build(self)


def shortest_path_distance(net: RoadNetwork, u: int, v: int) -> int:
    net.check_node(u)
    net.check_node(v)
    try:
        return int(nx.dijkstra_path_length(net.graph, int(u), int(v), weight=WEIGHT))
    except nx.NetworkXNoPath as e:
        raise RoadNetworkError(f"No path between nodes {u} and {v}") from e


def generate_grid_network(
    rows: int,
    cols: int,
    weight_range: Tuple[int, int],
    seed: int,
    num_landmarks: int = DEFAULT_NUM_LANDMARKS,
    landmark_size: int = DEFAULT_LANDMARK_SIZE,
) -> RoadNetwork:
    """
    Build a ``rows x cols`` grid with integer edge weights drawn uniformly from the inclusive
    ``weight_range`` and ``num_landmarks`` random landmark subsets of ``landmark_size`` nodes.
    Node ``(r, c)`` gets id ``r * cols + c``.
    """
    if rows < 1 or cols < 1:
        raise ConfigurationError(f"Grid dimensions must be positive, got {rows}x{cols}")
    low, high = weight_range
    if low > high:
        raise ConfigurationError(f"Empty weight range [{low}, {high}]")
    if low < 0:
        raise ConfigurationError(f"Edge weights must be non-negative, got range [{low}, {high}]")
    if num_landmarks < 1 or landmark_size < 1:
        raise ConfigurationError(
            f"Need at least one landmark subset of at least one node, got {num_landmarks}x{landmark_size}"
        )

    rng = np.random.default_rng(seed)
    grid = nx.convert_node_labels_to_integers(nx.grid_2d_graph(rows, cols), ordering="sorted")
    pairs = sorted((min(u, v), max(u, v)) for u, v in grid.edges())
    weights = rng.integers(low, high, endpoint=True, size=len(pairs))
    edges = [(u, v, int(w)) for (u, v), w in zip(pairs, weights)]

    num_nodes = rows * cols
    subsets = _sample_landmarks(rng, num_nodes, num_landmarks, landmark_size)
    _logger.debug(
        "Generated %dx%d grid with %d edges and %d landmark subsets", rows, cols, len(edges), len(subsets)
    )
    return RoadNetwork(num_nodes, edges, subsets)


def _sample_landmarks(rng: np.random.Generator, num_nodes: int, count: int, size: int) -> List[List[int]]:
    # distinct across subsets when the graph is large enough, otherwise independent per subset
    if num_nodes >= count * size:
        chosen = rng.choice(num_nodes, size=count * size, replace=False)
        return [sorted(int(x) for x in chosen[k * size : (k + 1) * size]) for k in range(count)]
    return [
        sorted(int(x) for x in rng.choice(num_nodes, size=min(size, num_nodes), replace=False))
        for _ in range(count)
    ]


def load_network(uri: str) -> RoadNetwork:
    """
    Read a network in the line-oriented format: ``N M`` header, ``M`` lines of ``u v w``,
    then one line of space-separated node ids per landmark subset.
    """
    lines = [line.strip() for line in read_text(uri).splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise RoadNetworkError(f"Network file {uri} is empty")
    try:
        num_nodes, num_edges = (int(x) for x in lines[0].split())
        edges = []
        for line in lines[1 : 1 + num_edges]:
            u, v, w = (int(x) for x in line.split())
            edges.append((u, v, w))
        if len(edges) != num_edges:
            raise RoadNetworkError(f"Network file {uri} declares {num_edges} edges, found {len(edges)}")
        subsets = [[int(x) for x in line.split()] for line in lines[1 + num_edges :]]
    except ValueError as e:
        raise RoadNetworkError(f"Malformed network file {uri}: {e}") from e
    return RoadNetwork(num_nodes, edges, subsets)


def save_network(net: RoadNetwork, uri: str) -> None:
    edges = net.edges
    out = [f"{len(net)} {len(edges)}"]
    out.extend(f"{u} {v} {w}" for u, v, w in edges)
    out.extend(" ".join(str(node) for node in sorted(subset)) for subset in net.landmark_subsets)
    write_text("\n".join(out) + "\n", uri)


def params_for_network(
    net: RoadNetwork, l: int, max_value: Optional[int] = None  # noqa: E741
) -> BlockParams:
    """Smallest block parameters whose capacity covers the network diameter."""
    return BlockParams.for_max_value(net.diameter if max_value is None else max_value, l)
