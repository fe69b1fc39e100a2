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

import itertools

import networkx as nx
import numpy as np
import pytest

from pprhs.codec import BlockParams
from pprhs.exceptions import ConfigurationError, RoadNetworkError
from pprhs.roadnet import (
    RoadNetwork,
    generate_grid_network,
    load_network,
    params_for_network,
    save_network,
    shortest_path_distance,
)


def _floyd_warshall(net: RoadNetwork) -> np.ndarray:
    size = len(net)
    dist = np.full((size, size), np.iinfo(np.int64).max // 4, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    for u, v, w in net.edges:
        dist[u, v] = min(dist[u, v], w)
        dist[v, u] = min(dist[v, u], w)
    for k in range(size):
        dist = np.minimum(dist, dist[:, [k]] + dist[[k], :])
    return dist


def test_degenerate_grid():
    net = generate_grid_network(1, 1, (1, 1), seed=3)
    assert len(net) == 1
    assert net.edges == []
    assert net.diameter == 0


def test_uniform_weights():
    net = generate_grid_network(2, 2, (5, 5), seed=11)
    assert len(net) == 4
    assert len(net.edges) == 4
    assert all(w == 5 for _, _, w in net.edges)


def test_grid_ids_follow_rows():
    net = generate_grid_network(2, 3, (1, 1), seed=0, num_landmarks=2)
    assert [(u, v) for u, v, _ in net.edges] == [(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (4, 5)]


def test_generation_is_deterministic():
    first = generate_grid_network(3, 3, (1, 10), seed=42)
    second = generate_grid_network(3, 3, (1, 10), seed=42)
    assert first.edges == second.edges
    assert first.landmark_subsets == second.landmark_subsets
    assert all(1 <= w <= 10 for _, _, w in first.edges)


def test_landmark_subsets():
    net = generate_grid_network(5, 5, (1, 3), seed=1, num_landmarks=4, landmark_size=3)
    assert net.dim == 4
    assert all(len(s) == 3 for s in net.landmark_subsets)
    # distinct across subsets on a graph this large
    assert len(frozenset().union(*net.landmark_subsets)) == 12

    small = generate_grid_network(2, 2, (1, 3), seed=1, num_landmarks=8, landmark_size=2)
    assert small.dim == 8
    assert all(len(s) == 2 for s in small.landmark_subsets)


@pytest.mark.parametrize(
    "rows, cols, weight_range, kwargs",
    [
        (2, 2, (5, 4), {}),
        (0, 3, (1, 2), {}),
        (2, 2, (-1, 2), {}),
        (2, 2, (1, 2), {"num_landmarks": 0}),
    ],
)
def test_invalid_generator_parameters(rows, cols, weight_range, kwargs):
    with pytest.raises(ConfigurationError):
        generate_grid_network(rows, cols, weight_range, seed=1, **kwargs)


def test_shortest_path_identity_and_single_edge():
    net = RoadNetwork(2, [(0, 1, 7)], [[0]])
    assert shortest_path_distance(net, 0, 0) == 0
    assert shortest_path_distance(net, 0, 1) == 7
    assert shortest_path_distance(net, 1, 0) == 7


def test_shortest_path_matches_floyd_warshall(grid_network):
    oracle = _floyd_warshall(grid_network)
    for u, v in itertools.combinations(grid_network.nodes, 2):
        assert shortest_path_distance(grid_network, u, v) == oracle[u, v]
    assert grid_network.diameter == oracle.max()


def test_unknown_node():
    net = RoadNetwork(2, [(0, 1, 7)], [[0]])
    with pytest.raises(RoadNetworkError, match="Unknown node"):
        shortest_path_distance(net, 0, 5)


@pytest.mark.parametrize(
    "num_nodes, edges, subsets, message",
    [
        (0, [], [[0]], "at least one node"),
        (3, [(0, 1, 1)], [[0]], "not connected"),
        (2, [(0, 2, 1)], [[0]], "unknown node"),
        (2, [(0, 1, -4)], [[0]], "invalid weight"),
        (2, [(0, 1, 1)], [], "landmark subset is required"),
        (2, [(0, 1, 1)], [[]], "is empty"),
        (2, [(0, 1, 1)], [[9]], "unknown nodes"),
    ],
)
def test_invalid_networks(num_nodes, edges, subsets, message):
    with pytest.raises(RoadNetworkError, match=message):
        RoadNetwork(num_nodes, edges, subsets)


def test_graph_is_frozen(grid_network):
    assert nx.is_frozen(grid_network.graph)
    with pytest.raises(nx.NetworkXError):
        grid_network.graph.add_edge(0, 1, weight=1)


def test_save_and_load(tmp_path, grid_network):
    path = str(tmp_path / "net" / "grid.txt")
    save_network(grid_network, path)
    loaded = load_network(path)
    assert loaded.edges == grid_network.edges
    assert loaded.landmark_subsets == grid_network.landmark_subsets
    assert np.array_equal(loaded.embedding_table.matrix, grid_network.embedding_table.matrix)


def test_load_hand_written_file(tmp_path):
    path = tmp_path / "triangle.txt"
    path.write_text("# triangle\n3 3\n0 1 4\n1 2 5\n0 2 20\n0\n2 1\n")
    net = load_network(str(path))
    assert shortest_path_distance(net, 0, 2) == 9
    assert net.landmark_subsets == (frozenset({0}), frozenset({1, 2}))


@pytest.mark.parametrize(
    "content, message",
    [
        ("", "empty"),
        ("3 2\n0 1 4\n", "declares 2 edges"),
        ("2 1\n0 x 4\n0\n", "Malformed"),
    ],
)
def test_load_malformed_file(tmp_path, content, message):
    path = tmp_path / "bad.txt"
    path.write_text(content)
    with pytest.raises(RoadNetworkError, match=message):
        load_network(str(path))


def test_params_for_network(grid_network):
    p = params_for_network(grid_network, 2)
    assert p.l == 2
    assert p.capacity >= grid_network.diameter
    assert p.m == 1 or BlockParams(2, p.m - 1).capacity < grid_network.diameter
    assert grid_network.embedding_table.max_coordinate <= grid_network.diameter <= p.capacity
    assert params_for_network(grid_network, 3, max_value=8) == BlockParams(3, 2)
