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

import numpy as np
import pytest

from pprhs.codec import BlockParams, decompose
from pprhs.crypto import prf_f
from pprhs.exceptions import NoMatchError, PrfCollisionError, ProtocolError
from pprhs.protocol import (
    RideContext,
    RiderBlockGroup,
    RiderEntry,
    ServiceProvider,
    driver_encrypt,
    rider_encrypt,
    sp_compute_distance,
    sp_match_all,
    sp_match_block,
    sp_select_driver,
)
from pprhs.roadnet import RneVector, rne_distance


def _session(keys, rider, drivers, params, zone=7, slot=9, seed=0):
    ctx = RideContext(zone=zone, slot=slot, params=params, dim=len(rider))
    rng = np.random.default_rng(seed)
    request = rider_encrypt(RneVector(rider), keys, ctx, rng)
    responses = [driver_encrypt(RneVector(loc), keys, ctx, rng, driver_id=k) for k, loc in enumerate(drivers)]
    return request, responses


def test_match_examples(system_keys):
    p = BlockParams(l=2, m=2)
    # rider block 3 vs driver block 3 at j=0
    request, (response,) = _session(system_keys, [3], [[3]], p)
    assert sp_match_all(request, response) == {(0, 0): 0, (0, 1): 0}
    # rider block 1 vs driver block 3 at j=1
    request, (response,) = _session(system_keys, [4], [[12]], p)
    assert sp_match_all(request, response)[(0, 1)] == 8


def test_match_and_distance_example(system_keys):
    request, (response,) = _session(system_keys, [6], [[9]], BlockParams(l=2, m=2))
    diffs = sp_match_all(request, response)
    assert diffs == {(0, 0): -1, (0, 1): 4}
    assert sp_compute_distance(diffs) == 3 == rne_distance((6,), (9,))


def test_identical_locations(system_keys):
    request, (response,) = _session(system_keys, [5, 60, 0], [[5, 60, 0]], BlockParams(l=2, m=3))
    diffs = sp_match_all(request, response)
    assert set(diffs.values()) == {0}
    assert sp_compute_distance(diffs, request.context) == 0


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_match_iff_equal_block(system_keys, l):  # noqa: E741
    p = BlockParams(l=l, m=1)
    ctx = RideContext(zone=1, slot=1, params=p, dim=1)
    rng = np.random.default_rng(l)
    for rider_block in range(p.base):
        group = rider_encrypt(RneVector((rider_block,)), system_keys, ctx, rng).groups[0]
        for driver_block in range(p.base):
            (entry,) = driver_encrypt(RneVector((driver_block,)), system_keys, ctx, rng).entries
            assert sp_match_block(group, (entry.c1p, entry.c2p)) == driver_block - rider_block


def test_cross_pairings_never_match(system_keys):
    p = BlockParams(l=2, m=4)
    request, (response,) = _session(system_keys, [200, 31, 7, 96], [[13, 255, 64, 2]], p, seed=3)
    assert len(request.groups) * len(response.entries) == 16 * 16
    for group, entry in itertools.product(request.groups, response.entries):
        payload = sp_match_block(group, entry)
        if group.label == entry.label:
            assert payload is not None
        else:
            assert payload is None


def test_duplicate_match_is_a_collision(system_keys):
    request, (response,) = _session(system_keys, [1], [[2]], BlockParams(l=2, m=1))
    group = request.groups[0]
    pair = response.entries[0]
    match = next(e for e in group.entries if e.c1 == prf_f(pair.c1p, group.gamma))
    doubled = RiderBlockGroup(0, 0, group.gamma, [match, RiderEntry(match.tag, match.c1, bytes(8))])
    with pytest.raises(PrfCollisionError):
        sp_match_block(doubled, pair)


def test_session_mismatch(system_keys):
    p = BlockParams(l=2, m=1)
    request, _ = _session(system_keys, [1], [[2]], p, zone=1)
    _, (other,) = _session(system_keys, [1], [[2]], p, zone=2)
    with pytest.raises(ProtocolError):
        sp_match_all(request, other)


def test_incomplete_difference_map(small_params):
    ctx = RideContext(zone=0, slot=0, params=small_params, dim=2)
    with pytest.raises(ProtocolError, match="Incomplete"):
        sp_compute_distance({(0, 0): 1, (0, 1): 0, (1, 0): 0}, ctx)
    with pytest.raises(ProtocolError):
        sp_compute_distance({})
    assert sp_compute_distance({(0, 0): 0, (0, 1): 0, (1, 0): 0, (1, 1): 0}, ctx) == 0


def test_select_driver(system_keys):
    p = BlockParams(l=3, m=2)
    request, responses = _session(system_keys, [20], [[20]], p)
    assert sp_select_driver(request, responses) == 0
    request, responses = _session(system_keys, [20], [[27], [23]], p)
    assert sp_select_driver(request, responses) == 1
    # a tie goes to the lower driver id
    request, responses = _session(system_keys, [20], [[25], [15], [25]], p)
    assert sp_select_driver(request, responses) == 0
    with pytest.raises(NoMatchError):
        sp_select_driver(request, [])


def test_encrypted_pipeline_matches_plaintext(system_keys):
    rng = np.random.default_rng(99)
    for seed in range(6):
        p = BlockParams(l=int(rng.integers(1, 5)), m=int(rng.integers(1, 4)))
        n = int(rng.integers(1, 4))
        rider = [int(x) for x in rng.integers(0, p.capacity + 1, size=n)]
        drivers = [[int(x) for x in rng.integers(0, p.capacity + 1, size=n)] for _ in range(5)]
        request, responses = _session(system_keys, rider, drivers, p, seed=seed)
        sp = ServiceProvider()
        transcript = sp.handle(request, responses)
        expected = {k: rne_distance(rider, loc) for k, loc in enumerate(drivers)}
        assert transcript.distances == expected
        assert transcript.selected_driver == min(expected, key=lambda k: (expected[k], k))
        for k, loc in enumerate(drivers):
            for i in range(n):
                rider_blocks, driver_blocks = decompose(rider[i], p), decompose(loc[i], p)
                for j in range(p.m):
                    expected = (driver_blocks[j] - rider_blocks[j]) * p.weight(j)
                    assert transcript.differences[k][(i, j)] == expected


def test_service_provider_keeps_transcripts(system_keys):
    p = BlockParams(l=2, m=2)
    sp = ServiceProvider()
    for seed in range(3):
        request, responses = _session(system_keys, [5], [[6], [9]], p, seed=seed)
        sp.handle(request, responses)
    assert [t.session_id for t in sp.transcripts] == [0, 1, 2]
    with pytest.raises(NoMatchError):
        sp.handle(request, [])
    with pytest.raises(ProtocolError, match="twice"):
        sp.handle(request, [responses[0], responses[0]])
