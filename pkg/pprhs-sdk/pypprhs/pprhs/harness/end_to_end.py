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
Simulated sessions: a key manager, one rider, honest drivers and an honest-but-curious service
provider run the matching protocol; the provider's transcripts are then fed to the passive attack
and everything is checked against the plaintext ground truth.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from pprhs.attack import RecoveryReport, mount_attack
from pprhs.codec import BlockParams, decompose
from pprhs.crypto import enable_collision_watchdog, get_collision_watchdog, key_manager_issue
from pprhs.exceptions import CapacityError, CodecError, ConfigurationError
from pprhs.harness.config import NODES, ExperimentConfig
from pprhs.protocol import Driver, RideContext, Rider, ServiceProvider, SessionTranscript
from pprhs.roadnet import (
    EmbeddingTable,
    RneVector,
    RoadNetwork,
    generate_grid_network,
    load_network,
    params_for_network,
    rne_distance,
)
from pprhs.utils.rng import child_int_seed, child_rng

_logger = logging.getLogger(__name__)

# first element of every child-seed path
_NETWORK_STREAM = 1
_KEY_STREAM = 2
_SESSION_STREAM = 3

# second-level streams of one session
_RIDER = 0
_DRIVERS = 1
_PROTOCOL = 2


@dataclass(frozen=True)
class SimulationSetup:
    """What every session of one run shares."""

    config: ExperimentConfig
    params: BlockParams
    dim: int
    table: Optional[EmbeddingTable]

    def draw_location(self, rng: np.random.Generator) -> Tuple[Optional[int], RneVector]:
        if self.config.placement == NODES:
            node = int(rng.integers(len(self.table)))
            return node, self.table.vector(node)
        return None, RneVector(rng.integers(0, self.params.capacity, endpoint=True, size=self.dim))


@dataclass(frozen=True)
class SessionResult:
    session: int
    num_drivers: int
    requests: int
    rider_node: Optional[int]
    selected_drivers: Tuple[int, ...]
    oracle_ok: bool
    attacked: bool
    blocks_recovered: int = 0
    blocks_total: int = 0
    rider_recovered: bool = False
    drivers_recovered: bool = False
    rider_node_recovered: Optional[bool] = None
    sound: bool = True
    drivers_to_resolve: Optional[int] = None
    recovery: Optional[Dict[str, Any]] = None

    def to_record(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            "session": self.session,
            "num_drivers": self.num_drivers,
            "requests": self.requests,
            "rider_node": self.rider_node,
            "selected_drivers": list(self.selected_drivers),
            "oracle_ok": self.oracle_ok,
        }
        if self.attacked:
            record.update(
                blocks_recovered=self.blocks_recovered,
                blocks_total=self.blocks_total,
                rider_recovered=self.rider_recovered,
                drivers_recovered=self.drivers_recovered,
                rider_node_recovered=self.rider_node_recovered,
                sound=self.sound,
                drivers_to_resolve=self.drivers_to_resolve,
                recovery=self.recovery,
            )
        return record


@dataclass(frozen=True)
class SimulationSummary:
    config: ExperimentConfig
    params: BlockParams
    dim: int
    attacked: bool
    sessions: Tuple[SessionResult, ...]

    @property
    def oracle_agreement(self) -> float:
        return _rate(s.oracle_ok for s in self.sessions)

    @property
    def rider_recovery_rate(self) -> float:
        return _rate(s.rider_recovered for s in self.sessions)

    @property
    def full_recovery_rate(self) -> float:
        return _rate(s.rider_recovered and s.drivers_recovered for s in self.sessions)

    @property
    def node_recovery_rate(self) -> Optional[float]:
        flags = [s.rider_node_recovered for s in self.sessions if s.rider_node_recovered is not None]
        return _rate(flags) if flags else None

    @property
    def mean_blocks_recovered(self) -> float:
        return float(np.mean([s.blocks_recovered for s in self.sessions]))

    @property
    def unsound_sessions(self) -> int:
        return sum(1 for s in self.sessions if not s.sound)

    def to_record(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            "l": self.params.l,
            "m": self.params.m,
            "n": self.dim,
            "placement": self.config.placement,
            "num_drivers": self.config.num_drivers,
            "requests_per_session": self.config.requests_per_session,
            "merge_requests": self.config.merge_requests,
            "sessions": len(self.sessions),
            "oracle_agreement": self.oracle_agreement,
        }
        if self.attacked:
            record.update(
                strict_lemma=self.config.strict_lemma,
                rider_recovery_rate=self.rider_recovery_rate,
                full_recovery_rate=self.full_recovery_rate,
                node_recovery_rate=self.node_recovery_rate,
                mean_blocks_recovered=self.mean_blocks_recovered,
                blocks_total=self.params.m * self.dim,
                unsound_sessions=self.unsound_sessions,
            )
        record["per_session"] = [s.to_record() for s in self.sessions]
        return record


def _rate(flags) -> float:
    flags = list(flags)
    return sum(1 for f in flags if f) / len(flags) if flags else 0.0


def build_network(config: ExperimentConfig) -> RoadNetwork:
    if config.network_file:
        net = load_network(config.network_file)
        if net.dim != config.n:
            _logger.warning("Network file has %d landmark subsets, ignoring n=%d", net.dim, config.n)
        return net
    return generate_grid_network(
        config.rows,
        config.cols,
        (config.weight_min, config.weight_max),
        seed=child_int_seed(config.seed, _NETWORK_STREAM),
        num_landmarks=config.n,
        landmark_size=config.landmark_size,
    )


def prepare(config: ExperimentConfig) -> SimulationSetup:
    """Network, embedding table and block parameters of a run."""
    needs_network = config.placement == NODES or config.m is None
    net = build_network(config) if needs_network else None
    dim = net.dim if net is not None else config.n
    try:
        if config.m is not None:
            params = BlockParams(config.l, config.m)
        else:
            params = params_for_network(net, config.l)
    except CodecError as e:
        raise ConfigurationError(e.message) from e
    table = net.embedding_table if config.placement == NODES else None
    if table is not None and table.max_coordinate > params.capacity:
        raise CapacityError(
            f"Largest embedding coordinate {table.max_coordinate} does not fit into"
            f" m={params.m} blocks of l={params.l} bits"
        )
    _logger.info(
        "Block parameters l=%d m=%d, dimension %d, placement %s", params.l, params.m, dim, config.placement
    )
    return SimulationSetup(config, params, dim, table)


def _oracle_agrees(transcript: SessionTranscript, rider: RneVector, drivers: Sequence[RneVector]) -> bool:
    expected = {k: rne_distance(rider, loc) for k, loc in enumerate(drivers)}
    selected = min(expected, key=lambda k: (expected[k], k))
    return transcript.distances == expected and transcript.selected_driver == selected


def _is_sound(report: RecoveryReport, rider: RneVector, truth: Dict[Any, RneVector], p: BlockParams) -> bool:
    rider_blocks = [decompose(x, p) for x in rider]
    for (i, j), candidates in report.candidates.items():
        if not candidates.lo <= rider_blocks[i][j] <= candidates.hi:
            return False
    if report.rider_vector is not None and report.rider_vector != rider:
        return False
    return all(truth[responder] == vec for responder, vec in report.driver_vectors.items())


def simulate_session(
    setup: SimulationSetup, session: int, num_drivers: int, attack: bool = True
) -> SessionResult:
    """
    One rider issues ``requests_per_session`` ride requests; ``num_drivers`` fresh drivers answer each.
    Driver ``k`` of request ``r`` is drawn from its own stream, so the first ``k`` drivers are the
    same whatever ``num_drivers`` is.
    """
    config = setup.config
    seed = config.seed
    keys = key_manager_issue(child_int_seed(seed, _KEY_STREAM, session))
    ctx = RideContext(config.zone, config.slot, setup.params, setup.dim)
    rider_node, rider_vec = setup.draw_location(child_rng(seed, _SESSION_STREAM, session, _RIDER))
    rider = Rider(rider_vec, keys)
    sp = ServiceProvider()

    truth: List[List[RneVector]] = []
    oracle_ok = True
    for r in range(config.requests_per_session):
        locations = [
            setup.draw_location(child_rng(seed, _SESSION_STREAM, session, _DRIVERS, r, k))[1]
            for k in range(num_drivers)
        ]
        protocol_rng = child_rng(seed, _SESSION_STREAM, session, _PROTOCOL, r)
        request = rider.request(ctx, protocol_rng)
        responses = [Driver(k, loc, keys).respond(ctx, protocol_rng) for k, loc in enumerate(locations)]
        transcript = sp.handle(request, responses)
        oracle_ok = oracle_ok and _oracle_agrees(transcript, rider_vec, locations)
        truth.append(locations)

    transcripts = sp.transcripts
    selected = tuple(t.selected_driver for t in transcripts)
    if not oracle_ok:
        _logger.warning("Session %d: encrypted matching disagrees with the plaintext oracle", session)
    if not attack:
        return SessionResult(session, num_drivers, len(transcripts), rider_node, selected, oracle_ok, False)

    if config.merge_requests or len(transcripts) == 1:
        groups = [list(transcripts)]
        merged = len(transcripts) > 1
        group_truth = [
            {((r, k) if merged else k): loc for r, locs in enumerate(truth) for k, loc in enumerate(locs)}
        ]
    else:
        groups = [[t] for t in transcripts]
        group_truth = [dict(enumerate(locs)) for locs in truth]

    reports = [
        mount_attack(group, setup.params, setup.dim, setup.table, config.strict_lemma) for group in groups
    ]
    sound = all(_is_sound(rep, rider_vec, t, setup.params) for rep, t in zip(reports, group_truth))
    best = max(range(len(reports)), key=lambda k: (reports[k].blocks_recovered, -k))
    report = reports[best]
    rider_recovered = report.rider_vector == rider_vec
    drivers_recovered = rider_recovered and all(
        group_truth[best][responder] == vec for responder, vec in report.driver_vectors.items()
    )
    node_recovered = None
    if setup.table is not None:
        node_recovered = report.rider_node is not None and setup.table.vector(report.rider_node) == rider_vec
    drivers_to_resolve = None
    if report.complete:
        drivers_to_resolve = max((k for k in report.resolved_at.values() if k is not None), default=None)
    else:
        unresolved = report.blocks_total - report.blocks_recovered
        _logger.debug("Session %d: %d blocks never resolved", session, unresolved)

    result = SessionResult(
        session=session,
        num_drivers=num_drivers,
        requests=len(transcripts),
        rider_node=rider_node,
        selected_drivers=selected,
        oracle_ok=oracle_ok,
        attacked=True,
        blocks_recovered=report.blocks_recovered,
        blocks_total=report.blocks_total,
        rider_recovered=rider_recovered,
        drivers_recovered=drivers_recovered,
        rider_node_recovered=node_recovered,
        sound=sound,
        drivers_to_resolve=drivers_to_resolve,
        recovery=report.to_record(),
    )
    _logger.debug(
        "Session %d: %d/%d blocks, rider recovered %s",
        session,
        report.blocks_recovered,
        report.blocks_total,
        rider_recovered,
    )
    return result


def _init_worker(watchdog_limit: Optional[int]) -> None:
    """Spawned workers start without the parent's collision watchdog; give them one of their own."""
    if watchdog_limit is not None and get_collision_watchdog() is None:
        enable_collision_watchdog(watchdog_limit)


def _simulate_sessions(setup: SimulationSetup, num_drivers: int, attack: bool) -> Tuple[SessionResult, ...]:
    sessions = range(setup.config.trials)
    run = partial(simulate_session, setup, num_drivers=num_drivers, attack=attack)
    if setup.config.workers > 1 and setup.config.trials > 1:
        watchdog = get_collision_watchdog()
        with ProcessPoolExecutor(
            max_workers=setup.config.workers,
            initializer=_init_worker,
            initargs=(watchdog.limit if watchdog is not None else None,),
        ) as executor:
            return tuple(executor.map(run, sessions))
    return tuple(run(s) for s in sessions)


def run_end_to_end(config: ExperimentConfig) -> SimulationSummary:
    setup = prepare(config)
    summary = SimulationSummary(
        config, setup.params, setup.dim, True, _simulate_sessions(setup, config.num_drivers, attack=True)
    )
    _logger.info(
        "%d sessions: rider recovered in %.1f%%, riders and drivers in %.1f%%",
        len(summary.sessions),
        100 * summary.rider_recovery_rate,
        100 * summary.full_recovery_rate,
    )
    if summary.unsound_sessions:
        _logger.warning(
            "%d sessions recovered values that contradict the ground truth", summary.unsound_sessions
        )
    return summary


def run_protocol_only(config: ExperimentConfig) -> SimulationSummary:
    setup = prepare(config)
    summary = SimulationSummary(
        config, setup.params, setup.dim, False, _simulate_sessions(setup, config.num_drivers, attack=False)
    )
    _logger.info(
        "%d sessions: oracle agreement %.1f%%", len(summary.sessions), 100 * summary.oracle_agreement
    )
    return summary


SWEEP_COLUMNS = [
    "num_drivers",
    "sessions",
    "rider_recovery_rate",
    "full_recovery_rate",
    "mean_blocks_recovered",
    "blocks_total",
]


def run_driver_sweep(config: ExperimentConfig, counts: Optional[Sequence[int]] = None) -> pd.DataFrame:
    """
    Recovery rate per driver count. Every count replays the same riders and the same driver
    prefixes, so the rate can only grow with the count.
    """
    counts = sorted(set(counts if counts is not None else config.sweep))
    if not counts or counts[0] < 1:
        raise ConfigurationError(f"Driver counts must be positive, got {counts}")
    setup = prepare(config)
    rows = []
    for count in counts:
        sessions = _simulate_sessions(setup, count, True)
        summary = SimulationSummary(config, setup.params, setup.dim, True, sessions)
        rows.append(
            [
                count,
                len(summary.sessions),
                summary.rider_recovery_rate,
                summary.full_recovery_rate,
                summary.mean_blocks_recovered,
                setup.params.m * setup.dim,
            ]
        )
        _logger.info("%d drivers: rider recovery rate %.3f", count, summary.rider_recovery_rate)
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)
