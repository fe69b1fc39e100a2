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
The service provider's side of the protocol: ciphertext matching, unmasking, distance
aggregation and driver selection. Nothing here ever sees key material.
"""
import json
import logging
from collections import defaultdict
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from pprhs.codec import PAYLOAD_WIDTH, decode_signed, xor_bytes
from pprhs.crypto import prf_f
from pprhs.entities._pprhs_object import _PprhsObject
from pprhs.exceptions import NoMatchError, PrfCollisionError, ProtocolError
from pprhs.protocol.messages import (
    BlockLabel,
    DriverEntry,
    DriverResponse,
    RideContext,
    RiderBlockGroup,
    RiderRequest,
)
from pprhs.protocol.serialization import request_to_record, response_to_record

_logger = logging.getLogger(__name__)

DifferenceMap = Dict[BlockLabel, int]


def sp_match_block(
    group: RiderBlockGroup, pair: Union[DriverEntry, Tuple[bytes, bytes]]
) -> Optional[int]:
    """
    Find the rider entry with ``C1 == F(C'1, gamma)`` and unmask its payload with
    ``F(C'2, gamma)``. Returns ``None`` when no entry matches.
    """
    c1p, c2p = (pair.c1p, pair.c2p) if isinstance(pair, DriverEntry) else pair
    expected = prf_f(c1p, group.gamma)
    matches = [entry for entry in group.entries if entry.c1 == expected]
    if not matches:
        return None
    if len(matches) > 1:
        raise PrfCollisionError(f"{len(matches)} rider entries of block {group.label} match one driver pair")
    mask = prf_f(c2p, group.gamma)[:PAYLOAD_WIDTH]
    return decode_signed(xor_bytes(matches[0].c2, mask))


def _check_session(request: RiderRequest, response: DriverResponse) -> None:
    if request.context != response.context:
        raise ProtocolError(
            f"Driver {response.driver_id} answered session {response.context},"
            f" rider asked in {request.context}"
        )


def sp_match_all(request: RiderRequest, response: DriverResponse) -> DifferenceMap:
    """Signed weighted block differences ``(b_driver - b_rider) * w_j`` for every ``(i, j)``."""
    _check_session(request, response)
    diffs: DifferenceMap = {}
    for entry in response.entries:
        payload = sp_match_block(request.group(entry.i, entry.j), entry)
        if payload is None:
            raise ProtocolError(
                f"Driver {response.driver_id} pair for block {entry.label} matched no rider entry"
            )
        diffs[entry.label] = payload
    return diffs


def sp_compute_distance(diffs: Mapping[BlockLabel, int], context: Optional[RideContext] = None) -> int:
    """``max_i |sum_j diff(i, j)|`` over a complete difference map."""
    if not diffs:
        raise ProtocolError("Cannot compute a distance from an empty difference map")
    if context is not None:
        expected = set(context.labels)
    else:
        dim = max(i for i, _ in diffs) + 1
        blocks = max(j for _, j in diffs) + 1
        expected = {(i, j) for i in range(dim) for j in range(blocks)}
    missing = expected - set(diffs)
    if missing or set(diffs) - expected:
        raise ProtocolError(f"Incomplete difference map, missing blocks {sorted(missing)}")
    sums: Dict[int, int] = defaultdict(int)
    for (i, _), payload in diffs.items():
        sums[i] += payload
    return max(abs(total) for total in sums.values())


def sp_select_driver(request: RiderRequest, responses: Sequence[DriverResponse]) -> int:
    """Driver with minimum encrypted distance; ties go to the lowest driver id."""
    if not responses:
        raise NoMatchError("No driver responded to the ride request")
    distances = {
        response.driver_id: sp_compute_distance(sp_match_all(request, response), request.context)
        for response in responses
    }
    return min(distances, key=lambda driver_id: (distances[driver_id], driver_id))


class SessionTranscript(_PprhsObject):
    """Everything the service provider learns in one session, in the order drivers responded."""

    def __init__(
        self,
        session_id: int,
        context: RideContext,
        differences: Dict[int, DifferenceMap],
        distances: Dict[int, int],
        selected_driver: int,
    ):
        self._session_id = session_id
        self._context = context
        self._differences = differences
        self._distances = distances
        self._selected_driver = selected_driver

    @property
    def session_id(self) -> int:
        return self._session_id

    @property
    def context(self) -> RideContext:
        return self._context

    @property
    def differences(self) -> Dict[int, DifferenceMap]:
        """driver_id -> (i, j) -> signed weighted difference"""
        return self._differences

    @property
    def distances(self) -> Dict[int, int]:
        return self._distances

    @property
    def selected_driver(self) -> int:
        return self._selected_driver


class ServiceProvider:
    """
    Honest-but-curious matcher. Follows the protocol and keeps the transcript of every session.
    """

    def __init__(self):
        self._transcripts: List[SessionTranscript] = []

    @property
    def transcripts(self) -> Tuple[SessionTranscript, ...]:
        return tuple(self._transcripts)

    def handle(self, request: RiderRequest, responses: Iterable[DriverResponse]) -> SessionTranscript:
        responses = list(responses)
        if not responses:
            raise NoMatchError("No driver responded to the ride request")
        differences: Dict[int, DifferenceMap] = {}
        distances: Dict[int, int] = {}
        for response in responses:
            if response.driver_id in differences:
                raise ProtocolError(f"Driver {response.driver_id} responded twice")
            diffs = sp_match_all(request, response)
            differences[response.driver_id] = diffs
            distances[response.driver_id] = sp_compute_distance(diffs, request.context)
        selected = min(distances, key=lambda driver_id: (distances[driver_id], driver_id))
        transcript = SessionTranscript(
            len(self._transcripts), request.context, differences, distances, selected
        )
        self._transcripts.append(transcript)
        if _logger.isEnabledFor(logging.DEBUG):
            _logger.debug("Session %d request %s", transcript.session_id, _dump(request_to_record(request)))
            for response in responses:
                _logger.debug(
                    "Session %d response %s", transcript.session_id, _dump(response_to_record(response))
                )
        _logger.debug(
            "Session %d: %d responders, selected driver %d at distance %d",
            transcript.session_id,
            len(responses),
            selected,
            distances[selected],
        )
        return transcript


def _dump(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))
