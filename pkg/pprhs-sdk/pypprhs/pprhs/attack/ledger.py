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
The service provider's per-block record of signed differences ``b_driver - b_rider``
collected from honest matching.
"""
import logging
from collections import defaultdict
from typing import Dict, Hashable, Iterable, List, Tuple

from pprhs.codec import BlockParams
from pprhs.exceptions import AttackError, LedgerCorruptionError
from pprhs.protocol.messages import BlockLabel
from pprhs.protocol.service_provider import SessionTranscript

_logger = logging.getLogger(__name__)

Responder = Hashable


class DifferenceLedger:
    """
    Per ``(i, j)``: the normalized differences ``d = payload / w_j`` in the order responders
    were recorded. Single writer; readers work on the returned copies.
    """

    def __init__(self, params: BlockParams, dim: int):
        self._params = params
        self._dim = dim
        self._entries: Dict[BlockLabel, List[Tuple[Responder, int]]] = defaultdict(list)
        self._responders: Dict[Responder, None] = {}

    @property
    def params(self) -> BlockParams:
        return self._params

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def labels(self) -> List[BlockLabel]:
        return [(i, j) for i in range(self._dim) for j in range(self._params.m)]

    @property
    def responders(self) -> List[Responder]:
        """Responders in first-recorded order."""
        return list(self._responders)

    def record(self, i: int, j: int, responder: Responder, payload: int) -> "DifferenceLedger":
        if not 0 <= i < self._dim or not 0 <= j < self._params.m:
            raise AttackError(f"Block ({i}, {j}) outside the {self._dim}x{self._params.m} layout")
        weight = self._params.weight(j)
        if payload % weight != 0:
            raise LedgerCorruptionError(i, j, payload, f"is not a multiple of w_{j}={weight}")
        d = payload // weight
        if abs(d) > self._params.base - 1:
            raise LedgerCorruptionError(
                i, j, payload, f"normalizes to {d}, outside +/-{self._params.base - 1}"
            )
        self._entries[(i, j)].append((responder, d))
        self._responders.setdefault(responder, None)
        return self

    def entries(self, i: int, j: int) -> List[Tuple[Responder, int]]:
        return list(self._entries.get((i, j), []))

    def differences(self, i: int, j: int) -> List[int]:
        return [d for _, d in self._entries.get((i, j), [])]

    def responder_differences(self, responder: Responder) -> Dict[BlockLabel, int]:
        return {label: d for label, rows in self._entries.items() for who, d in rows if who == responder}

    def record_transcript(self, transcript: SessionTranscript, merged: bool = False) -> "DifferenceLedger":
        """
        Feed every matched payload of a session. With ``merged`` the responder key is
        ``(session_id, driver_id)`` so several requests can share one ledger.
        """
        for driver_id, diffs in transcript.differences.items():
            responder = (transcript.session_id, driver_id) if merged else driver_id
            for (i, j) in sorted(diffs):
                self.record(i, j, responder, diffs[(i, j)])
        return self

    def merge(self, other: "DifferenceLedger") -> "DifferenceLedger":
        if other.params != self._params or other.dim != self._dim:
            raise AttackError("Cannot merge ledgers with different block layouts")
        merged = DifferenceLedger(self._params, self._dim)
        for ledger in (self, other):
            for label in ledger.labels:
                for responder, d in ledger.entries(*label):
                    merged.record(label[0], label[1], responder, d * self._params.weight(label[1]))
        return merged

    @classmethod
    def from_transcripts(
        cls, transcripts: Iterable[SessionTranscript], params: BlockParams, dim: int, merged: bool = False
    ) -> "DifferenceLedger":
        ledger = cls(params, dim)
        for transcript in transcripts:
            ledger.record_transcript(transcript, merged=merged)
        _logger.debug("Ledger holds %d responders", len(ledger.responders))
        return ledger


def ledger_record(
    ledger: DifferenceLedger, i: int, j: int, driver_id: Responder, payload: int, p: BlockParams
) -> DifferenceLedger:
    if p != ledger.params:
        raise AttackError(f"Ledger uses {ledger.params}, payload came with {p}")
    return ledger.record(i, j, driver_id, payload)
