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
The passive attack end to end: ledger from transcripts, rider recovery, driver recovery and,
when an embedding table is available, de-anonymization to graph nodes.
"""
import logging
from typing import Any, Dict, Optional, Sequence

from pprhs.attack.deanonymize import deanonymize
from pprhs.attack.ledger import DifferenceLedger, Responder
from pprhs.attack.recovery import (
    BlockCandidates,
    recover_driver_vectors,
    recover_rider_vector,
    resolved_after,
)
from pprhs.codec import BlockParams
from pprhs.entities._pprhs_object import _PprhsObject
from pprhs.exceptions import AttackError
from pprhs.protocol.messages import BlockLabel
from pprhs.protocol.service_provider import SessionTranscript
from pprhs.roadnet import EmbeddingTable, RneVector

_logger = logging.getLogger(__name__)


class RecoveryReport(_PprhsObject):
    def __init__(
        self,
        rider_vector: Optional[RneVector],
        driver_vectors: Dict[Responder, RneVector],
        candidates: Dict[BlockLabel, BlockCandidates],
        resolved_at: Dict[BlockLabel, Optional[int]],
        rider_node: Optional[int] = None,
        driver_nodes: Optional[Dict[Responder, int]] = None,
        ambiguity: Optional[Dict[str, int]] = None,
    ):
        self._rider_vector = rider_vector
        self._driver_vectors = driver_vectors
        self._candidates = candidates
        self._resolved_at = resolved_at
        self._rider_node = rider_node
        self._driver_nodes = driver_nodes or {}
        self._ambiguity = ambiguity or {}

    @property
    def rider_vector(self) -> Optional[RneVector]:
        return self._rider_vector

    @property
    def driver_vectors(self) -> Dict[Responder, RneVector]:
        return self._driver_vectors

    @property
    def rider_node(self) -> Optional[int]:
        return self._rider_node

    @property
    def driver_nodes(self) -> Dict[Responder, int]:
        return self._driver_nodes

    @property
    def ambiguity(self) -> Dict[str, int]:
        """Nodes sharing the best embedding match, keyed by 'rider' or the responder."""
        return self._ambiguity

    @property
    def candidates(self) -> Dict[BlockLabel, BlockCandidates]:
        return self._candidates

    @property
    def resolved_at(self) -> Dict[BlockLabel, Optional[int]]:
        """Per block, how many observations it took to resolve it (None if never)."""
        return self._resolved_at

    @property
    def blocks_recovered(self) -> int:
        return sum(1 for c in self._candidates.values() if c.resolved)

    @property
    def blocks_total(self) -> int:
        return len(self._candidates)

    @property
    def complete(self) -> bool:
        return self._rider_vector is not None

    def to_record(self) -> Dict[str, Any]:
        return {
            "rider_vector": list(self._rider_vector) if self._rider_vector is not None else None,
            "driver_vectors": {str(k): list(v) for k, v in self._driver_vectors.items()},
            "rider_node": self._rider_node,
            "driver_nodes": {str(k): v for k, v in self._driver_nodes.items()},
            "blocks_recovered": self.blocks_recovered,
            "blocks_total": self.blocks_total,
            "blocks": [
                {
                    "i": i,
                    "j": j,
                    "lo": c.lo,
                    "hi": c.hi,
                    "width": c.width,
                    "resolved": c.resolved,
                    "resolved_at": self._resolved_at[(i, j)],
                }
                for (i, j), c in sorted(self._candidates.items())
            ],
        }


def mount_attack(
    transcripts: Sequence[SessionTranscript],
    params: BlockParams,
    dim: int,
    table: Optional[EmbeddingTable] = None,
    strict_lemma: bool = False,
) -> RecoveryReport:
    """
    Run the passive attack on what the service provider saw. A single transcript keys drivers by
    driver id; several transcripts of one rider are merged and keyed by ``(session_id, driver_id)``.
    """
    if not transcripts:
        raise AttackError("The attack needs at least one session transcript")
    merged = len(transcripts) > 1
    ledger = DifferenceLedger.from_transcripts(transcripts, params, dim, merged=merged)
    rider, candidates = recover_rider_vector(ledger, params, dim, strict_lemma)
    resolved_at = {
        label: resolved_after(ledger.differences(*label), params.l, strict_lemma) for label in ledger.labels
    }
    drivers = recover_driver_vectors(ledger, rider, params, dim) if rider is not None else {}

    rider_node = None
    driver_nodes: Dict[Responder, int] = {}
    ambiguity: Dict[str, int] = {}
    if table is not None and rider is not None:
        found = deanonymize(rider, table)
        rider_node = found.node
        ambiguity["rider"] = found.ambiguity
        for responder, vec in drivers.items():
            found = deanonymize(vec, table)
            driver_nodes[responder] = found.node
            ambiguity[str(responder)] = found.ambiguity

    report = RecoveryReport(rider, drivers, candidates, resolved_at, rider_node, driver_nodes, ambiguity)
    _logger.debug(
        "Attack resolved %d/%d blocks from %d responders",
        report.blocks_recovered,
        report.blocks_total,
        len(ledger.responders),
    )
    return report
