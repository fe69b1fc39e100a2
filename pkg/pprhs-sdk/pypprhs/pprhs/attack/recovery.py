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
Recovery of rider and driver blocks from the difference ledger.

Every observed ``d = z - x`` with ``z`` in ``[0, 2^l)`` confines the rider block ``x`` to
``[-d, 2^l - 1 - d]``; intersecting over all observations yields an interval that is a single
point as soon as ``max(d) - min(d) = 2^l - 1``, in particular once all ``2^l`` values were seen.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

from pprhs.attack.ledger import DifferenceLedger, Responder
from pprhs.codec import BlockParams, decompose, recompose
from pprhs.exceptions import AttackError, InconsistentLedgerError
from pprhs.protocol.messages import BlockLabel
from pprhs.roadnet import RneVector

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockCandidates:
    """Values of one rider block consistent with every observed difference."""

    lo: int
    hi: int
    resolved: bool
    coverage: int

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1

    @property
    def value(self) -> Optional[int]:
        return self.lo if self.resolved else None


def recover_block(diffs: Iterable[int], l: int, strict_lemma: bool = False) -> BlockCandidates:  # noqa: E741
    """
    Interval of rider blocks consistent with ``diffs``. In ``strict_lemma`` mode the block only
    counts as resolved once all ``2^l`` distinct differences were observed.
    """
    diffs = list(diffs)
    top = (1 << l) - 1
    if not diffs:
        raise AttackError("Cannot recover a block without any observed difference")
    if any(abs(d) > top for d in diffs):
        raise InconsistentLedgerError(f"Differences {diffs} exceed +/-{top}")
    lo = max(0, max(-d for d in diffs))
    hi = min(top, min(top - d for d in diffs))
    if lo > hi:
        raise InconsistentLedgerError(f"Differences {sorted(set(diffs))} admit no {l}-bit block")
    coverage = len(set(diffs))
    resolved = coverage == top + 1 if strict_lemma else lo == hi
    return BlockCandidates(lo, hi, resolved, coverage)


def resolved_after(diffs: Iterable[int], l: int, strict_lemma: bool = False) -> Optional[int]:  # noqa: E741
    """1-based number of observations after which the block first became resolved."""
    top = (1 << l) - 1
    lo, hi, seen = 0, top, set()
    for count, d in enumerate(diffs, start=1):
        lo, hi = max(lo, -d), min(hi, top - d)
        seen.add(d)
        if (len(seen) == top + 1) if strict_lemma else (lo == hi):
            return count
    return None


def recover_rider_vector(
    ledger: DifferenceLedger, p: BlockParams, n: int, strict_lemma: bool = False
) -> Tuple[Optional[RneVector], Dict[BlockLabel, BlockCandidates]]:
    """Rider vector when every block is resolved, plus the per-block candidates either way."""
    candidates: Dict[BlockLabel, BlockCandidates] = {}
    for i in range(n):
        for j in range(p.m):
            candidates[(i, j)] = recover_block(ledger.differences(i, j), p.l, strict_lemma)
    if not all(c.resolved for c in candidates.values()):
        return None, candidates
    coords = tuple(recompose([candidates[(i, j)].lo for j in range(p.m)], p) for i in range(n))
    return RneVector(coords), candidates


def recover_driver_vectors(
    ledger: DifferenceLedger, rider: RneVector, p: BlockParams, n: int
) -> Dict[Responder, RneVector]:
    """Every responder's blocks as rider block plus observed difference."""
    if len(rider) != n:
        raise AttackError(f"Rider vector has dimension {len(rider)}, ledger expects {n}")
    rider_blocks = {(i, j): block for i in range(n) for j, block in enumerate(decompose(rider[i], p))}
    vectors: Dict[Responder, RneVector] = {}
    for responder in ledger.responders:
        diffs = ledger.responder_differences(responder)
        if set(diffs) != set(rider_blocks):
            raise AttackError(f"Ledger is missing blocks of responder {responder!r}")
        coords = []
        for i in range(n):
            blocks = []
            for j in range(p.m):
                block = rider_blocks[(i, j)] + diffs[(i, j)]
                if not 0 <= block < p.base:
                    raise InconsistentLedgerError(
                        f"Responder {responder!r} block ({i}, {j}) recovers to {block}, outside [0, {p.base})"
                    )
                blocks.append(block)
            coords.append(recompose(blocks, p))
        vectors[responder] = RneVector(tuple(coords))
    return vectors
