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

import numpy as np
import pytest

from pprhs.attack import DifferenceLedger, ledger_record
from pprhs.codec import BlockParams
from pprhs.exceptions import AttackError, LedgerCorruptionError
from pprhs.protocol import RideContext, ServiceProvider, driver_encrypt, rider_encrypt
from pprhs.roadnet import RneVector


def test_normalization_examples():
    p = BlockParams(l=2, m=2)
    ledger = DifferenceLedger(p, dim=1)
    ledger_record(ledger, 0, 1, 7, 8, p)
    ledger_record(ledger, 0, 1, 8, 0, p)
    assert ledger.differences(0, 1) == [2, 0]
    assert ledger.entries(0, 1) == [(7, 2), (8, 0)]
    assert ledger.responders == [7, 8]


def test_corrupted_payloads():
    p = BlockParams(l=2, m=2)
    ledger = DifferenceLedger(p, dim=1)
    with pytest.raises(LedgerCorruptionError, match="not a multiple") as err:
        ledger_record(ledger, 0, 1, 0, 6, p)
    assert (err.value.i, err.value.j, err.value.payload) == (0, 1, 6)
    with pytest.raises(LedgerCorruptionError, match="outside"):
        ledger_record(ledger, 0, 0, 0, 16, p)
    with pytest.raises(AttackError):
        ledger_record(ledger, 1, 0, 0, 0, p)
    with pytest.raises(AttackError):
        ledger_record(ledger, 0, 0, 0, 0, BlockParams(l=3, m=2))


def test_responder_differences():
    p = BlockParams(l=1, m=2)
    ledger = DifferenceLedger(p, dim=1)
    ledger.record(0, 0, "a", 1).record(0, 1, "a", -2).record(0, 0, "b", 0)
    assert ledger.responder_differences("a") == {(0, 0): 1, (0, 1): -1}
    assert ledger.responder_differences("b") == {(0, 0): 0}


def test_merge():
    p = BlockParams(l=2, m=1)
    first = DifferenceLedger(p, 1).record(0, 0, (0, 1), 2)
    second = DifferenceLedger(p, 1).record(0, 0, (1, 1), -1)
    merged = first.merge(second)
    assert merged.differences(0, 0) == [2, -1]
    assert first.differences(0, 0) == [2]
    with pytest.raises(AttackError):
        first.merge(DifferenceLedger(BlockParams(l=2, m=2), 1))


def test_from_transcripts(system_keys):
    p = BlockParams(l=2, m=2)
    ctx = RideContext(zone=1, slot=1, params=p, dim=1)
    rng = np.random.default_rng(3)
    sp = ServiceProvider()
    for _ in range(2):
        request = rider_encrypt(RneVector((6,)), system_keys, ctx, rng)
        sp.handle(request, [driver_encrypt(RneVector((9,)), system_keys, ctx, rng, driver_id=4)])
    single = DifferenceLedger.from_transcripts(sp.transcripts[:1], p, 1)
    assert single.responders == [4]
    assert single.responder_differences(4) == {(0, 0): -1, (0, 1): 1}
    merged = DifferenceLedger.from_transcripts(sp.transcripts, p, 1, merged=True)
    assert merged.responders == [(0, 4), (1, 4)]
    assert merged.differences(0, 1) == [1, 1]
