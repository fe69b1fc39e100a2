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

import numpy as np

from pprhs.codec import PAYLOAD_WIDTH, decompose, encode_signed, weighted_difference, xor_bytes
from pprhs.crypto import SystemKeys, message_encoding, new_nonce, prf_f, prf_h
from pprhs.exceptions import ProtocolError
from pprhs.protocol.messages import RideContext, RiderBlockGroup, RiderEntry, RiderRequest
from pprhs.roadnet import RneVector
from pprhs.utils.rng import shuffled

_logger = logging.getLogger(__name__)


def check_location(location: RneVector, ctx: RideContext) -> None:
    if len(location) != ctx.dim:
        raise ProtocolError(f"Location has dimension {len(location)}, session expects {ctx.dim}")
    location.check_capacity(ctx.params)


def rider_encrypt(
    location: RneVector, keys: SystemKeys, ctx: RideContext, rng: np.random.Generator
) -> RiderRequest:
    """
    Encrypt every weighted difference ``(q - block) * w_j`` of every block of ``location``.
    Each ``(i, j)`` group gets a fresh nonce and a random order over ``q``; groups are shuffled too.
    """
    check_location(location, ctx)
    p = ctx.params
    groups = []
    for i in range(ctx.dim):
        for j, block in enumerate(decompose(location[i], p)):
            gamma = new_nonce(rng)
            entries = [_encrypt_candidate(q, block, i, j, gamma, keys, ctx) for q in range(p.base)]
            groups.append(RiderBlockGroup(i, j, gamma, shuffled(entries, rng)))
    return RiderRequest(ctx, shuffled(groups, rng))


def _encrypt_candidate(
    q: int, block: int, i: int, j: int, gamma: bytes, keys: SystemKeys, ctx: RideContext
) -> RiderEntry:
    message = message_encoding(q, i, j, ctx.zone, ctx.slot)
    c1 = prf_f(prf_h(keys.kappa1, message), gamma)
    mask = prf_f(prf_h(keys.kappa2, message), gamma)[:PAYLOAD_WIDTH]
    c2 = xor_bytes(mask, encode_signed(weighted_difference(q, block, j, ctx.params)))
    # the tag is C1's PRF value
    return RiderEntry(tag=c1, c1=c1, c2=c2)


class Rider:
    def __init__(self, location: RneVector, keys: SystemKeys):
        self._location = location
        self._keys = keys

    @property
    def location(self) -> RneVector:
        return self._location

    def request(self, ctx: RideContext, rng: np.random.Generator) -> RiderRequest:
        request = rider_encrypt(self._location, self._keys, ctx, rng)
        _logger.debug(
            "Rider built %d block groups for zone %d slot %d", len(request.groups), ctx.zone, ctx.slot
        )
        return request
