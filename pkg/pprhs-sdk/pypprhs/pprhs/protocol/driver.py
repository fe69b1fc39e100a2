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

from pprhs.codec import decompose
from pprhs.crypto import SystemKeys, message_encoding, prf_h
from pprhs.protocol.messages import DriverEntry, DriverResponse, RideContext
from pprhs.protocol.rider import check_location
from pprhs.roadnet import RneVector
from pprhs.utils.rng import shuffled


def driver_encrypt(
    location: RneVector,
    keys: SystemKeys,
    ctx: RideContext,
    rng: np.random.Generator,
    driver_id: int = 0,
) -> DriverResponse:
    """One ``(H(k1, b||i||j||z||s), H(k2, b||i||j||z||s))`` pair per block, in random order."""
    check_location(location, ctx)
    entries = []
    for i in range(ctx.dim):
        for j, block in enumerate(decompose(location[i], ctx.params)):
            message = message_encoding(block, i, j, ctx.zone, ctx.slot)
            entries.append(DriverEntry(i, j, prf_h(keys.kappa1, message), prf_h(keys.kappa2, message)))
    return DriverResponse(driver_id, ctx, shuffled(entries, rng))


class Driver:
    def __init__(self, driver_id: int, location: RneVector, keys: SystemKeys):
        self._driver_id = driver_id
        self._location = location
        self._keys = keys

    @property
    def driver_id(self) -> int:
        return self._driver_id

    @property
    def location(self) -> RneVector:
        return self._location

    def respond(self, ctx: RideContext, rng: np.random.Generator) -> DriverResponse:
        return driver_encrypt(self._location, self._keys, ctx, rng, driver_id=self._driver_id)
