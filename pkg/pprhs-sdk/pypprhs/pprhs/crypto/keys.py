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
from dataclasses import dataclass, field

import numpy as np

from pprhs.exceptions import CryptoError

_logger = logging.getLogger(__name__)

KEY_BYTES = 32
NONCE_BYTES = 16


@dataclass(frozen=True)
class SystemKeys:
    """The shared secrets kappa1 and kappa2 held by riders and drivers."""

    kappa1: bytes = field(repr=False)
    kappa2: bytes = field(repr=False)

    def __post_init__(self):
        for name in ("kappa1", "kappa2"):
            value = getattr(self, name)
            if not isinstance(value, bytes) or len(value) != KEY_BYTES:
                raise CryptoError(f"{name} must be {KEY_BYTES} bytes")
        if self.kappa1 == self.kappa2:
            raise CryptoError("kappa1 and kappa2 must differ")


def key_manager_issue(seed: int) -> SystemKeys:
    """Deterministic key issuance for simulations."""
    rng = np.random.default_rng(seed)
    kappa1 = rng.bytes(KEY_BYTES)
    kappa2 = rng.bytes(KEY_BYTES)
    while kappa2 == kappa1:
        kappa2 = rng.bytes(KEY_BYTES)
    return SystemKeys(kappa1, kappa2)


class KeyManager:
    """
    Trusted key manager. Keys are handed to riders and drivers only; the service provider
    is never constructed with them.
    """

    def __init__(self, seed: int):
        self._keys = key_manager_issue(seed)

    def issue(self) -> SystemKeys:
        return self._keys


def new_nonce(rng: np.random.Generator) -> bytes:
    return rng.bytes(NONCE_BYTES)
