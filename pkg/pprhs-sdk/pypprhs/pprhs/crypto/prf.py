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
The two PRFs ``H`` and ``F``: HMAC-SHA-256 truncated to 128 bits.

``H`` is keyed by a system key and applied to an encoded ``q||i||j||z||s`` message.
``F`` is keyed by an ``H`` output and applied to a block nonce.

The collision watchdog is process-local. Worker processes check their own evaluations, and their
counts are never merged into the parent's watchdog.
"""
import hashlib
import hmac
import logging
import threading
from typing import Dict, Optional, Tuple

from pprhs.exceptions import CryptoError, PrfCollisionError

_logger = logging.getLogger(__name__)

PRF_NAME = "HMAC-SHA-256"
PRF_OUTPUT_BYTES = 16

DEFAULT_WATCHDOG_LIMIT = 10_000_000


class PrfCollisionWatchdog:
    """
    Remembers which input produced every PRF output it has seen and fails on the first
    output produced by two distinct inputs.
    """

    def __init__(self, limit: int = DEFAULT_WATCHDOG_LIMIT):
        self._limit = limit
        self._seen: Dict[bytes, Tuple[bytes, bytes]] = {}
        self._evaluations = 0
        self._collisions = 0
        self._saturated = False
        self._lock = threading.Lock()

    @property
    def limit(self) -> int:
        return self._limit

    @property
    def evaluations(self) -> int:
        return self._evaluations

    @property
    def collisions(self) -> int:
        return self._collisions

    def observe(self, key: bytes, message: bytes, output: bytes) -> None:
        with self._lock:
            self._evaluations += 1
            previous = self._seen.get(output)
            if previous is None:
                if len(self._seen) < self._limit:
                    self._seen[output] = (key, message)
                elif not self._saturated:
                    self._saturated = True
                    _logger.warning("PRF collision watchdog stopped recording after %d outputs", self._limit)
                return
            if previous != (key, message):
                self._collisions += 1
                raise PrfCollisionError(
                    f"PRF collision on output {output.hex()} after {self._evaluations} evaluations"
                )


_watchdog: Optional[PrfCollisionWatchdog] = None


def enable_collision_watchdog(limit: int = DEFAULT_WATCHDOG_LIMIT) -> PrfCollisionWatchdog:
    global _watchdog
    _watchdog = PrfCollisionWatchdog(limit)
    return _watchdog


def disable_collision_watchdog() -> None:
    global _watchdog
    _watchdog = None


def get_collision_watchdog() -> Optional[PrfCollisionWatchdog]:
    return _watchdog


def _prf(key: bytes, message: bytes) -> bytes:
    if not isinstance(key, (bytes, bytearray)) or not key:
        raise CryptoError("PRF key must be a non-empty byte string")
    if not isinstance(message, (bytes, bytearray)):
        raise CryptoError(f"PRF message must be bytes, got {type(message).__name__}")
    output = hmac.new(bytes(key), bytes(message), hashlib.sha256).digest()[:PRF_OUTPUT_BYTES]
    if _watchdog is not None:
        _watchdog.observe(bytes(key), bytes(message), output)
    return output


def prf_h(key: bytes, message: bytes) -> bytes:
    """``H(key, message)``"""
    return _prf(key, message)


def prf_f(derived_key: bytes, nonce: bytes) -> bytes:
    """``F(derived_key, nonce)`` where ``derived_key`` is itself an ``H`` output."""
    if len(derived_key) != PRF_OUTPUT_BYTES:
        raise CryptoError(
            f"F must be keyed by a {PRF_OUTPUT_BYTES}-byte H output, got {len(derived_key)} bytes"
        )
    return _prf(derived_key, nonce)
