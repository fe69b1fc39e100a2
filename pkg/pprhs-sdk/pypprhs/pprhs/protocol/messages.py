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
Messages exchanged in one matching session. Only ciphertext bytes, nonces and the clear
``(i, j)`` block labels travel to the service provider.
"""
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

from pprhs.codec import PAYLOAD_WIDTH, BlockParams
from pprhs.crypto import NONCE_BYTES, PRF_OUTPUT_BYTES
from pprhs.entities._pprhs_object import _PprhsObject
from pprhs.exceptions import ProtocolError

_UINT32_MAX = (1 << 32) - 1

BlockLabel = Tuple[int, int]


@dataclass(frozen=True)
class RideContext:
    """Zone, time slot and block layout shared by every party of a session."""

    zone: int
    slot: int
    params: BlockParams
    dim: int

    def __post_init__(self):
        for name in ("zone", "slot"):
            value = getattr(self, name)
            if not isinstance(value, int) or not 0 <= value <= _UINT32_MAX:
                raise ProtocolError(f"{name} must be a 32-bit unsigned id, got {value!r}")
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ProtocolError(f"Embedding dimension must be positive, got {self.dim!r}")

    @property
    def labels(self) -> Tuple[BlockLabel, ...]:
        return tuple((i, j) for i in range(self.dim) for j in range(self.params.m))


def _check_width(name: str, value: bytes, width: int) -> None:
    if not isinstance(value, bytes) or len(value) != width:
        raise ProtocolError(f"{name} must be {width} bytes")


class RiderEntry(_PprhsObject):
    """One ``(tag, C1, C2)`` triple for one candidate value q; q itself is not carried."""

    def __init__(self, tag: bytes, c1: bytes, c2: bytes):
        _check_width("tag", tag, PRF_OUTPUT_BYTES)
        _check_width("c1", c1, PRF_OUTPUT_BYTES)
        _check_width("c2", c2, PAYLOAD_WIDTH)
        self._tag = tag
        self._c1 = c1
        self._c2 = c2

    @property
    def tag(self) -> bytes:
        return self._tag

    @property
    def c1(self) -> bytes:
        return self._c1

    @property
    def c2(self) -> bytes:
        """Masked weighted difference."""
        return self._c2


class RiderBlockGroup(_PprhsObject):
    """The ``2^l`` rider ciphertexts of block ``(i, j)`` sharing the nonce gamma."""

    def __init__(self, i: int, j: int, gamma: bytes, entries: Iterable[RiderEntry]):
        _check_width("gamma", gamma, NONCE_BYTES)
        self._i = i
        self._j = j
        self._gamma = gamma
        self._entries = tuple(entries)

    @property
    def i(self) -> int:
        return self._i

    @property
    def j(self) -> int:
        return self._j

    @property
    def gamma(self) -> bytes:
        return self._gamma

    @property
    def entries(self) -> Tuple[RiderEntry, ...]:
        return self._entries

    @property
    def label(self) -> BlockLabel:
        return (self._i, self._j)


class RiderRequest(_PprhsObject):
    def __init__(self, context: RideContext, groups: Iterable[RiderBlockGroup]):
        self._context = context
        self._groups = tuple(groups)
        self._by_label: Dict[BlockLabel, RiderBlockGroup] = {}
        for group in self._groups:
            if group.label in self._by_label:
                raise ProtocolError(f"Duplicate rider group for block {group.label}")
            if len(group.entries) != context.params.base:
                raise ProtocolError(
                    f"Rider group {group.label} has {len(group.entries)} entries,"
                    f" expected {context.params.base}"
                )
            self._by_label[group.label] = group
        if set(self._by_label) != set(context.labels):
            raise ProtocolError("Rider request must carry exactly one group per (i, j)")

    @property
    def context(self) -> RideContext:
        return self._context

    @property
    def groups(self) -> Tuple[RiderBlockGroup, ...]:
        return self._groups

    def group(self, i: int, j: int) -> RiderBlockGroup:
        try:
            return self._by_label[(i, j)]
        except KeyError:
            raise ProtocolError(f"No rider group for block ({i}, {j})") from None


class DriverEntry(_PprhsObject):
    """The driver's single ``(C'1, C'2)`` pair for block ``(i, j)``."""

    def __init__(self, i: int, j: int, c1p: bytes, c2p: bytes):
        _check_width("c1p", c1p, PRF_OUTPUT_BYTES)
        _check_width("c2p", c2p, PRF_OUTPUT_BYTES)
        self._i = i
        self._j = j
        self._c1p = c1p
        self._c2p = c2p

    @property
    def i(self) -> int:
        return self._i

    @property
    def j(self) -> int:
        return self._j

    @property
    def c1p(self) -> bytes:
        return self._c1p

    @property
    def c2p(self) -> bytes:
        return self._c2p

    @property
    def label(self) -> BlockLabel:
        return (self._i, self._j)


class DriverResponse(_PprhsObject):
    def __init__(self, driver_id: int, context: RideContext, entries: Iterable[DriverEntry]):
        self._driver_id = driver_id
        self._context = context
        self._entries = tuple(entries)
        labels = [entry.label for entry in self._entries]
        if len(set(labels)) != len(labels) or set(labels) != set(context.labels):
            raise ProtocolError(f"Driver {driver_id} must send exactly one pair per (i, j)")

    @property
    def driver_id(self) -> int:
        return self._driver_id

    @property
    def context(self) -> RideContext:
        return self._context

    @property
    def entries(self) -> Tuple[DriverEntry, ...]:
        return self._entries
