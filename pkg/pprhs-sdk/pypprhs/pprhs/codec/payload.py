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
Wire form of a signed payload: 8 bytes, two's complement, little-endian.
"""
from pprhs.exceptions import CodecError

PAYLOAD_WIDTH = 8

_MIN_PAYLOAD = -(1 << (8 * PAYLOAD_WIDTH - 1))
_MAX_PAYLOAD = (1 << (8 * PAYLOAD_WIDTH - 1)) - 1


def encode_signed(value: int) -> bytes:
    if not isinstance(value, int) or not _MIN_PAYLOAD <= value <= _MAX_PAYLOAD:
        raise CodecError(f"Payload {value} does not fit into {PAYLOAD_WIDTH} signed bytes")
    return value.to_bytes(PAYLOAD_WIDTH, "little", signed=True)


def decode_signed(data: bytes) -> int:
    if len(data) != PAYLOAD_WIDTH:
        raise CodecError(f"Payload must be {PAYLOAD_WIDTH} bytes, got {len(data)}")
    return int.from_bytes(data, "little", signed=True)


def xor_bytes(left: bytes, right: bytes) -> bytes:
    if len(left) != len(right):
        raise CodecError(f"Cannot xor {len(left)} bytes with {len(right)} bytes")
    return bytes(a ^ b for a, b in zip(left, right))
