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

import struct

from pprhs.exceptions import CryptoError

# q: 1 byte, i: 2 bytes, j: 2 bytes, z: 4 bytes, s: 4 bytes, all big-endian
_MESSAGE_FORMAT = struct.Struct(">BHHII")

MESSAGE_BYTES = _MESSAGE_FORMAT.size

_FIELDS = (("q", 8), ("i", 16), ("j", 16), ("z", 32), ("s", 32))


def message_encoding(q: int, i: int, j: int, z: int, s: int) -> bytes:
    """Fixed-width encoding of ``q||i||j||z||s``."""
    for (name, bits), value in zip(_FIELDS, (q, i, j, z, s)):
        if not isinstance(value, int) or not 0 <= value < (1 << bits):
            raise CryptoError(f"Message field {name}={value!r} does not fit into {bits} bits")
    return _MESSAGE_FORMAT.pack(q, i, j, z, s)
