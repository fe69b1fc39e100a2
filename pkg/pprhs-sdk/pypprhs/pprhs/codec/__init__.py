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

from pprhs.codec.blocks import (
    BlockParams,
    check_capacity,
    decompose,
    recompose,
    weighted_difference,
)
from pprhs.codec.payload import PAYLOAD_WIDTH, decode_signed, encode_signed, xor_bytes

__all__ = [
    "BlockParams",
    "PAYLOAD_WIDTH",
    "check_capacity",
    "decode_signed",
    "decompose",
    "encode_signed",
    "recompose",
    "weighted_difference",
    "xor_bytes",
]
