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

import itertools

import pytest

from pprhs.crypto import MESSAGE_BYTES, message_encoding
from pprhs.exceptions import CryptoError


def test_examples():
    assert message_encoding(0, 0, 0, 0, 0) == bytes(13)
    assert message_encoding(3, 1, 2, 7, 9) == bytes.fromhex("03" "0001" "0002" "00000007" "00000009")
    assert MESSAGE_BYTES == 13


def test_injective_on_small_domain():
    tuples = list(itertools.product(range(3), range(3), range(3), (0, 1 << 31), (5, (1 << 32) - 1)))
    encodings = {message_encoding(*t) for t in tuples}
    assert len(encodings) == len(tuples)


@pytest.mark.parametrize(
    "fields",
    [
        (256, 0, 0, 0, 0),
        (0, 1 << 16, 0, 0, 0),
        (0, 0, 1 << 16, 0, 0),
        (0, 0, 0, 1 << 32, 0),
        (0, 0, 0, 0, -1),
    ],
)
def test_field_overflow(fields):
    with pytest.raises(CryptoError):
        message_encoding(*fields)
