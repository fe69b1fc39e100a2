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

from pprhs.utils.rng import child_int_seed, child_rng, shuffled


def test_child_streams_are_reproducible():
    a = child_rng(5, 1, 2).integers(0, 1 << 30, size=8)
    b = child_rng(5, 1, 2).integers(0, 1 << 30, size=8)
    np.testing.assert_array_equal(a, b)


def test_child_streams_are_independent():
    a = child_rng(5, 1, 2).integers(0, 1 << 30, size=8)
    b = child_rng(5, 1, 3).integers(0, 1 << 30, size=8)
    c = child_rng(6, 1, 2).integers(0, 1 << 30, size=8)
    assert not np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_child_int_seed():
    assert child_int_seed(3, 1) == child_int_seed(3, 1)
    assert child_int_seed(3, 1) != child_int_seed(3, 2)
    assert isinstance(child_int_seed(3), int)


def test_shuffled_is_a_permutation():
    items = list(range(20))
    out = shuffled(items, child_rng(1))
    assert sorted(out) == items
    assert out == shuffled(items, child_rng(1))
