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

import pytest

from pprhs.codec import BlockParams
from pprhs.crypto import disable_collision_watchdog, enable_collision_watchdog, key_manager_issue
from pprhs.roadnet import generate_grid_network


@pytest.fixture(scope="session", autouse=True)
def prf_collision_watchdog():
    """
    Every PRF output of the test session is checked for collisions. Sessions run in worker
    processes are checked by each worker's own watchdog, which does not report back here.
    """
    watchdog = enable_collision_watchdog()
    yield watchdog
    disable_collision_watchdog()
    assert watchdog.collisions == 0


@pytest.fixture(scope="session")
def grid_network():
    return generate_grid_network(4, 5, (1, 9), seed=7, num_landmarks=3)


@pytest.fixture(scope="function")
def system_keys():
    return key_manager_issue(2024)


@pytest.fixture(scope="function")
def small_params():
    return BlockParams(l=2, m=2)
