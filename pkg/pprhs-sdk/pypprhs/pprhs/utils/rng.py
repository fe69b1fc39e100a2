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
Seeding helpers. Every stream is derived from a master seed and a path of indices, so a
run decomposed into chunks draws the same numbers serially or across processes.
"""
from typing import List, Sequence

import numpy as np


def child_seed(seed: int, *path: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(entropy=seed, spawn_key=tuple(path))


def child_rng(seed: int, *path: int) -> np.random.Generator:
    return np.random.default_rng(child_seed(seed, *path))


def child_int_seed(seed: int, *path: int) -> int:
    """A plain integer seed for APIs that do not take a SeedSequence."""
    return int(child_seed(seed, *path).generate_state(1, dtype=np.uint64)[0])


def shuffled(items: Sequence, rng: np.random.Generator) -> List:
    return [items[k] for k in rng.permutation(len(items))]
