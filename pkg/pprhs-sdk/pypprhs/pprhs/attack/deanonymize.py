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

from dataclasses import dataclass

import numpy as np

from pprhs.exceptions import RoadNetworkError
from pprhs.roadnet import EmbeddingTable, RneVector


@dataclass(frozen=True)
class Deanonymization:
    node: int
    ambiguity: int
    exact: bool


def deanonymize(vec: RneVector, table: EmbeddingTable) -> Deanonymization:
    """
    Map a recovered vector back to a graph node: the lowest id whose embedding equals ``vec``,
    or the lowest id at minimal max-metric distance when no embedding matches exactly.
    ``ambiguity`` counts the nodes sharing that best distance.
    """
    if table is None or len(table) == 0:
        raise RoadNetworkError("Cannot de-anonymize against an empty embedding table")
    distances = table.distances_to(vec)
    best = int(distances.min())
    candidates = np.flatnonzero(distances == best)
    return Deanonymization(node=int(candidates[0]), ambiguity=int(candidates.size), exact=best == 0)
