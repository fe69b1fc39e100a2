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

from pprhs.harness.config import ExperimentConfig, build_config
from pprhs.harness.end_to_end import (
    SessionResult,
    SimulationSummary,
    run_driver_sweep,
    run_end_to_end,
    run_protocol_only,
    simulate_session,
)
from pprhs.harness.experiment import ExperimentResult, run_experiment
from pprhs.harness.table1 import PUBLISHED_DRIVER_COUNTS, Table1Row, expected_drivers, run_table1

__all__ = [
    "ExperimentConfig",
    "ExperimentResult",
    "PUBLISHED_DRIVER_COUNTS",
    "SessionResult",
    "SimulationSummary",
    "Table1Row",
    "build_config",
    "expected_drivers",
    "run_driver_sweep",
    "run_end_to_end",
    "run_experiment",
    "run_protocol_only",
    "run_table1",
    "simulate_session",
]
