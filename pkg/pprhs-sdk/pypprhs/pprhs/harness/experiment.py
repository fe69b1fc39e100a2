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

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import pandas as pd

from pprhs.crypto import PRF_NAME, PRF_OUTPUT_BYTES
from pprhs.harness import report
from pprhs.harness.config import (
    DRIVER_SWEEP,
    END_TO_END,
    PROTOCOL_ONLY,
    SUPPORTED_BLOCK_BITS,
    TABLE1,
    ExperimentConfig,
)
from pprhs.harness.end_to_end import SimulationSummary, run_driver_sweep, run_end_to_end, run_protocol_only
from pprhs.harness.table1 import Table1Row, run_table1_levels
from pprhs.utils.env import get_from_registry

_logger = logging.getLogger(__name__)


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    records: List[Dict[str, Any]] = field(default_factory=list)
    table1: List[Table1Row] = field(default_factory=list)
    simulation: Optional[SimulationSummary] = None
    sweep: Optional[pd.DataFrame] = None
    report_path: Optional[str] = None


def _run_table1(config: ExperimentConfig, result: ExperimentResult) -> None:
    levels = SUPPORTED_BLOCK_BITS if config.all_levels else (config.l,)
    result.table1 = run_table1_levels(levels, config.trials, config.seed, config.workers)
    result.records.extend(report.make_record(report.TABLE1_ROW, row.to_record()) for row in result.table1)


def _run_end_to_end(config: ExperimentConfig, result: ExperimentResult) -> None:
    result.simulation = run_end_to_end(config)
    result.records.append(report.make_record(report.END_TO_END_RUN, result.simulation.to_record()))


def _run_protocol_only(config: ExperimentConfig, result: ExperimentResult) -> None:
    result.simulation = run_protocol_only(config)
    result.records.append(report.make_record(report.PROTOCOL_ONLY_RUN, result.simulation.to_record()))


def _run_driver_sweep(config: ExperimentConfig, result: ExperimentResult) -> None:
    result.sweep = run_driver_sweep(config)
    result.records.extend(
        report.make_record(report.DRIVER_SWEEP_POINT, {k: _plain(v) for k, v in row.items()})
        for row in result.sweep.to_dict(orient="records")
    )


def _plain(value):
    return value.item() if hasattr(value, "item") else value


_MODES: Dict[str, Callable[[ExperimentConfig, ExperimentResult], None]] = {
    TABLE1: _run_table1,
    END_TO_END: _run_end_to_end,
    PROTOCOL_ONLY: _run_protocol_only,
    DRIVER_SWEEP: _run_driver_sweep,
}


def run_experiment(config: ExperimentConfig, write: bool = True) -> ExperimentResult:
    """
    Run the configured mode and collect its report records, the config echo first.
    With ``write`` the records also go to ``config.out`` or the output directory.
    """
    config.validate()
    _logger.info("Running %s with seed %d", config.mode, config.seed)
    echo = {**config.to_record(), "prf": PRF_NAME, "prf_output_bytes": PRF_OUTPUT_BYTES}
    result = ExperimentResult(config, [report.make_record(report.EXPERIMENT_CONFIG, echo)])
    get_from_registry(config.mode, _MODES)(config, result)
    if write:
        result.report_path = report.write_report(result.records, config.out, config.mode, config.seed)
    _logger.info("Finished %s: %d report records", config.mode, len(result.records))
    return result
