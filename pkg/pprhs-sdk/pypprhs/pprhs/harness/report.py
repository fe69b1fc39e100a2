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
JSON Lines reports. One self-describing record per line, keys sorted, so two runs with the same
configuration produce byte-identical files.
"""
import json
import logging
import os
from typing import Any, Dict, Iterable, List, Optional

from pprhs.exceptions import PprhsException
from pprhs.utils import get_output_dir
from pprhs.utils.fileio import read_text, write_text

_logger = logging.getLogger(__name__)

SCHEMA = "pprhs.report"
SCHEMA_VERSION = 1

EXPERIMENT_CONFIG = "experiment_config"
TABLE1_ROW = "table1_row"
END_TO_END_RUN = "end_to_end_run"
PROTOCOL_ONLY_RUN = "protocol_only_run"
DRIVER_SWEEP_POINT = "driver_sweep_point"
RECORD_TYPES = (EXPERIMENT_CONFIG, TABLE1_ROW, END_TO_END_RUN, PROTOCOL_ONLY_RUN, DRIVER_SWEEP_POINT)


def make_record(record_type: str, body: Dict[str, Any]) -> Dict[str, Any]:
    if record_type not in RECORD_TYPES:
        raise PprhsException(f"Unknown report record type {record_type!r}")
    return {"schema": SCHEMA, "schema_version": SCHEMA_VERSION, "record_type": record_type, **body}


def dumps_records(records: Iterable[Dict[str, Any]]) -> str:
    return "".join(json.dumps(r, sort_keys=True, separators=(",", ":")) + "\n" for r in records)


def default_report_path(mode: str, seed: int) -> str:
    return os.path.join(get_output_dir(), f"{mode}-seed{seed}.jsonl")


def write_report(
    records: Iterable[Dict[str, Any]], uri: Optional[str] = None, mode: str = "run", seed: int = 0
) -> str:
    """Write the records to ``uri`` or, without one, under the output directory. Returns the path used."""
    uri = uri or default_report_path(mode, seed)
    write_text(dumps_records(records), uri)
    _logger.info("Report written to %s", uri)
    return uri


def read_report(uri: str) -> List[Dict[str, Any]]:
    records = []
    for number, line in enumerate(read_text(uri).splitlines(), start=1):
        if not line.strip():
            continue
        record = json.loads(line)
        if record.get("schema") != SCHEMA or record.get("schema_version") != SCHEMA_VERSION:
            raise PprhsException(f"{uri}:{number} is not a {SCHEMA} v{SCHEMA_VERSION} record")
        records.append(record)
    return records
