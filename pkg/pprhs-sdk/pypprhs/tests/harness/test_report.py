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

import os
from unittest import mock

import pytest

from pprhs.exceptions import PprhsException
from pprhs.harness.report import (
    SCHEMA,
    SCHEMA_VERSION,
    TABLE1_ROW,
    default_report_path,
    dumps_records,
    make_record,
    read_report,
    write_report,
)
from pprhs.utils.output_utils import _OUTPUT_DIR_ENV_VAR


def test_records_are_self_describing():
    record = make_record(TABLE1_ROW, {"l": 2, "mean": 8.3})
    assert record == {
        "schema": SCHEMA,
        "schema_version": SCHEMA_VERSION,
        "record_type": TABLE1_ROW,
        "l": 2,
        "mean": 8.3,
    }
    with pytest.raises(PprhsException):
        make_record("bogus", {})


def test_lines_are_canonical():
    text = dumps_records([{"b": 1, "a": [1, 2]}, {"c": None}])
    assert text == '{"a":[1,2],"b":1}\n{"c":null}\n'


def test_write_and_read(tmp_path):
    records = [make_record(TABLE1_ROW, {"l": l}) for l in (1, 2)]  # noqa: E741
    path = write_report(records, str(tmp_path / "reports" / "run.jsonl"))
    assert read_report(path) == records


def test_default_location(tmp_path):
    with mock.patch.dict(os.environ, {_OUTPUT_DIR_ENV_VAR: str(tmp_path)}):
        assert default_report_path("table1", 4) == os.path.join(str(tmp_path), "table1-seed4.jsonl")
        path = write_report([make_record(TABLE1_ROW, {})], mode="table1", seed=4)
    assert os.path.exists(path)


def test_reject_foreign_lines(tmp_path):
    path = tmp_path / "other.jsonl"
    path.write_text('{"schema":"other"}\n')
    with pytest.raises(PprhsException):
        read_report(str(path))
