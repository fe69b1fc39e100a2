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

from pprhs.utils.fileio import read_text, resolve, write_text


def test_write_then_read(tmp_path):
    uri = str(tmp_path / "nested" / "dir" / "report.jsonl")
    write_text('{"a":1}\n', uri)
    assert read_text(uri) == '{"a":1}\n'


def test_write_overwrites(tmp_path):
    uri = str(tmp_path / "report.jsonl")
    write_text("first, much longer contents\n", uri)
    write_text("second\n", uri)
    assert read_text(uri) == "second\n"


def test_file_uri(tmp_path):
    path = tmp_path / "net.txt"
    write_text("2 1\n0 1 3\n", path.as_uri())
    assert read_text(str(path)) == "2 1\n0 1 3\n"


def test_relative_paths_resolve_to_absolute(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    _, path = resolve("out/r.jsonl")
    assert path.endswith("out/r.jsonl")
    assert path.startswith(str(tmp_path))
