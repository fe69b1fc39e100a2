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
"""Text files on local paths or any URI pyarrow has a filesystem for (``file://``, ``s3://``, ``hdfs://``)."""
import io
from pathlib import Path
from typing import Tuple
from urllib.parse import urlparse

from pyarrow import fs

ENCODING = "utf-8"


def resolve(uri: str) -> Tuple[fs.FileSystem, str]:
    if not urlparse(uri).scheme:
        uri = str(Path(uri).expanduser().absolute())
    return fs.FileSystem.from_uri(uri)


def write_text(text: str, uri: str, buffer_size: int = io.DEFAULT_BUFFER_SIZE) -> None:
    """Replace the file at ``uri`` with ``text``, creating missing parent directories."""
    filesystem, path = resolve(uri)
    parent = path.rpartition("/")[0]
    if parent:
        filesystem.create_dir(parent, recursive=True)
    with filesystem.open_output_stream(path, buffer_size=buffer_size) as stream:
        stream.write(text.encode(ENCODING))


def read_text(uri: str) -> str:
    filesystem, path = resolve(uri)
    with filesystem.open_input_stream(path) as stream:
        return stream.read().decode(ENCODING)
