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

from typing import Optional

from pprhs.utils import env

_OUTPUT_DIR_ENV_VAR = "PPRHS_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "./pprhs-output"


_output_dir = None


def set_output_dir(path: Optional[str]):
    """
    Set the report output directory. Takes effect for successive runs.
    """
    global _output_dir
    _output_dir = path


def get_output_dir() -> str:
    """
    Get the current report output directory.
    :return: The directory reports are written to when no explicit path is given.
    """
    global _output_dir
    if _output_dir is not None:
        return _output_dir
    elif env.get_env(_OUTPUT_DIR_ENV_VAR) is not None:
        return env.get_env(_OUTPUT_DIR_ENV_VAR)
    else:
        return DEFAULT_OUTPUT_DIR
