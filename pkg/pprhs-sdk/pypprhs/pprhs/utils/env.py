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

import copy
import os
from collections.abc import Mapping
from typing import Optional

from pprhs.exceptions import ConfigurationError


def get_env(variable_name: str) -> Optional[str]:
    return os.environ.get(variable_name)


def get_from_dicts(params: Optional[dict], defaultParams: dict) -> dict:
    """
    If parameters are not specified in params, use the ones in defaultParams
    :param params: parameters which will be merged, ``None`` values are treated as unset
    :type params: Dictionary
    :param defaultParams: default parameters
    :type defaultParams: Dictionary
    :return: merged copy
    """
    if params is None:
        return defaultParams

    dct = copy.deepcopy(defaultParams)
    for k, v in params.items():
        if v is None:
            continue
        if k in dct and isinstance(dct[k], dict) and isinstance(defaultParams[k], Mapping):
            dct[k] = get_from_dicts(v, dct[k])
        else:
            dct[k] = v
    return dct


def get_from_registry(key: str, registry: dict):
    if hasattr(key, "lower"):
        key = key.lower()
    if key in registry:
        return registry[key]
    else:
        raise ConfigurationError(f"Key {key} not supported, available options: {list(registry.keys())}")
