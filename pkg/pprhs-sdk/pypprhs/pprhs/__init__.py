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

import pprhs.utils as utils
from pprhs.attack import mount_attack
from pprhs.harness import ExperimentConfig, run_experiment
from pprhs.protocol import Driver, Rider, ServiceProvider

set_output_dir = utils.set_output_dir
get_output_dir = utils.get_output_dir

__all__ = [
    "Driver",
    "ExperimentConfig",
    "Rider",
    "ServiceProvider",
    "get_output_dir",
    "mount_attack",
    "run_experiment",
    "set_output_dir",
]
