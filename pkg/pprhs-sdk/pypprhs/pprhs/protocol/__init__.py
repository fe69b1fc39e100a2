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

from pprhs.protocol.driver import Driver, driver_encrypt
from pprhs.protocol.messages import (
    DriverEntry,
    DriverResponse,
    RideContext,
    RiderBlockGroup,
    RiderEntry,
    RiderRequest,
)
from pprhs.protocol.rider import Rider, rider_encrypt
from pprhs.protocol.service_provider import (
    ServiceProvider,
    SessionTranscript,
    sp_compute_distance,
    sp_match_all,
    sp_match_block,
    sp_select_driver,
)

__all__ = [
    "Driver",
    "DriverEntry",
    "DriverResponse",
    "RideContext",
    "Rider",
    "RiderBlockGroup",
    "RiderEntry",
    "RiderRequest",
    "ServiceProvider",
    "SessionTranscript",
    "driver_encrypt",
    "rider_encrypt",
    "sp_compute_distance",
    "sp_match_all",
    "sp_match_block",
    "sp_select_driver",
]
