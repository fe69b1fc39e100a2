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

from pprhs.crypto.encoding import MESSAGE_BYTES, message_encoding
from pprhs.crypto.keys import KEY_BYTES, NONCE_BYTES, KeyManager, SystemKeys, key_manager_issue, new_nonce
from pprhs.crypto.prf import (
    PRF_NAME,
    PRF_OUTPUT_BYTES,
    PrfCollisionWatchdog,
    disable_collision_watchdog,
    enable_collision_watchdog,
    get_collision_watchdog,
    prf_f,
    prf_h,
)

__all__ = [
    "KEY_BYTES",
    "KeyManager",
    "MESSAGE_BYTES",
    "NONCE_BYTES",
    "PRF_NAME",
    "PRF_OUTPUT_BYTES",
    "PrfCollisionWatchdog",
    "SystemKeys",
    "disable_collision_watchdog",
    "enable_collision_watchdog",
    "get_collision_watchdog",
    "key_manager_issue",
    "message_encoding",
    "new_nonce",
    "prf_f",
    "prf_h",
]
