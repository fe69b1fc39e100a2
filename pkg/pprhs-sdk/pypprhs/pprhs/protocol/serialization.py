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
Self-describing records for protocol messages, used for logging and replay. Ciphertext
fields are hex strings.
"""
from typing import Any, Dict

from pprhs.codec import BlockParams
from pprhs.exceptions import PprhsException, ProtocolError
from pprhs.protocol.messages import (
    DriverEntry,
    DriverResponse,
    RideContext,
    RiderBlockGroup,
    RiderEntry,
    RiderRequest,
)

RIDER_REQUEST = "rider_request"
DRIVER_RESPONSE = "driver_response"


def context_to_record(ctx: RideContext) -> Dict[str, Any]:
    return {"zone": ctx.zone, "slot": ctx.slot, "l": ctx.params.l, "m": ctx.params.m, "n": ctx.dim}


def context_from_record(record: Dict[str, Any]) -> RideContext:
    try:
        return RideContext(
            zone=record["zone"],
            slot=record["slot"],
            params=BlockParams(l=record["l"], m=record["m"]),
            dim=record["n"],
        )
    except ProtocolError:
        raise
    except PprhsException as e:
        raise ProtocolError(f"Invalid ride context {record}: {e.message}") from e


def request_to_record(request: RiderRequest) -> Dict[str, Any]:
    return {
        "record_type": RIDER_REQUEST,
        "context": context_to_record(request.context),
        "groups": [
            {
                "i": group.i,
                "j": group.j,
                "gamma": group.gamma.hex(),
                "entries": [
                    {"tag": entry.tag.hex(), "c1": entry.c1.hex(), "c2": entry.c2.hex()}
                    for entry in group.entries
                ],
            }
            for group in request.groups
        ],
    }


def request_from_record(record: Dict[str, Any]) -> RiderRequest:
    _check_type(record, RIDER_REQUEST)
    try:
        groups = [
            RiderBlockGroup(
                group["i"],
                group["j"],
                bytes.fromhex(group["gamma"]),
                [
                    RiderEntry(bytes.fromhex(e["tag"]), bytes.fromhex(e["c1"]), bytes.fromhex(e["c2"]))
                    for e in group["entries"]
                ],
            )
            for group in record["groups"]
        ]
        return RiderRequest(context_from_record(record["context"]), groups)
    except (KeyError, ValueError, TypeError) as e:
        raise ProtocolError(f"Malformed {RIDER_REQUEST} record: {e}") from e


def response_to_record(response: DriverResponse) -> Dict[str, Any]:
    return {
        "record_type": DRIVER_RESPONSE,
        "driver_id": response.driver_id,
        "context": context_to_record(response.context),
        "entries": [
            {"i": e.i, "j": e.j, "c1p": e.c1p.hex(), "c2p": e.c2p.hex()} for e in response.entries
        ],
    }


def response_from_record(record: Dict[str, Any]) -> DriverResponse:
    _check_type(record, DRIVER_RESPONSE)
    try:
        entries = [
            DriverEntry(e["i"], e["j"], bytes.fromhex(e["c1p"]), bytes.fromhex(e["c2p"]))
            for e in record["entries"]
        ]
        return DriverResponse(record["driver_id"], context_from_record(record["context"]), entries)
    except (KeyError, ValueError, TypeError) as e:
        raise ProtocolError(f"Malformed {DRIVER_RESPONSE} record: {e}") from e


def _check_type(record: Dict[str, Any], expected: str) -> None:
    if record.get("record_type") != expected:
        raise ProtocolError(f"Expected a {expected} record, got {record.get('record_type')!r}")
