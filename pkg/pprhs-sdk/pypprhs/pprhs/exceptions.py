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


class PprhsException(Exception):
    """
    Generic exception thrown to surface failure information about external-facing operations.
    """

    def __init__(self, message):
        """
        :param message: The message describing the error that occurred.
        """
        self.message = message
        super().__init__(message)


class ConfigurationError(PprhsException):
    """Experiment or generator parameters out of their allowed ranges"""


class RoadNetworkError(PprhsException):
    """Invalid node ids, unreachable pairs or malformed network files"""


class CapacityError(PprhsException):
    """A value does not fit into m blocks of l bits"""


class CodecError(PprhsException):
    """Block or payload outside its declared range"""


class CryptoError(PprhsException):
    """Malformed key, nonce or PRF message field"""


class PrfCollisionError(CryptoError):
    """Two distinct PRF inputs produced the same output, or one rider group matched twice"""


class ProtocolError(PprhsException):
    """A message does not belong to the session, or honest matching failed"""


class NoMatchError(ProtocolError):
    """Driver selection was asked to choose among zero responders"""


class AttackError(PprhsException):
    """Root of the faults the passive attack can run into"""


class LedgerCorruptionError(AttackError):
    """A recorded payload is not a multiple of its block weight or is out of range"""

    def __init__(self, i: int, j: int, payload: int, reason: str):
        self.i = i
        self.j = j
        self.payload = payload
        super().__init__(f"Corrupted difference at block ({i}, {j}): payload {payload} {reason}")


class InconsistentLedgerError(AttackError):
    """The observed differences admit no rider block, or imply a driver block out of range"""
