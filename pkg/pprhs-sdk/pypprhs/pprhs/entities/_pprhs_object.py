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

import pprint
from typing import Any, Iterator, List, Tuple

_printer = pprint.PrettyPrinter(compact=True)


class _PprhsObject:
    """Value object whose public state is its read-only properties."""

    @classmethod
    def _properties(cls) -> List[str]:
        return sorted(p for p in dir(cls) if isinstance(getattr(cls, p, None), property))

    def __iter__(self) -> Iterator[Tuple[str, Any]]:
        return ((prop, getattr(self, prop)) for prop in self._properties())

    def __repr__(self) -> str:
        return to_string(self)


def to_string(obj: Any) -> str:
    """``<Name: prop=value, ...>`` for value objects, hex for ciphertext bytes."""
    if isinstance(obj, _PprhsObject):
        fields = ", ".join(f"{key}={to_string(value)}" for key, value in obj)
        return f"<{type(obj).__name__}: {fields}>"
    if isinstance(obj, (bytes, bytearray)):
        return bytes(obj).hex()
    return _printer.pformat(obj)
