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

import functools
import logging
import os
import typing
from dataclasses import asdict, dataclass, field, fields
from typing import List, Optional, Union

import dacite
import yaml

from pprhs.exceptions import ConfigurationError
from pprhs.utils.env import get_env, get_from_dicts

_logger = logging.getLogger(__name__)

CONFIG_YAML_PATH = os.path.join(os.path.dirname(__file__), "experiment_config.yaml")
_CONFIG_PATH_ENV_VAR = "PPRHS_CONFIG_PATH"

TABLE1 = "table1"
END_TO_END = "end_to_end"
PROTOCOL_ONLY = "protocol_only"
DRIVER_SWEEP = "driver_sweep"
MODES = (TABLE1, END_TO_END, PROTOCOL_ONLY, DRIVER_SWEEP)

NODES = "nodes"
UNIFORM_BLOCKS = "uniform_blocks"
PLACEMENTS = (NODES, UNIFORM_BLOCKS)

SUPPORTED_BLOCK_BITS = (1, 2, 3, 4)

# fields that do not influence results and stay out of the report
RUNTIME_ONLY_FIELDS = ("out", "workers")


@dataclass
class BaseConfig:
    def __setattr__(self, __name, __value) -> None:
        """
        Override __setattr__ for custom type checking
        """
        # ignore this line for mypy checking, since there is some errors for mypy to check dataclass
        _field = self.__dataclass_fields__[__name]  # type: ignore
        _type = typing.get_type_hints(type(self))[__name]
        if typing.get_origin(_type) == Union:
            if not isinstance(__value, _expand(typing.get_args(_type))):
                msg = (
                    f"Field `{_field.name}` is of type {type(__value)}, should be one of the type:"
                    f" {typing.get_args(_type)}"
                )
                raise TypeError(msg)
        elif typing.get_origin(_type) is not None:
            if not isinstance(__value, typing.get_origin(_type)):
                msg = f"Field {_field.name} is of type {type(__value)}, should be {_type}"
                raise TypeError(msg)
        else:
            if not type(__value) == _type:
                msg = f"Field {_field.name} is of type {type(__value)}, should be {_type}"
                raise TypeError(msg)

        super().__setattr__(__name, __value)


def _expand(types: tuple) -> tuple:
    return tuple(typing.get_origin(t) or t for t in types)


@dataclass
class ExperimentConfig(BaseConfig):
    mode: str = field(default=END_TO_END, metadata={"help": f"One of {', '.join(MODES)}"})
    l: int = field(default=2, metadata={"help": "Bits per block"})  # noqa: E741
    m: Optional[int] = field(
        default=None, metadata={"help": "Blocks per coordinate, null sizes it to the network diameter"}
    )
    n: int = field(default=8, metadata={"help": "Embedding dimension (number of landmark subsets)"})
    rows: int = field(default=6, metadata={"help": "Grid rows of the generated road network"})
    cols: int = field(default=6, metadata={"help": "Grid columns of the generated road network"})
    weight_min: int = field(default=1, metadata={"help": "Smallest edge weight in meters"})
    weight_max: int = field(default=10, metadata={"help": "Largest edge weight in meters"})
    landmark_size: int = field(default=1, metadata={"help": "Nodes per landmark subset"})
    network_file: Optional[str] = field(default=None, metadata={"help": "Road network file to load"})
    num_drivers: int = field(default=40, metadata={"help": "Responding drivers per ride request"})
    trials: int = field(default=100, metadata={"help": "Monte Carlo trials or simulated sessions"})
    seed: int = field(default=1, metadata={"help": "Master seed"})
    out: Optional[str] = field(default=None, metadata={"help": "Report path"})
    strict_lemma: bool = field(default=False, metadata={"help": "Resolve blocks only on full coverage"})
    workers: int = field(default=1, metadata={"help": "Worker processes"})
    zone: int = field(default=7, metadata={"help": "Zone id of every session"})
    slot: int = field(default=9, metadata={"help": "Time slot of every session"})
    placement: str = field(default=NODES, metadata={"help": f"One of {', '.join(PLACEMENTS)}"})
    merge_requests: bool = field(
        default=False, metadata={"help": "Merge the ledgers of one rider's requests"}
    )
    requests_per_session: int = field(default=1, metadata={"help": "Ride requests issued per session"})
    all_levels: bool = field(default=False, metadata={"help": "Table-1 mode: run every supported l"})
    sweep: List[int] = field(
        default_factory=lambda: [1, 2, 4, 8, 16, 32, 64],
        metadata={"help": "Driver counts of the driver-sweep mode"},
    )

    def validate(self) -> "ExperimentConfig":
        if self.mode not in MODES:
            raise ConfigurationError(f"Unknown mode {self.mode!r}, expected one of {MODES}")
        if self.l not in SUPPORTED_BLOCK_BITS:
            raise ConfigurationError(f"l must be one of {SUPPORTED_BLOCK_BITS}, got {self.l}")
        if self.m is not None and self.m < 1:
            raise ConfigurationError(f"m must be positive, got {self.m}")
        if self.trials < 1:
            raise ConfigurationError(f"trials must be at least 1, got {self.trials}")
        if self.n < 1 or self.landmark_size < 1:
            raise ConfigurationError("n and landmark_size must be positive")
        if self.rows < 1 or self.cols < 1:
            raise ConfigurationError(f"Grid must be at least 1x1, got {self.rows}x{self.cols}")
        if self.weight_min > self.weight_max or self.weight_min < 0:
            raise ConfigurationError(f"Invalid weight range [{self.weight_min}, {self.weight_max}]")
        if self.num_drivers < 1 or self.requests_per_session < 1 or self.workers < 1:
            raise ConfigurationError("num_drivers, requests_per_session and workers must be positive")
        if self.placement not in PLACEMENTS:
            raise ConfigurationError(f"Unknown placement {self.placement!r}, expected one of {PLACEMENTS}")
        for name in ("zone", "slot"):
            if not 0 <= getattr(self, name) < (1 << 32):
                raise ConfigurationError(f"{name} must fit into 32 bits")
        if not self.sweep or any(count < 1 for count in self.sweep):
            raise ConfigurationError(f"Driver sweep counts must be positive, got {self.sweep}")
        return self

    def to_record(self) -> dict:
        record = asdict(self)
        for name in RUNTIME_ONLY_FIELDS:
            record.pop(name)
        return record


def rgetattr(obj, attr, *args):
    """
    Recursive get attr
    Example:
        rgetattr(obj,"a.b.c") is equivalent to obj.a.b.c
    """

    def _getattr(obj, attr):
        return getattr(obj, attr, *args)

    return functools.reduce(_getattr, [obj] + attr.split("."))


def rsetattr(obj, attr, val):
    """
    Recursive set attr
    Example:
        rsetattr(obj,"a.b.c",val) is equivalent to obj.a.b.c = val
    """
    pre, _, post = attr.rpartition(".")
    if pre:
        _r = rgetattr(obj, pre)
        return setattr(_r, post, val)
    else:
        return setattr(obj, post, val)


def get_config_path() -> str:
    """The YAML the defaults come from, the bundled one unless PPRHS_CONFIG_PATH is set."""
    return get_env(_CONFIG_PATH_ENV_VAR) or CONFIG_YAML_PATH


def loadConfig(config_path: Optional[str] = None) -> ExperimentConfig:
    config_path = config_path or get_config_path()
    try:
        with open(config_path) as stream:
            parsed_yaml: dict = yaml.safe_load(stream) or {}
    except OSError as exc:
        raise ConfigurationError(f"Cannot open config {config_path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigurationError(f"Error reading config {config_path}: {exc}") from exc
    try:
        return dacite.from_dict(
            data_class=ExperimentConfig, data=parsed_yaml, config=dacite.Config(strict=True)
        )
    except (dacite.DaciteError, TypeError) as exc:
        raise ConfigurationError(f"Invalid config {config_path}: {exc}") from exc


def saveConfig(config: ExperimentConfig, config_path: Optional[str] = None):
    config_path = config_path or get_config_path()
    with open(config_path, "w") as stream:
        try:
            yaml.safe_dump({**asdict(config)}, stream, sort_keys=False)
        except yaml.YAMLError as exc:
            raise ConfigurationError(f"Error saving config {config_path}: {exc}") from exc


def initConfig(config_path: Optional[str] = None):
    saveConfig(ExperimentConfig(), config_path)


def build_config(overrides: Optional[dict] = None, config_path: Optional[str] = None) -> ExperimentConfig:
    """YAML defaults with every non-None override applied, validated."""
    defaults = asdict(loadConfig(config_path))
    merged = get_from_dicts(overrides, defaults)
    known = {f.name for f in fields(ExperimentConfig)}
    unknown = set(merged) - known
    if unknown:
        raise ConfigurationError(f"Unknown config fields {sorted(unknown)}")
    try:
        config = dacite.from_dict(data_class=ExperimentConfig, data=merged, config=dacite.Config(strict=True))
    except (dacite.DaciteError, TypeError) as exc:
        raise ConfigurationError(f"Invalid config: {exc}") from exc
    return config.validate()
