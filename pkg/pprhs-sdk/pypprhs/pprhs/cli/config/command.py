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

from dataclasses import asdict

import click
import yaml
from rich.console import Console
from rich.json import JSON as richJSON
from rich.panel import Panel

from pprhs.exceptions import ConfigurationError
from pprhs.harness.config import initConfig, loadConfig, rgetattr, rsetattr, saveConfig


@click.command("list")
def list_config():
    """List experiment defaults"""
    console = Console()
    _config = loadConfig()
    json_data = richJSON.from_data({**asdict(_config)})
    console.print(Panel(json_data, title="ExperimentConfig"))


@click.command("get")
@click.argument("param")
def get_config(param):
    """Get one experiment default"""
    _config = loadConfig()
    try:
        click.echo(f"{param}={rgetattr(_config, param)}")
    except AttributeError as err:
        click.echo(err)


@click.command("set")
@click.argument("param")
@click.argument("value")
def set_config(param, value):
    """Set one experiment default"""
    _config = loadConfig()
    try:
        rgetattr(_config, param)
    except AttributeError as err:
        raise click.BadParameter(str(err), param_hint="param")
    # YAML scalars cover every field type: ints, bools, null and flow lists
    try:
        rsetattr(_config, param, yaml.safe_load(value))
        _config.validate()
    except (TypeError, ConfigurationError) as err:
        raise click.BadParameter(str(err), param_hint="value")
    saveConfig(_config)


@click.command("init")
def init_config():
    """Reset the experiment defaults"""
    initConfig()
    click.echo("Experiment config initialized")
