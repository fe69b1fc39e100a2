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

import logging
from typing import Optional

import click
from rich.console import Console
from rich.json import JSON as richJSON
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

from pprhs.exceptions import CapacityError, ConfigurationError, PprhsException
from pprhs.harness.config import MODES, PLACEMENTS, build_config
from pprhs.harness.experiment import ExperimentResult, run_experiment

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


class ExperimentFailed(click.ClickException):
    exit_code = 2


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


@click.command("run")
@click.option("--mode", type=click.Choice(MODES), default=None, help="Experiment to run")
@click.option("--l", "l", type=int, default=None, help="Bits per block, 1 to 4")
@click.option("--m", "m", type=int, default=None, help="Blocks per coordinate")
@click.option("--n", "n", type=int, default=None, help="Embedding dimension")
@click.option("--trials", type=int, default=None, help="Monte Carlo trials or simulated sessions")
@click.option("--drivers", "num_drivers", type=int, default=None, help="Drivers answering each request")
@click.option("--seed", type=int, default=None, help="Master seed")
@click.option("--out", type=str, default=None, help="Report path, defaults to the output directory")
@click.option("--network-file", type=str, default=None, help="Road network to load instead of a grid")
@click.option("--rows", type=int, default=None, help="Rows of the generated grid")
@click.option("--cols", type=int, default=None, help="Columns of the generated grid")
@click.option("--weight-min", type=int, default=None, help="Smallest generated edge weight")
@click.option("--weight-max", type=int, default=None, help="Largest generated edge weight")
@click.option("--landmark-size", type=int, default=None, help="Nodes per landmark subset")
@click.option("--zone", type=int, default=None)
@click.option("--slot", type=int, default=None)
@click.option(
    "--placement", type=click.Choice(PLACEMENTS), default=None, help="Where riders and drivers stand"
)
@click.option("--requests", "requests_per_session", type=int, default=None, help="Ride requests per session")
@click.option("--merge-requests/--no-merge-requests", default=None, help="Merge the ledgers of one rider")
@click.option("--strict-lemma/--no-strict-lemma", default=None, help="Resolve blocks only on full coverage")
@click.option("--all-levels", is_flag=True, default=None, help="Table-1 mode: run l = 1 to 4")
@click.option("--sweep", type=int, multiple=True, help="Driver counts of the driver-sweep mode")
@click.option("--workers", type=int, default=None, help="Worker processes")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default="WARNING")
def run_command(log_level, sweep, **overrides):
    """Run an experiment and write its JSON Lines report"""
    configure_logging(log_level.upper())
    if sweep:
        overrides["sweep"] = list(sweep)
    try:
        config = build_config(overrides)
    except ConfigurationError as err:
        raise click.UsageError(err.message)
    try:
        result = run_experiment(config)
    except (ConfigurationError, CapacityError) as err:
        raise click.UsageError(err.message)
    except PprhsException as err:
        raise ExperimentFailed(err.message)
    print_summary(result, Console())


def print_summary(result: ExperimentResult, console: Optional[Console] = None) -> None:
    console = console or Console()
    if result.table1:
        table = Table(title="Drivers needed to pin one block")
        for col in ["l", "Trials", "Mean", "Std. error", "Analytic", "Ceiling", "Published"]:
            table.add_column(col, overflow="fold")
        for row in result.table1:
            table.add_row(
                str(row.l),
                str(row.trials),
                f"{row.mean:.4f}",
                f"{row.stderr:.4f}",
                f"{float(row.analytic):.4f}",
                str(row.ceiling),
                str(row.published_value),
            )
        console.print(table)
    if result.simulation is not None:
        summary = result.simulation.to_record()
        summary.pop("per_session")
        console.print(Panel(richJSON.from_data(summary), title=result.config.mode))
    if result.sweep is not None:
        table = Table(title="Recovery rate by driver count")
        for col in result.sweep.columns:
            table.add_column(col, overflow="fold")
        for row in result.sweep.itertuples(index=False):
            table.add_row(*(f"{v:.4f}" if isinstance(v, float) else str(v) for v in row))
        console.print(table)
    if result.report_path:
        console.print(f"[bold green]Report written to {result.report_path}")
