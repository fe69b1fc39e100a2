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

from typing import List, Optional

import click

from pprhs.cli.config import command as config_cmd
from pprhs.cli.run import command as run_cmd


@click.group()
def entry_point():
    """Passive attack on privacy-preserving ride matching"""
    pass


@entry_point.group("config")
def cmdgrp_config():
    pass


# run
entry_point.add_command(run_cmd.run_command)

# config
cmdgrp_config.add_command(config_cmd.set_config)
cmdgrp_config.add_command(config_cmd.list_config)
cmdgrp_config.add_command(config_cmd.get_config)
cmdgrp_config.add_command(config_cmd.init_config)


def cli_main(argv: Optional[List[str]] = None) -> int:
    """
    Run one experiment from command-line flags and return the process exit code:
    0 on success, 2 on usage or configuration errors.
    """
    try:
        entry_point.main(args=["run", *(argv or [])], prog_name="pprhs", standalone_mode=False)
    except click.ClickException as err:
        err.show()
        return err.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return 0
