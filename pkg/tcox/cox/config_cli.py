# Copyright 2026, tcox developers
"""

`tcox-config`: tcox configuration CLI.

"""
import sys
import click
import yaml

from .config import get_config_and_filepath, store_default_user_config


@click.command("tcox configuration CLI")
@click.option("--store-default-config/--no-store-default-config", default=None)
@click.option("--overwrite/--no-overwrite", default=None,
              help="Overwrite an existing config file (default: ask).")
@click.option("--show/--no-show", default=None, help="Print the effective configuration.")
def tcox_config_cli(store_default_config=None, overwrite=None, show=None):
    """ Create or inspect the tcox configuration file. """
    if store_default_config is None and show is None:
        show = True
    if store_default_config:
        store_default_user_config(overwrite_existing=overwrite)
    if show:
        try:
            config, config_fn = get_config_and_filepath()
        except ValueError as exc:
            print(f"ERROR: {exc}", file=sys.stderr)
            sys.exit(1)
        print(f"# Config file: {config_fn or '(none, using defaults)'}")
        print(yaml.safe_dump(config, default_flow_style=False), end="")


if __name__ == '__main__':
    tcox_config_cli()
