# Copyright 2026, tcox developers
"""

Configuration module for the tcox CLIs.

The configuration file is optional; values missing from it fall back to `DEFAULT_CONFIG`.
Command-line flags always take precedence over the file.


"""
import os
import click
import yaml


DEFAULT_OUTPUT_FORMAT = "text"
DEFAULT_CHECK = False
DEFAULT_CATALOG_WORKERS = 4
DEFAULT_JSON_INDENT = 2
DEFAULT_IDEAL_STYLE = "plain"
DEFAULT_CONFIG = {
    'output_format': DEFAULT_OUTPUT_FORMAT,
    'check': DEFAULT_CHECK,
    'catalog_workers': DEFAULT_CATALOG_WORKERS,
    'json_indent': DEFAULT_JSON_INDENT,
    'ideal_style': DEFAULT_IDEAL_STYLE,
}
OUTPUT_FORMATS = ("json", "text")
IDEAL_STYLES = ("plain", "macaulay2")
CONFIG_PATHS = [
    "~/.tcox_config.yaml",
    "~/.config/tcox/config.yaml",
]
CONFIG_HEADER = "# tcox configuration. Command-line flags take precedence over these values.\n"


def config_candidates():
    """ Paths searched for a config file, in order. """
    return [os.path.expanduser(cand) for cand in CONFIG_PATHS]


def get_config_file():
    """ The first existing candidate path, or None. """
    return next((cand for cand in config_candidates() if os.path.isfile(cand)), None)


def load_config_file(config_fn=None):
    """ The raw contents of the config file, or None if there is no file. """
    if config_fn is None:
        config_fn = get_config_file()
    if config_fn is None:
        return
    with open(config_fn) as fp:
        config = yaml.safe_load(fp)
    return config or {}


def get_config(config_fn=None):
    """ Default config updated with the values of the config file (if any).

    Raises:
        ValueError: if the file holds something other than a mapping or has a bad value.
    """
    config = dict(DEFAULT_CONFIG)
    user_config = load_config_file(config_fn)
    if user_config is None:
        return config
    if not isinstance(user_config, dict):
        raise ValueError(f"Config file {config_fn or get_config_file()} does not contain a mapping.")
    config.update(user_config)
    if config['output_format'] not in OUTPUT_FORMATS:
        raise ValueError(f"Config value output_format={config['output_format']!r} must be one of {OUTPUT_FORMATS}.")
    if config['ideal_style'] not in IDEAL_STYLES:
        raise ValueError(f"Config value ideal_style={config['ideal_style']!r} must be one of {IDEAL_STYLES}.")
    if not isinstance(config['catalog_workers'], int) or config['catalog_workers'] < 1:
        raise ValueError(f"Config value catalog_workers={config['catalog_workers']!r} must be a positive integer.")
    return config


def get_config_and_filepath():
    config_fn = get_config_file()
    return get_config(config_fn), config_fn


def store_default_user_config(overwrite_existing=False, config_fn=None):
    """ Write `DEFAULT_CONFIG` to a YAML file.

    Args:
        overwrite_existing: True or False, or None to ask on the terminal.
        config_fn: Target path; defaults to the config file in use, else the first candidate.

    Returns:
        The stored config, or None if an existing file was kept.
    """
    if overwrite_existing not in (True, False, None):
        raise ValueError(f"Value '{overwrite_existing}' of argument 'overwrite_existing' not recognized. "
                         "Must be one of True/False/None.")
    if config_fn is None:
        config_fn = get_config_file() or config_candidates()[0]
    if os.path.exists(config_fn):
        click.echo(f"Config file already exists: {config_fn}")
        overwrite = overwrite_existing
        if overwrite is None:
            overwrite = click.confirm("Overwrite it with the defaults?", default=True)
        if not overwrite:
            click.echo(" - Skipping.")
            return None
    os.makedirs(os.path.dirname(config_fn) or os.curdir, exist_ok=True)
    with open(config_fn, 'w', encoding='utf-8') as fp:
        fp.write(CONFIG_HEADER)
        yaml.safe_dump(DEFAULT_CONFIG, fp, default_flow_style=False)
    click.echo(f"Wrote the default config to {config_fn}")
    return DEFAULT_CONFIG
