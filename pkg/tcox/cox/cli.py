# Copyright 2026, tcox developers
"""

`tcox`: command line interface.

Commands:

    tcox fan FILE         Cox ring of the variety of a divisorial fan over P^1.
    tcox owgraph FILE     Cox ring of a K*-surface from its Orlik-Wagreich graph.
    tcox bundle FILE      Cox ring of a projectivized rank-2 bundle from its jump data.
    tcox cotangent FILE   Cox ring of a projectivized cotangent bundle from the fan rays.
    tcox catalog          List, show or verify the built-in examples.

FILE may be `-` to read from stdin. Exit codes: 0 on success, 1 when the input is
mathematically invalid or a check fails, 2 when the input file is malformed.

"""
import json
import logging
import sys
import click

from tcox.exceptions import SchemaError, TcoxError
from .catalog import load_fixtures, show_fixture, verify_catalog
from .config import DEFAULT_CONFIG, OUTPUT_FORMATS, get_config
from .dialects import format_report, parse_input, run
from .presentation import to_ideal_text
from .utils import setup_logging, verbose_print

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_SCHEMA = 2


def _fail(message, code):
    click.echo(f"ERROR: {message}", err=True)
    sys.exit(code)


def _load_config():
    try:
        return get_config()
    except (ValueError, OSError) as exc:
        _fail(f"Could not read config: {exc}", EXIT_INVALID)


@click.group("tcox")
def tcox_cli():
    """ Cox rings of varieties with a complexity-one torus action. """
    pass


def job_options(func):
    """ Options shared by the four input-file commands. """
    func = click.option("--verbose", "-v", count=True)(func)
    func = click.option("--ideal-out", type=click.Path(dir_okay=False, writable=True),
                        help="Also write a plain-text ideal listing to this file.")(func)
    func = click.option("--check/--no-check", default=None,
                        help="Verify the structural properties of the result.")(func)
    func = click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS))(func)
    func = click.argument("input_file", type=click.File("rb"))(func)
    return func


def run_job_cli(kind, input_file, output_format=None, check=None, ideal_out=None, verbose=0):
    """ Parse, compute and print the report of one input file. """
    setup_logging(verbose)
    config = _load_config()
    if output_format is None:
        output_format = config.get("output_format", DEFAULT_CONFIG['output_format'])
    if check is None:
        check = config.get("check", DEFAULT_CONFIG['check'])
    indent = config.get("json_indent", DEFAULT_CONFIG['json_indent'])
    verbose_print(f"Reading {kind} input from {getattr(input_file, 'name', '-')}", verbose=verbose, criteria=0)
    try:
        job = parse_input(input_file.read(), kind=kind, options={'check': check, 'format': output_format})
    except SchemaError as exc:
        _fail(exc, EXIT_SCHEMA)
    except TcoxError as exc:
        _fail(exc, EXIT_INVALID)
    try:
        report, presentation = run(job, check=check)
    except TcoxError as exc:
        _fail(exc, EXIT_INVALID)
    if output_format == "json":
        click.echo(json.dumps(report, indent=indent, ensure_ascii=False))
    else:
        click.echo(format_report(report), nl=False)
    if ideal_out:
        style = config.get("ideal_style", DEFAULT_CONFIG['ideal_style'])
        with open(ideal_out, 'w', encoding='utf-8') as fp:
            fp.write(to_ideal_text(presentation, style=style))
        verbose_print(f"Wrote {style} ideal listing to {ideal_out}", verbose=verbose, criteria=0)
    return report


@tcox_cli.command("fan")
@job_options
def fan_cli(input_file, output_format=None, check=None, ideal_out=None, verbose=0):
    """ Cox ring of X(fan) for a divisorial fan over P^1. """
    run_job_cli("fan", input_file, output_format, check, ideal_out, verbose)


@tcox_cli.command("owgraph")
@job_options
def owgraph_cli(input_file, output_format=None, check=None, ideal_out=None, verbose=0):
    """ Cox ring of a K*-surface given by its Orlik-Wagreich graph. """
    run_job_cli("owgraph", input_file, output_format, check, ideal_out, verbose)


@tcox_cli.command("bundle")
@job_options
def bundle_cli(input_file, output_format=None, check=None, ideal_out=None, verbose=0):
    """ Cox ring of P(E) for a rank-2 equivariant bundle E. """
    run_job_cli("bundle", input_file, output_format, check, ideal_out, verbose)


@tcox_cli.command("cotangent")
@job_options
def cotangent_cli(input_file, output_format=None, check=None, ideal_out=None, verbose=0):
    """ Cox ring of the projectivized cotangent bundle of a smooth complete toric variety. """
    run_job_cli("cotangent", input_file, output_format, check, ideal_out, verbose)


@tcox_cli.command("catalog")
@click.option("--list", "list_", is_flag=True, help="List the catalog entries.")
@click.option("--show", metavar="NAME", help="Print the input JSON of an entry.")
@click.option("--verify", is_flag=True, help="Recompute entries and compare with their expected values.")
@click.option("--name", "names", multiple=True, metavar="NAME", help="Restrict --verify to these entries.")
@click.option("--workers", type=int, metavar="N", help="Number of verification threads.")
@click.option("--verbose", "-v", count=True)
def catalog_cli(list_=False, show=None, verify=False, names=(), workers=None, verbose=0):
    """ The built-in catalog of worked examples. """
    setup_logging(verbose)
    config = _load_config()
    if workers is None:
        workers = config.get("catalog_workers", DEFAULT_CONFIG['catalog_workers'])
    indent = config.get("json_indent", DEFAULT_CONFIG['json_indent'])
    fixtures = load_fixtures()
    if not (list_ or show or verify):
        list_ = True
    if list_:
        for fixture in fixtures.values():
            click.echo(f"{fixture.name:32} {fixture.kind:10} {fixture.description}")
    if show:
        if show not in fixtures:
            _fail(f"Unknown catalog entry '{show}'.", EXIT_INVALID)
        click.echo(json.dumps(show_fixture(fixtures[show]), indent=indent, ensure_ascii=False))
    if verify:
        try:
            results = verify_catalog(names, workers=workers, fixtures=fixtures)
        except KeyError as exc:
            _fail(exc.args[0], EXIT_INVALID)
        failed = 0
        for result in results:
            status = "ok" if result.ok else "FAILED"
            click.echo(f"{result.name:32} {status}")
            verbose_print(f"    {result.seconds:.3f} s", verbose=verbose, criteria=0)
            for problem in result.problems:
                click.echo(f"    {problem}")
            failed += not result.ok
        click.echo(f"{len(results) - failed} of {len(results)} entries verified.")
        if failed:
            sys.exit(EXIT_INVALID)


if __name__ == '__main__':
    tcox_cli()
