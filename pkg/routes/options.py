import hashlib
import json

import click
from pydantic import ValidationError

from app.exceptions.config import InvalidRunConfigError
from app.exceptions.model import InsufficientLevelsError, ModelParamsError
from app.exceptions.solver import IncompleteBasisError, SolverError
from app.helpers.context import RunContext
from app.requests.run import FORMATS, RunConfig
from app.services.output import OutputService

EXIT_BAD_CONFIG = 2
EXIT_SOLVER = 3

# Unset flags stay None and never override a --config value.
COMMON_OPTIONS = [
    click.option("--delta", type=float, help="Tunneling amplitude."),
    click.option("--epsilon", type=float, help="Static bias."),
    click.option("--omega", type=float, help="Oscillator frequency."),
    click.option("--g", type=str, help="Coupling, a number or start:stop:step."),
    click.option("--levels", type=int, help="Number of sorted levels reported."),
    click.option("--methods", type=str, help="Comma list of bgrwa, vvp, ed."),
    click.option("--truncation", type=int, help="Fixed Fock truncation N."),
    click.option("--tol", type=float, help="ED convergence tolerance."),
    click.option("--vvp-l", "vvp_l", type=str, help="VVP offset: integer, nearest or best."),
    click.option("--out", type=str, help="Output path, - for stdout."),
    click.option("--format", "fmt", type=click.Choice(FORMATS), help="Output format."),
    click.option("--jobs", type=int, help="Sweep worker count."),
    click.option(
        "--config",
        "config_path",
        type=click.Path(dir_okay=False),
        help="key = value file; flags override it.",
    ),
]


def common_options(fn):
    for option in reversed(COMMON_OPTIONS):
        fn = option(fn)
    return fn


def run_command(command, handler, flags, config_path=None, defaults=None):
    """
    Validate the configuration, invoke the handler and write its document.

    Exits with 2 on a bad configuration and 3 on a solver failure.
    """
    flags = dict(flags)
    flags["format"] = flags.pop("fmt", None)
    try:
        config = RunConfig.from_sources(command, flags, config_path, defaults)
    except (ValidationError, InvalidRunConfigError, ModelParamsError) as e:
        _fail(f"Invalid configuration: {e}", EXIT_BAD_CONFIG)

    echo = config.echo()
    context = RunContext(
        command=command,
        jobs=config.jobs,
        output=config.out,
        run_id=hashlib.sha256(
            json.dumps(echo, sort_keys=True).encode("utf-8")
        ).hexdigest()[:12],
    )
    try:
        response = handler(echo, context)
    except (ValidationError, InvalidRunConfigError, ModelParamsError) as e:
        _fail(f"Invalid configuration: {e}", EXIT_BAD_CONFIG)
    except IncompleteBasisError as e:
        _fail(f"{e}; raise --n-modes", EXIT_SOLVER)
    except (SolverError, InsufficientLevelsError) as e:
        _fail(f"Solver error: {e}", EXIT_SOLVER)

    output = OutputService()
    text = output.write(
        output.document(response["meta"], response["rows"]),
        config.format,
        config.out,
    )
    if config.out == "-":
        click.echo(text, nl=False)


def _fail(message, code):
    click.echo(message, err=True)
    raise click.exceptions.Exit(code)
