import sys

import click

sys.path.append(".")

from routes.dynamics import dynamics  # noqa: E402
from routes.flux import flux_scan  # noqa: E402
from routes.spectrum import compare, spectrum  # noqa: E402


@click.group()
@click.version_option("0.1.0", prog_name="rabi-spectra")
def cli():
    """
    Spectra and dynamics of the biased quantum Rabi model: the biased
    generalized rotating-wave approximation, the Van Vleck perturbation
    baseline and exact diagonalization. Data goes to stdout or --out,
    logs to stderr.
    """


cli.add_command(spectrum)
cli.add_command(compare)
cli.add_command(dynamics)
cli.add_command(flux_scan)


if __name__ == "__main__":
    cli()
