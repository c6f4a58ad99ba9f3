import click

from handlers import compare as compare_handler
from handlers import spectrum as spectrum_handler
from routes.options import common_options, run_command


@click.command("spectrum")
@common_options
def spectrum(config_path, **flags):
    """Energy levels over a coupling sweep, one column per method and level."""
    run_command("spectrum", spectrum_handler.main, flags, config_path)


@click.command("compare")
@common_options
def compare(config_path, **flags):
    """Spectrum sweep with |E_method - E_ed| columns per level."""
    run_command("compare", compare_handler.main, flags, config_path)
