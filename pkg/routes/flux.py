import click

from handlers import flux_scan as flux_handler
from routes.options import common_options, run_command

CIRCUIT_DEFAULTS = {"g": 0.82, "omega": 8.13, "delta": 4.25, "epsilon": 0.0}


@click.command("flux-scan")
@common_options
@click.option("--ip", type=float, help="Persistent current, nA.")
@click.option("--flux", type=str, help="Flux grid in units of Phi_0, start:stop:step.")
@click.option("--method", type=str, help="Engine: bgrwa, vvp or ed.")
def flux_scan(config_path, **flags):
    """Transition frequencies (GHz) of a flux qubit against applied flux."""
    run_command(
        "flux-scan", flux_handler.main, flags, config_path, CIRCUIT_DEFAULTS
    )
