import click

from handlers import dynamics as dynamics_handler
from routes.options import common_options, run_command


@click.command("dynamics")
@common_options
@click.option("--tmax", type=float, help="End of the time grid, units of 1/omega.")
@click.option("--samples", type=int, help="Number of time samples.")
@click.option("--n-modes", "n_modes", type=int, help="Pair levels in the eigen-expansion.")
def dynamics(config_path, **flags):
    """<sigma_z(t)> from |+z>|0> for each method."""
    run_command("dynamics", dynamics_handler.main, flags, config_path)
