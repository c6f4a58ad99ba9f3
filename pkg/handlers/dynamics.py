from app.middlewares.logging import standard_logging_middleware
from app.models.base import Method
from app.models.params import ModelParams
from app.requests.run import RunConfig
from app.services.dynamics import DynamicsService, default_time_grid
from app.services.logging import StandardLoggerService
from app.services.output import OutputService
from app.services.sweep import SweepService

logger = StandardLoggerService()


def _series(config: RunConfig, g: float):
    params = ModelParams(
        delta=config.delta, epsilon=config.epsilon, omega=config.omega, g=g
    )
    service = DynamicsService(params)
    t_grid = default_time_grid(config.tmax, config.samples)
    series = {}
    for method in config.methods:
        if method is Method.BGRWA:
            series[method] = service.evolve_bgrwa(
                t_grid, config.n_modes, config.truncation
            )
        elif method is Method.VVP:
            series[method] = service.evolve_vvp(
                t_grid, config.n_modes, config.truncation, config.vvp_l
            )
        else:
            series[method] = service.evolve_ed(t_grid, config.truncation)
    return g, t_grid, series


@standard_logging_middleware
def main(event, context):
    """
    <sigma_z(t)> from |+z>|0> for every requested engine and coupling. The
    completeness and truncation of each series go to the metadata.
    """
    config = RunConfig(**event)
    logger.append_keys(command=context.command)
    results = SweepService(context.jobs).map(
        lambda g: _series(config, g), config.g.values()
    )
    rows = []
    bookkeeping = []
    for g, t_grid, series in results:
        for method, ts in series.items():
            bookkeeping.append(
                {
                    "g": g,
                    "method": method.value,
                    "truncation": ts.truncation,
                    "completeness": ts.completeness,
                    "norm_drift": ts.norm_drift,
                }
            )
        for i, t in enumerate(t_grid):
            row = {"g": g, "t": float(t)}
            for method, ts in series.items():
                row[f"{method.value}_sigma_z"] = float(ts.sigma_z[i])
            rows.append(row)
    meta = {
        "command": context.command,
        "version": context.version,
        "config": config.echo(),
        "series": bookkeeping,
    }
    return OutputService().document(meta, rows).model_dump()
