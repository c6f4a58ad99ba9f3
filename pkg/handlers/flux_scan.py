from app.middlewares.logging import standard_logging_middleware
from app.models.experiment import FluxQubitParams
from app.requests.run import RunConfig
from app.services.experiment import ExperimentService
from app.services.logging import StandardLoggerService
from app.services.output import OutputService
from app.services.sweep import SweepService

logger = StandardLoggerService()


@standard_logging_middleware
def main(event, context):
    """
    Transition frequencies of the flux qubit over the flux grid. Frequencies
    are GHz; --g, --omega and --delta are read as circuit values.
    """
    config = RunConfig(**event)
    logger.append_keys(command=context.command)
    circuit = FluxQubitParams(
        g=config.g.start,
        omega=config.omega,
        delta=config.delta,
        i_p=config.ip,
        flux_grid=tuple(config.flux.values()),
    )
    scan = ExperimentService(circuit, SweepService(context.jobs)).flux_scan(
        config.levels, config.method, config.vvp_l
    )
    rows = []
    for item in scan.rows:
        row = {"flux": item.flux_ratio, "epsilon": item.epsilon}
        for k, value in enumerate(item.transitions, start=1):
            row[f"T{k}"] = value
        for k, value in enumerate(item.deviations or [], start=1):
            row[f"dT{k}"] = value
        rows.append(row)
    meta = {
        "command": context.command,
        "version": context.version,
        "config": config.echo(),
        "circuit": circuit.model_dump(exclude={"flux_grid"}),
        "method": scan.method.value,
    }
    return OutputService().document(meta, rows).model_dump()
