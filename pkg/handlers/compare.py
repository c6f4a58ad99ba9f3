from app.middlewares.logging import standard_logging_middleware
from app.requests.run import RunConfig
from app.services.logging import StandardLoggerService
from app.services.output import OutputService
from app.services.spectrum import SpectrumService
from app.services.sweep import SweepService

logger = StandardLoggerService()


@standard_logging_middleware
def main(event, context):
    """
    Spectrum sweep with per-level |E_method - E_ed| columns. The largest
    deviation of each method over the sweep is echoed in the metadata.
    """
    config = RunConfig(**event)
    logger.append_keys(command=context.command)
    rows = SpectrumService(config, SweepService(context.jobs)).rows(
        deviations=True
    )
    worst = {}
    for row in rows:
        for key, value in row.items():
            if "_dE" in key:
                method = key.split("_dE")[0]
                worst[method] = max(worst.get(method, 0.0), value)
    meta = {
        "command": context.command,
        "version": context.version,
        "config": config.echo(),
        "max_deviation": worst,
    }
    return OutputService().document(meta, rows).model_dump()
