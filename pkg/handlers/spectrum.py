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
    Energy levels of every requested engine over the coupling sweep.

    Args:
        event (dict): RunConfig echo of the spectrum command.
        context (RunContext): The runtime information of the command.

    Returns:
        dict: An output document with `meta` and `rows`.
    """
    config = RunConfig(**event)
    logger.append_keys(command=context.command)
    rows = SpectrumService(config, SweepService(context.jobs)).rows()
    meta = {
        "command": context.command,
        "version": context.version,
        "config": config.echo(),
    }
    return OutputService().document(meta, rows).model_dump()
