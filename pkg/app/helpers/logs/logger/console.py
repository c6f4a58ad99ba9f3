import logging
import sys

from aws_lambda_powertools.logging import Logger

from app.helpers.logs.base import PowertoolsLogger
from app.helpers.logs.formatter.standard import StandardLogFormatter
from config.logging import handler


class ConsoleLogger(PowertoolsLogger):
    def __init__(self):
        config = handler("console")
        stream = sys.stderr if config.stream == "stderr" else sys.stdout
        self.logger = Logger(
            service=config.name,
            level=config.level,
            formatter=StandardLogFormatter(),
            logger_handler=logging.StreamHandler(stream),
        )
