from logging import FileHandler
from pathlib import Path

from aws_lambda_powertools.logging import Logger

from app.helpers.logs.base import PowertoolsLogger
from app.helpers.logs.formatter.file import FileLogFormatter
from config.logging import handler


class FileLogger(PowertoolsLogger):
    def __init__(self):
        config = handler("file")
        Path(config.path).parent.mkdir(parents=True, exist_ok=True)
        self.logger = Logger(
            service=config.name,
            level=config.level,
            formatter=FileLogFormatter(),
            logger_handler=FileHandler(config.path),
            json_deserializer=config.json_deserializer,
        )
