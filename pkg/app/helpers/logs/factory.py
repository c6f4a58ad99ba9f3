from app.helpers.environment import env
from app.helpers.logs.logger.console import ConsoleLogger
from app.helpers.logs.logger.file import FileLogger


class LoggerFactory:
    """
    LoggerFactory is a factory class responsible for creating the logger
    matching the configured logging channel.

    Methods:
        create_logger():
            Returns:
                FileLogger: If the logging channel is 'file'.
                ConsoleLogger: For all other configurations.
    """

    @staticmethod
    def create_logger():
        if env().LOG_CHANNEL == "file":
            return FileLogger()
        return ConsoleLogger()
