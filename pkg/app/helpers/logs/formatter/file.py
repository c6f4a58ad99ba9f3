from aws_lambda_powertools.logging.formatter import LambdaPowertoolsFormatter

from app.helpers.logs.formatter.standard import _to_builtin


class FileLogFormatter(LambdaPowertoolsFormatter):
    """
    FileLogFormatter formats records for the file channel. Records are one JSON
    object per line, with the same numpy-aware default as the console formatter.
    """

    def __init__(self, **kwargs):
        kwargs.setdefault("json_default", _to_builtin)
        super().__init__(**kwargs)
