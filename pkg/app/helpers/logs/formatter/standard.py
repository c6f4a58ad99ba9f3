from aws_lambda_powertools.logging.formatter import LambdaPowertoolsFormatter


class StandardLogFormatter(LambdaPowertoolsFormatter):
    """JSON formatter for console records; numpy scalars are rendered as plain numbers."""

    def __init__(self, **kwargs):
        kwargs.setdefault("json_default", _to_builtin)
        super().__init__(**kwargs)


def _to_builtin(value):
    if hasattr(value, "tolist"):
        return value.tolist()
    return str(value)
