class InvalidRunConfigError(Exception):
    """
    Exception raised when command-line flags or a --config file do not form a
    valid run configuration. The command line maps it to exit code 2.
    """
