from pydantic import BaseModel, ConfigDict


class RunContext(BaseModel):
    """
    Runtime information handed to every command handler next to its event,
    the command-line counterpart of a function invocation context.

    Attributes:
        command (str): The command being executed (spectrum, compare, dynamics, flux-scan).
        version (str): Version of the solver suite.
        jobs (int): Worker count of the sweep pool.
        output (str): Destination of the data file ("-" for stdout).
        run_id (str): Deterministic identifier derived from the config echo.
    """

    model_config = ConfigDict(frozen=True)

    command: str
    version: str = "0.1.0"
    jobs: int = 1
    output: str = "-"
    run_id: str = "local"

    def describe(self) -> dict:
        return self.model_dump()
