from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic import ConfigDict, field_validator
from pydantic_settings import BaseSettings

load_dotenv(dotenv_path=".env")


class EnvironmentVariables(BaseSettings):
    """
    EnvironmentVariables is a configuration class that loads environment variables
    for the solver suite using Pydantic's BaseSettings. It includes settings for
    the application name, environment, logging, and the numerical defaults every
    engine falls back to when a run does not override them.

    Attributes:
        APP_NAME (str): The name of the application, used as the logging service name.
        APP_ENVIRONMENT (str): The environment in which the suite is running (e.g., local, ci).
        LOG_LEVEL (str): The logging level (e.g., DEBUG, INFO, WARNING, ERROR).
        LOG_CHANNEL (str): The logging channel to use (console or file).
        LOG_FILE (str): The file path for logging output when LOG_CHANNEL is file.
        ED_TOLERANCE (float): Level shift below which a doubled Fock truncation counts as converged.
        ED_MAX_TRUNCATION (int): Largest Fock truncation the convergence loop may reach.
        VVP_K_CUTOFF (int): Default cutoff of the second-order k-sums.
        DYNAMICS_N_MODES (int): Default number of analytic pair levels used in the dynamics expansion.
        DYNAMICS_T_MAX (float): Default end of the time grid, in units of 1/omega.
        DYNAMICS_SAMPLES (int): Default number of time samples.
        SWEEP_JOBS (int): Default worker count for parameter sweeps.
        OUTPUT_PRECISION (int): Significant digits written to CSV and JSON output.

    Methods:
        check_channel(cls, v): Normalizes the logging channel and rejects unknown ones.
    """

    APP_NAME: str = "rabi-spectra"
    APP_ENVIRONMENT: str = "local"
    LOG_LEVEL: str = "WARNING"
    LOG_CHANNEL: str = "console"
    LOG_FILE: str = "storage/logs/rabi-spectra.log"
    ED_TOLERANCE: float = 1e-8
    ED_MAX_TRUNCATION: int = 2000
    VVP_K_CUTOFF: int = 40
    DYNAMICS_N_MODES: int = 20
    DYNAMICS_T_MAX: float = 50.0
    DYNAMICS_SAMPLES: int = 1000
    SWEEP_JOBS: int = 1
    OUTPUT_PRECISION: int = 12

    model_config = ConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )

    @field_validator("LOG_CHANNEL", mode="before")
    def check_channel(cls, v):
        channel = str(v).strip().lower()
        if channel not in ("console", "file"):
            raise ValueError("LOG_CHANNEL must be 'console' or 'file'")
        return channel


@lru_cache()
def env(var_name: Optional[str] = None):
    """
    Create and return an instance of EnvironmentVariables or a specific environment variable.

    Args:
        var_name (Optional[str]): The name of the environment variable to retrieve. Defaults to None.

    Returns:
        EnvironmentVariables or the value of the specified environment variable.
    """
    env_vars = EnvironmentVariables()
    if var_name:
        return getattr(env_vars, var_name, None)
    return env_vars
