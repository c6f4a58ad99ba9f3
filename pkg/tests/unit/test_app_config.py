import pytest
from pydantic import ValidationError

from app.helpers.environment import EnvironmentVariables, env


def test_settings_loads_env_vars(monkeypatch):
    """
    Test that the Settings class correctly loads configuration from environment variables.

    This test sets environment variables and then creates a Settings instance to
    verify that the environment variables are correctly loaded and cast.
    """
    monkeypatch.setenv("APP_ENVIRONMENT", "test")
    monkeypatch.setenv("ED_TOLERANCE", "1e-6")
    monkeypatch.setenv("ED_MAX_TRUNCATION", "500")
    monkeypatch.setenv("VVP_K_CUTOFF", "25")
    monkeypatch.setenv("SWEEP_JOBS", "4")
    monkeypatch.setenv("LOG_CHANNEL", "File")

    settings = EnvironmentVariables()

    assert settings.APP_ENVIRONMENT == "test"
    assert settings.ED_TOLERANCE == 1e-6
    assert settings.ED_MAX_TRUNCATION == 500
    assert settings.VVP_K_CUTOFF == 25
    assert settings.SWEEP_JOBS == 4
    assert settings.LOG_CHANNEL == "file"


def test_numerical_defaults(monkeypatch):
    for name in ("DYNAMICS_N_MODES", "DYNAMICS_SAMPLES", "OUTPUT_PRECISION"):
        monkeypatch.delenv(name, raising=False)

    settings = EnvironmentVariables()

    assert settings.DYNAMICS_N_MODES == 20
    assert settings.DYNAMICS_SAMPLES == 1000
    assert settings.OUTPUT_PRECISION == 12


def test_unknown_log_channel_is_rejected(monkeypatch):
    monkeypatch.setenv("LOG_CHANNEL", "syslog")

    with pytest.raises(ValidationError):
        EnvironmentVariables()


def test_get_settings_cached():
    """
    Test that the env function is using cache for returning the settings.

    This test verifies that when env is called multiple times, it returns
    the same instance, indicating that the function's result is being cached.
    """
    first_call = env()
    second_call = env()

    assert first_call is second_call
    assert env("VVP_K_CUTOFF") == first_call.VVP_K_CUTOFF
