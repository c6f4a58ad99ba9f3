import pytest
from dotenv import load_dotenv

from app.models.params import ModelParams

load_dotenv(dotenv_path=".env_testing")


@pytest.fixture
def resonant_params():
    """Delta = omega = 1 with a small bias, the regime where the analytic engines are compared."""
    return ModelParams(delta=1.0, epsilon=0.1, omega=1.0, g=0.1)


@pytest.fixture
def biased_params():
    return ModelParams(delta=1.0, epsilon=0.5, omega=1.0, g=0.4)
