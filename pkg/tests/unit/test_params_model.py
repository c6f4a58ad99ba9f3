import math

import pytest

from app.exceptions.model import (
    NegativeCouplingError,
    NonFiniteInputError,
    NonPositiveOmegaError,
)
from app.models.params import ModelParams


def test_valid_params_are_frozen():
    params = ModelParams(delta=1.0, epsilon=0.5, omega=2.0, g=0.3)

    with pytest.raises(Exception):
        params.g = 0.4


@pytest.mark.parametrize("omega", [0.0, -1.0])
def test_non_positive_omega_is_rejected(omega):
    with pytest.raises(NonPositiveOmegaError):
        ModelParams(delta=1.0, epsilon=0.0, omega=omega, g=0.1)


def test_negative_coupling_is_rejected():
    with pytest.raises(NegativeCouplingError):
        ModelParams(delta=1.0, epsilon=0.0, omega=1.0, g=-0.1)


@pytest.mark.parametrize(
    "field", ["delta", "epsilon", "omega", "g"]
)
def test_non_finite_fields_are_rejected(field):
    values = {"delta": 1.0, "epsilon": 0.1, "omega": 1.0, "g": 0.1}
    values[field] = math.nan

    with pytest.raises(NonFiniteInputError):
        ModelParams(**values)


def test_tiny_omega_with_overflowing_ratio_is_rejected():
    with pytest.raises(NonFiniteInputError):
        ModelParams(delta=1e300, epsilon=0.0, omega=1e-300, g=0.0)


def test_dimensionless_divides_by_omega():
    scaled = ModelParams(delta=2.0, epsilon=1.0, omega=2.0, g=0.5).dimensionless()

    assert (scaled.delta, scaled.epsilon, scaled.omega, scaled.g) == (
        1.0,
        0.5,
        1.0,
        0.25,
    )


def test_unit_round_trip():
    params = ModelParams(delta=4.25, epsilon=-3.1, omega=8.13, g=0.82)
    back = params.dimensionless().with_omega(params.omega)

    for field in ("delta", "epsilon", "omega", "g"):
        assert getattr(back, field) == pytest.approx(
            getattr(params, field), abs=1e-12
        )


def test_dressed_quantities():
    params = ModelParams(delta=1.0, epsilon=0.2, omega=1.0, g=0.3)

    assert params.eta == pytest.approx(math.exp(-0.18))
    assert params.y == pytest.approx(math.sqrt(0.04 + math.exp(-0.36)))
