import math

from pydantic import model_validator

from app.exceptions.model import (
    NegativeCouplingError,
    NonFiniteInputError,
    NonPositiveOmegaError,
)

from .base import ValueModel


class ModelParams(ValueModel):
    """
    Physical parameters of the biased qubit-oscillator Hamiltonian

        H = -delta/2 sigma_x - epsilon/2 sigma_z + omega a^dag a + g (a^dag + a) sigma_z

    Attributes:
        delta (float): Tunneling amplitude.
        epsilon (float): Static bias.
        omega (float): Oscillator frequency, strictly positive.
        g (float): Qubit-oscillator coupling, non-negative.

    Every engine works with `dimensionless()` (omega = 1) internally and
    rescales energies by omega on the way out.
    """

    delta: float
    epsilon: float
    omega: float
    g: float

    @model_validator(mode="after")
    def check_invariants(self):
        validate(self)
        return self

    @property
    def coupling_ratio(self) -> float:
        return self.g / self.omega

    @property
    def delta_ratio(self) -> float:
        return self.delta / self.omega

    @property
    def epsilon_ratio(self) -> float:
        return self.epsilon / self.omega

    @property
    def eta(self) -> float:
        """eta = exp(-2 g^2 / omega^2), the vacuum dressing of the tunneling."""
        return math.exp(-2.0 * self.coupling_ratio**2)

    @property
    def y(self) -> float:
        """Dressed qubit splitting sqrt(epsilon^2 + delta^2 eta^2)."""
        return math.hypot(self.epsilon, self.delta * self.eta)

    def dimensionless(self) -> "ModelParams":
        return ModelParams(
            delta=self.delta_ratio,
            epsilon=self.epsilon_ratio,
            omega=1.0,
            g=self.coupling_ratio,
        )

    def with_omega(self, omega: float) -> "ModelParams":
        """Attach a frequency scale to dimensionless parameters."""
        return ModelParams(
            delta=self.delta * omega,
            epsilon=self.epsilon * omega,
            omega=self.omega * omega,
            g=self.g * omega,
        )


def validate(params: ModelParams) -> ModelParams:
    """
    Check the parameter invariants and return the parameters unchanged.

    Raises:
        NonFiniteInputError: If any field or dimensionless ratio is NaN or infinite.
        NonPositiveOmegaError: If omega <= 0.
        NegativeCouplingError: If g < 0.
    """
    values = (params.delta, params.epsilon, params.omega, params.g)
    if not all(math.isfinite(v) for v in values):
        raise NonFiniteInputError(f"Non-finite parameter in {values}")
    if params.omega <= 0:
        raise NonPositiveOmegaError(
            f"omega must be positive, got {params.omega}"
        )
    if params.g < 0:
        raise NegativeCouplingError(f"g must be non-negative, got {params.g}")
    ratios = (
        params.g / params.omega,
        params.delta / params.omega,
        params.epsilon / params.omega,
    )
    if not all(math.isfinite(r) for r in ratios):
        raise NonFiniteInputError(f"Non-finite ratio in {ratios}")
    return params
