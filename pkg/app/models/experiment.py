import math
from typing import List, Optional, Tuple

from pydantic import Field, field_validator
from scipy.constants import e as ELEMENTARY_CHARGE

from .base import Method, ValueModel
from .params import ModelParams

NANOAMPERE = 1e-9
GIGAHERTZ = 1e9


def bias_from_flux(i_p: float, flux_ratio: float) -> float:
    """
    Bias epsilon = 2 I_p Phi_0 (Phi/Phi_0 - 1/2) in GHz, with the flux quantum
    Phi_0 = h/2e. Dividing the energy by h leaves I_p (f - 1/2) / e.

    Args:
        i_p (float): Persistent current in nA.
        flux_ratio (float): Applied flux in units of Phi_0.
    """
    return i_p * NANOAMPERE * (flux_ratio - 0.5) / ELEMENTARY_CHARGE / GIGAHERTZ


class FluxQubitParams(ValueModel):
    """
    Circuit parameters of a flux qubit coupled to an LC oscillator. All
    frequencies are linear frequencies in GHz.

    Attributes:
        g (float): Coupling g/2pi.
        omega (float): Oscillator frequency omega/2pi.
        delta (float): Qubit tunneling splitting.
        i_p (float): Persistent current in nA.
        flux_grid (Tuple[float, ...]): Flux points in units of Phi_0.
    """

    g: float = Field(default=0.82, gt=0.0)
    omega: float = Field(default=8.13, gt=0.0)
    delta: float = Field(default=4.25, gt=0.0)
    i_p: float = Field(default=510.0, gt=0.0)
    flux_grid: Tuple[float, ...] = ()

    @field_validator("g", "omega", "delta", "i_p")
    def check_finite(cls, value):
        if not math.isfinite(value):
            raise ValueError("circuit parameters must be finite")
        return value

    @field_validator("flux_grid")
    def check_grid(cls, value):
        if not all(math.isfinite(f) for f in value):
            raise ValueError("flux points must be finite")
        return tuple(value)

    def bias(self, flux_ratio: float) -> float:
        return bias_from_flux(self.i_p, flux_ratio)

    def to_model_params(self, flux_ratio: float) -> ModelParams:
        return ModelParams(
            delta=self.delta,
            epsilon=self.bias(flux_ratio),
            omega=self.omega,
            g=self.g,
        )


class FluxScanRow(ValueModel):
    """
    Attributes:
        flux_ratio (float): Flux point in units of Phi_0.
        epsilon (float): Bias at that point, GHz.
        transitions (List[float]): E_k - E_g in GHz, ascending.
        deviations (Optional[List[float]]): BGRWA minus ED transitions, GHz, when ED is the engine.
    """

    flux_ratio: float
    epsilon: float
    transitions: List[float]
    deviations: Optional[List[float]] = None

    @field_validator("transitions")
    def check_transitions(cls, value):
        if any(t < -1e-12 for t in value):
            raise ValueError("transitions must be non-negative")
        if any(b < a for a, b in zip(value, value[1:])):
            raise ValueError("transitions must be ascending")
        return value


class FluxScan(ValueModel):
    method: Method
    circuit: FluxQubitParams
    rows: List[FluxScanRow]
