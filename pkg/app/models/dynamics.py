import numpy as np
from pydantic import Field, field_validator, model_validator

from .base import Method, ValueModel
from .params import ModelParams


class TimeSeries(ValueModel):
    """
    <sigma_z(t)> sampled on a time grid, with t in units of 1/omega.

    Attributes:
        method (Method): Engine whose eigenbasis drove the evolution.
        times (np.ndarray): Strictly increasing sample times.
        sigma_z (np.ndarray): Expectation value per sample.
        params (ModelParams): Parameters of the evolution.
        truncation (int): Fock truncation of the lab-frame basis.
        completeness (float): Total weight of the initial state captured by the eigenbasis.
        norm_drift (float): Largest departure of the squared norm from completeness over the grid.
    """

    method: Method
    times: np.ndarray
    sigma_z: np.ndarray
    params: ModelParams
    truncation: int = Field(ge=1)
    completeness: float
    norm_drift: float = Field(default=0.0, ge=0.0)

    @field_validator("times", "sigma_z", mode="before")
    def check_samples(cls, value):
        samples = np.array(value, dtype=float).reshape(-1)
        samples.setflags(write=False)
        return samples

    @field_validator("times")
    def check_times(cls, value):
        if np.any(np.diff(value) <= 0):
            raise ValueError("times must be strictly increasing")
        return value

    @field_validator("sigma_z")
    def check_sigma_z(cls, value):
        if np.any(np.abs(value) > 1.0 + 1e-9):
            raise ValueError("|sigma_z| must not exceed 1")
        return value

    @field_validator("completeness")
    def check_completeness(cls, value):
        if not 0.0 <= value <= 1.0 + 1e-8:
            raise ValueError("completeness must lie in [0, 1]")
        return value

    @model_validator(mode="after")
    def check_lengths(self):
        if self.times.size != self.sigma_z.size:
            raise ValueError("one sigma_z value per time sample is required")
        return self
