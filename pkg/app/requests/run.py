import math
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.exceptions.config import InvalidRunConfigError
from app.helpers.environment import env
from app.models.base import Method
from app.models.vvp import LPolicy


class SweepSpec(BaseModel):
    """
    Inclusive grid `start:stop:step`; a bare number is a single point.

    Attributes:
        start (float): First value.
        stop (float): Upper bound; grid points beyond it are dropped.
        step (float): Spacing, strictly positive.
    """

    model_config = ConfigDict(frozen=True)

    start: float
    stop: float
    step: float = 1.0

    @field_validator("start", "stop", "step")
    def check_finite(cls, value):
        if not math.isfinite(value):
            raise ValueError("sweep bounds must be finite")
        return value

    @field_validator("step")
    def check_step(cls, value):
        if value <= 0:
            raise ValueError("sweep step must be positive")
        return value

    @model_validator(mode="after")
    def check_order(self):
        if self.start > self.stop:
            raise ValueError("sweep start must not exceed stop")
        return self

    @classmethod
    def parse(cls, text) -> "SweepSpec":
        if isinstance(text, SweepSpec):
            return text
        if isinstance(text, (int, float)):
            return cls(start=text, stop=text)
        parts = str(text).strip().split(":")
        try:
            numbers = [float(part) for part in parts]
        except ValueError:
            raise ValueError(f"invalid sweep {text!r}") from None
        if len(numbers) == 1:
            return cls(start=numbers[0], stop=numbers[0])
        if len(numbers) == 3:
            return cls(start=numbers[0], stop=numbers[1], step=numbers[2])
        raise ValueError(f"sweep must be 'start:stop:step' or a number, got {text!r}")

    def values(self) -> List[float]:
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return [round(self.start + i * self.step, 12) for i in range(count)]

    def __str__(self) -> str:
        return f"{self.start:.12g}:{self.stop:.12g}:{self.step:.12g}"


FORMATS = ("csv", "json")


class RunConfig(BaseModel):
    """
    Validated configuration of one command-line run.

    Attributes:
        command (str): spectrum, compare, dynamics or flux-scan.
        delta (float): Tunneling amplitude.
        epsilon (float): Bias.
        omega (float): Oscillator frequency.
        g (SweepSpec): Coupling grid.
        methods (List[Method]): Engines evaluated per point.
        levels (int): Number of sorted levels (or flux transitions) reported.
        truncation (Optional[int]): Fixed Fock truncation; ED converges on its own when unset.
        tol (float): ED convergence tolerance.
        tmax (float): End of the time grid, units of 1/omega.
        samples (int): Number of time samples.
        n_modes (int): Pair levels in the dynamics expansion.
        ip (float): Persistent current, nA.
        flux (SweepSpec): Flux grid in units of Phi_0.
        method (Method): Engine of the flux scan.
        vvp_l (LPolicy): Choice of the VVP mixing offset.
        out (str): Output path, "-" for stdout.
        format (str): csv or json.
        jobs (int): Sweep worker count.
    """

    model_config = ConfigDict(frozen=True)

    command: Literal["spectrum", "compare", "dynamics", "flux-scan"]
    delta: float = 1.0
    epsilon: float = 0.0
    omega: float = 1.0
    g: SweepSpec = SweepSpec(start=0.0, stop=0.0)
    methods: List[Method] = [Method.BGRWA, Method.ED]
    levels: int = Field(default=8, ge=1)
    truncation: Optional[int] = Field(default=None, ge=1)
    tol: float = Field(default_factory=lambda: env().ED_TOLERANCE, gt=0)
    tmax: float = Field(default_factory=lambda: env().DYNAMICS_T_MAX, ge=0)
    samples: int = Field(default_factory=lambda: env().DYNAMICS_SAMPLES, ge=1)
    n_modes: int = Field(default_factory=lambda: env().DYNAMICS_N_MODES, ge=1)
    ip: float = Field(default=510.0, gt=0)
    flux: SweepSpec = SweepSpec(start=0.495, stop=0.505, step=0.0001)
    method: Method = Method.BGRWA
    vvp_l: LPolicy = LPolicy.fixed(0)
    out: str = "-"
    format: Literal["csv", "json"] = "csv"
    jobs: int = Field(default_factory=lambda: env().SWEEP_JOBS, ge=1)

    @field_validator("g", "flux", mode="before")
    def check_sweep(cls, value):
        return SweepSpec.parse(value)

    @field_validator("methods", mode="before")
    def check_methods(cls, value):
        if isinstance(value, str):
            value = [part.strip() for part in value.split(",") if part.strip()]
        if not value:
            raise ValueError("at least one method is required")
        methods = []
        for item in value:
            method = Method(str(getattr(item, "value", item)).lower())
            if method not in methods:
                methods.append(method)
        return methods

    @field_validator("method", mode="before")
    def check_method(cls, value):
        return str(getattr(value, "value", value)).lower()

    @field_validator("vvp_l", mode="before")
    def check_vvp_l(cls, value):
        if isinstance(value, LPolicy):
            return value
        return LPolicy.parse(value)

    @field_validator("format", mode="before")
    def check_format(cls, value):
        return str(value).strip().lower()

    @field_validator("delta", "epsilon", "omega", "ip")
    def check_finite(cls, value):
        if not math.isfinite(value):
            raise ValueError("parameters must be finite")
        return value

    @field_validator("omega")
    def check_omega(cls, value):
        if value <= 0:
            raise ValueError("omega must be positive")
        return value

    @model_validator(mode="after")
    def check_command(self):
        if self.g.start < 0:
            raise ValueError("coupling g must be non-negative")
        if self.command == "compare" and Method.ED not in self.methods:
            raise ValueError("compare needs the ed method as reference")
        if self.command == "flux-scan" and len(self.g.values()) > 1:
            raise ValueError("flux-scan takes a single coupling g")
        return self

    @classmethod
    def from_sources(
        cls,
        command: str,
        flags: Dict[str, Any],
        config_path: Optional[str] = None,
        defaults: Optional[Dict[str, Any]] = None,
    ) -> "RunConfig":
        """
        Merge command defaults, a `key = value` config file and explicit flags,
        later sources winning.

        Raises:
            InvalidRunConfigError: If the config file is missing or names unknown keys.
            pydantic.ValidationError: If the merged values are invalid.
        """
        values: Dict[str, Any] = dict(defaults or {})
        if config_path:
            values.update(read_config_file(config_path))
        values.update({k: v for k, v in flags.items() if v is not None})
        values["command"] = command
        return cls(**values)

    def echo(self) -> Dict[str, Any]:
        """Config as plain values, used in output headers and logs."""
        data = self.model_dump(mode="json", exclude={"out", "jobs"})
        data["g"] = str(self.g)
        data["flux"] = str(self.flux)
        data["vvp_l"] = self.vvp_l.describe()
        return data


def read_config_file(path: str) -> Dict[str, Any]:
    """
    Raises:
        InvalidRunConfigError: If the file does not exist or names unknown keys.
    """
    if not Path(path).is_file():
        raise InvalidRunConfigError(f"Config file {path} not found")
    known = set(RunConfig.model_fields) - {"command"}
    values = {}
    for key, value in dotenv_values(path).items():
        name = key.strip().lower().replace("-", "_")
        if name not in known:
            raise InvalidRunConfigError(f"Unknown config key {key!r} in {path}")
        values[name] = value
    return values
