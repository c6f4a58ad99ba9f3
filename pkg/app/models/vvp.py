import math
from typing import Literal, Tuple

from pydantic import Field, field_validator

from .base import Branch, ValueModel


class VvpLevel(ValueModel):
    """
    Second-order Van Vleck level.

    Paired levels mix |-z, m> with |+z, n = m + l>; an unpaired level is one
    of the l lowest +z states that has no partner and carries branch minus.

    Attributes:
        m (int): Oscillator index of the -z member (the +z index when unpaired).
        l (int): Mixing offset, n = m + l.
        branch (Branch): plus or minus.
        energy (float): Level energy in the units of the parameters.
        k_cutoff (int): Upper bound (exclusive) of the second-order k-sums.
        paired (bool): False for the unpaired +z states below the first partner.
    """

    m: int = Field(ge=0)
    l: int = Field(ge=0)  # noqa: E741
    branch: Branch
    energy: float
    k_cutoff: int = Field(gt=0)
    paired: bool = True

    @field_validator("branch")
    def check_branch(cls, value):
        if value is Branch.GROUND:
            raise ValueError("VVP levels are plus or minus")
        return value

    @field_validator("energy")
    def check_energy(cls, value):
        if not math.isfinite(value):
            raise ValueError("energy must be finite")
        return value

    @property
    def n(self) -> int:
        return self.m + self.l


class LPolicy(ValueModel):
    """
    How the mixing offset l is chosen.

    Attributes:
        kind (str): "fixed" uses `l`; "nearest" uses round(|epsilon|/omega);
            "best" tries every value in `candidates` and keeps, level by level,
            the one closest to exact diagonalization.
        l (int): Offset used by the fixed policy.
        candidates (Tuple[int, ...]): Offsets tried by the best policy.
    """

    kind: Literal["fixed", "nearest", "best"] = "fixed"
    l: int = Field(default=0, ge=0)  # noqa: E741
    candidates: Tuple[int, ...] = (0, 1, 2)

    @field_validator("candidates")
    def check_candidates(cls, value):
        if not value or any(c < 0 for c in value):
            raise ValueError("candidates must be a non-empty set of offsets >= 0")
        return tuple(sorted(set(value)))

    @classmethod
    def fixed(cls, l: int) -> "LPolicy":  # noqa: E741
        return cls(kind="fixed", l=l)

    @classmethod
    def nearest(cls) -> "LPolicy":
        return cls(kind="nearest")

    @classmethod
    def best(cls, candidates: Tuple[int, ...] = (0, 1, 2)) -> "LPolicy":
        return cls(kind="best", candidates=candidates)

    @classmethod
    def parse(cls, text) -> "LPolicy":
        """
        Parse the command-line form: an integer, "nearest" or "best".
        """
        token = str(text).strip().lower()
        if token == "nearest":
            return cls.nearest()
        if token == "best":
            return cls.best()
        try:
            return cls.fixed(int(token))
        except ValueError:
            raise ValueError(
                f"l policy must be an integer, 'nearest' or 'best', got {text!r}"
            ) from None

    def describe(self) -> str:
        if self.kind == "fixed":
            return str(self.l)
        return self.kind
