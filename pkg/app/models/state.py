import numpy as np
from pydantic import field_validator

from .base import Qubit, ValueModel


class StateVector(ValueModel):
    """
    Complex coefficients over the product basis {+z, -z} x {Fock 0..N}.

    The first N+1 entries are the +z block, the next N+1 the -z block.

    Attributes:
        coeffs (np.ndarray): Complex coefficient vector of length 2(N+1).
    """

    coeffs: np.ndarray

    @field_validator("coeffs", mode="before")
    def check_coeffs(cls, value):
        coeffs = np.array(value, dtype=complex).reshape(-1)
        if coeffs.size < 2 or coeffs.size % 2:
            raise ValueError("coeffs must have even length 2(N+1)")
        coeffs.setflags(write=False)
        return coeffs

    @classmethod
    def from_blocks(cls, up: np.ndarray, down: np.ndarray) -> "StateVector":
        return cls(coeffs=np.concatenate([up, down]))

    @property
    def truncation(self) -> int:
        return self.coeffs.size // 2 - 1

    def index(self, qubit: Qubit, n: int) -> int:
        return int(qubit) * (self.truncation + 1) + n

    def amplitude(self, qubit: Qubit, n: int) -> complex:
        return complex(self.coeffs[self.index(qubit, n)])

    def block(self, qubit: Qubit) -> np.ndarray:
        size = self.truncation + 1
        return self.coeffs[int(qubit) * size : (int(qubit) + 1) * size]

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def normalized(self) -> "StateVector":
        norm = self.norm()
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return StateVector(coeffs=self.coeffs / norm)

    def overlap(self, other: "StateVector") -> complex:
        """<self|other>"""
        return complex(np.vdot(self.coeffs, other.coeffs))
