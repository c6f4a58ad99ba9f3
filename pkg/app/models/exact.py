from typing import Optional

import numpy as np
from pydantic import Field, field_validator, model_validator

from .base import ValueModel
from .params import ModelParams


class TruncatedHamiltonian(ValueModel):
    """
    Dense matrix of the Hamiltonian on {+z, -z} x {Fock 0..N}, ordered with
    basis index q (N + 1) + n where q = 0 for +z.

    Attributes:
        truncation (int): Highest Fock level N.
        matrix (np.ndarray): Real symmetric matrix of size 2(N+1).
        params (ModelParams): Parameters the matrix was built from.
    """

    truncation: int = Field(ge=0)
    matrix: np.ndarray
    params: ModelParams

    @field_validator("matrix", mode="before")
    def check_matrix(cls, value):
        matrix = np.array(value, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("matrix must be square")
        if not np.array_equal(matrix, matrix.T):
            raise ValueError("matrix must be symmetric")
        matrix.setflags(write=False)
        return matrix

    @model_validator(mode="after")
    def check_size(self):
        if self.matrix.shape[0] != 2 * (self.truncation + 1):
            raise ValueError("matrix size must be 2(N+1)")
        return self

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


class EdResult(ValueModel):
    """
    Lowest eigenpairs of a truncated Hamiltonian.

    Attributes:
        energies (np.ndarray): Ascending eigenvalues.
        vectors (np.ndarray): Orthonormal eigenvectors as columns.
        n_used (int): Fock truncation the pairs come from.
        converged (bool): True only when a doubled truncation confirmed the levels.
        tail_estimate (Optional[float]): Largest level shift seen at the doubling check.
    """

    energies: np.ndarray
    vectors: np.ndarray
    n_used: int = Field(ge=0)
    converged: bool = False
    tail_estimate: Optional[float] = None

    @field_validator("energies", mode="before")
    def check_energies(cls, value):
        energies = np.array(value, dtype=float).reshape(-1)
        if np.any(np.diff(energies) < 0):
            raise ValueError("energies must be ascending")
        energies.setflags(write=False)
        return energies

    @model_validator(mode="after")
    def check_vectors(self):
        if self.vectors.ndim != 2 or self.vectors.shape[1] != self.energies.size:
            raise ValueError("one eigenvector column per energy is required")
        return self
