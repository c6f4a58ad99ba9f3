import math
from typing import Optional

import numpy as np
from scipy.linalg import LinAlgError, eigh

from app.exceptions.solver import (
    EigensolverFailureError,
    NoConvergenceError,
    TruncationTooSmallError,
)
from app.helpers.environment import env
from app.models.base import Method
from app.models.exact import EdResult, TruncatedHamiltonian
from app.models.params import ModelParams
from app.models.spectrum import SpectrumEntry, SpectrumTable
from app.services.logging import StandardLoggerService

logger = StandardLoggerService()


class ExactService:
    """
    Exact diagonalization of the biased Rabi Hamiltonian in a truncated Fock
    basis. Every other engine is judged against this one.
    """

    def __init__(
        self,
        params: ModelParams,
        tolerance: Optional[float] = None,
        max_truncation: Optional[int] = None,
    ):
        """
        Args:
            params (ModelParams): Validated physical parameters.
            tolerance (Optional[float]): Level shift accepted by `converge`, ED_TOLERANCE by default.
            max_truncation (Optional[int]): Largest truncation `converge` may reach, ED_MAX_TRUNCATION by default.
        """
        self.params = params
        self.tolerance = tolerance or env().ED_TOLERANCE
        self.max_truncation = max_truncation or env().ED_MAX_TRUNCATION

    def build_hamiltonian(self, truncation: int) -> TruncatedHamiltonian:
        """
        Raises:
            TruncationTooSmallError: If truncation < 1.
        """
        if truncation < 1:
            raise TruncationTooSmallError(
                f"Truncation must be >= 1, got {truncation}"
            )
        p = self.params
        size = truncation + 1
        ladder = np.arange(size, dtype=float)
        hops = p.g * np.sqrt(np.arange(1, size, dtype=float))

        matrix = np.zeros((2 * size, 2 * size))
        for q, sign in ((0, 1.0), (1, -1.0)):
            block = slice(q * size, (q + 1) * size)
            matrix[block, block] = (
                np.diag(p.omega * ladder - 0.5 * sign * p.epsilon)
                + np.diag(sign * hops, 1)
                + np.diag(sign * hops, -1)
            )
        tunneling = -0.5 * p.delta * np.eye(size)
        matrix[:size, size:] = tunneling
        matrix[size:, :size] = tunneling
        return TruncatedHamiltonian(
            truncation=truncation, matrix=matrix, params=p
        )

    def diagonalize(
        self, hamiltonian: TruncatedHamiltonian, n_levels: Optional[int] = None
    ) -> EdResult:
        """
        Lowest n_levels eigenpairs (all of them when n_levels is None).

        Raises:
            TruncationTooSmallError: If n_levels exceeds the basis size.
            EigensolverFailureError: If the dense eigensolver does not converge.
        """
        size = hamiltonian.size
        n_levels = size if n_levels is None else n_levels
        if n_levels > size:
            raise TruncationTooSmallError(
                f"{n_levels} levels requested from a basis of {size}"
            )
        try:
            energies, vectors = eigh(
                hamiltonian.matrix, subset_by_index=[0, n_levels - 1]
            )
        except LinAlgError as e:
            raise EigensolverFailureError(str(e)) from e
        return EdResult(
            energies=energies,
            vectors=vectors,
            n_used=hamiltonian.truncation,
        )

    def starting_truncation(self, n_levels: int = 1) -> int:
        ratio = self.params.coupling_ratio
        return max(20, math.ceil(8.0 * ratio * ratio + 10.0), n_levels)

    def converge(
        self, n_levels: int, tol: Optional[float] = None
    ) -> EdResult:
        """
        Double the truncation until the lowest n_levels move by less than tol.

        The coarse result of the accepted doubling is returned, with the shift
        to the doubled basis as its tail estimate.

        Raises:
            NoConvergenceError: If the doubled truncation would exceed the limit.
        """
        tol = tol or self.tolerance
        truncation = self.starting_truncation(n_levels)
        coarse = self.diagonalize(self.build_hamiltonian(truncation), n_levels)
        while True:
            doubled = 2 * truncation
            if doubled > self.max_truncation:
                raise NoConvergenceError(
                    f"Levels not stable to {tol} below truncation {self.max_truncation}"
                )
            fine = self.diagonalize(self.build_hamiltonian(doubled), n_levels)
            shift = float(np.max(np.abs(fine.energies - coarse.energies)))
            logger.debug(
                "ED convergence step",
                truncation=truncation,
                shift=shift,
                tolerance=tol,
            )
            if shift < tol:
                return coarse.model_copy(
                    update={"converged": True, "tail_estimate": shift}
                )
            truncation, coarse = doubled, fine

    def spectrum(self, result: EdResult) -> SpectrumTable:
        entries = [
            SpectrumEntry(level_index=i, energy=float(energy))
            for i, energy in enumerate(result.energies)
        ]
        return SpectrumTable(
            method=Method.ED,
            entries=entries,
            params=self.params,
            truncation=result.n_used,
            metadata={
                "converged": result.converged,
                "tail_estimate": result.tail_estimate,
            },
        )
