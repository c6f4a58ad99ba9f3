import math
from typing import Optional, Sequence

import numpy as np

from app.exceptions.solver import IncompleteBasisError, TruncationTooSmallError
from app.helpers.environment import env
from app.models.base import Branch, Method, Qubit
from app.models.dynamics import TimeSeries
from app.models.params import ModelParams
from app.models.state import StateVector
from app.models.vvp import LPolicy
from app.services.bgrwa import BgrwaService
from app.services.exact import ExactService
from app.services.logging import StandardLoggerService
from app.services.vvp import VvpService

logger = StandardLoggerService()

INCOMPLETE = 1e-4
WARN_INCOMPLETE = 1e-6


def initial_state(truncation: int) -> StateVector:
    """
    |+z>|0>, the excited qubit next to the oscillator vacuum.

    Raises:
        TruncationTooSmallError: If truncation < 1.
    """
    if truncation < 1:
        raise TruncationTooSmallError(
            f"Truncation must be >= 1, got {truncation}"
        )
    coeffs = np.zeros(2 * (truncation + 1))
    coeffs[0] = 1.0
    return StateVector(coeffs=coeffs)


def sigma_z_expectation(state: StateVector) -> float:
    up = state.block(Qubit.UP)
    down = state.block(Qubit.DOWN)
    return float(np.sum(np.abs(up) ** 2) - np.sum(np.abs(down) ** 2))


def default_time_grid(
    t_max: Optional[float] = None, samples: Optional[int] = None
) -> np.ndarray:
    """Uniform grid on [0, t_max], t in units of 1/omega."""
    t_max = env().DYNAMICS_T_MAX if t_max is None else t_max
    samples = samples or env().DYNAMICS_SAMPLES
    return np.linspace(0.0, t_max, samples)


class DynamicsService:
    """
    Evolution of <sigma_z(t)> from |+z>|0> by spectral expansion,

        |phi(t)> = sum_j exp(-i E_j t) |Psi_j> <Psi_j|phi(0)>,

    over the analytic eigenstates of an approximation or the exact
    eigenvectors of the truncated Hamiltonian.
    """

    def __init__(self, params: ModelParams):
        self.params = params

    def default_truncation(self, n_modes: int) -> int:
        """Fock size that holds n_modes displaced levels with room for their tails."""
        ratio = self.params.coupling_ratio
        return n_modes + 40 + math.ceil(8.0 * ratio * ratio)

    def evolve_bgrwa(
        self,
        t_grid: Sequence[float],
        n_modes: Optional[int] = None,
        truncation: Optional[int] = None,
    ) -> TimeSeries:
        """
        Raises:
            IncompleteBasisError: If the eigenbasis captures less than 1 - 1e-4 of |phi(0)>.
        """
        n_modes = n_modes or env().DYNAMICS_N_MODES
        truncation = truncation or self.default_truncation(n_modes)
        service = BgrwaService(self.params)
        states = [service.ground_state()]
        for n in range(n_modes):
            states.append(service.eigenstate(n, Branch.PLUS))
            states.append(service.eigenstate(n, Branch.MINUS))
        vectors = np.column_stack(
            [service.lab_frame_vector(s, truncation).coeffs.real for s in states]
        )
        energies = np.array([s.energy for s in states])
        return self._evolve(Method.BGRWA, energies, vectors, t_grid, truncation)

    def evolve_vvp(
        self,
        t_grid: Sequence[float],
        n_modes: Optional[int] = None,
        truncation: Optional[int] = None,
        l_policy: Optional[LPolicy] = None,
    ) -> TimeSeries:
        """
        Raises:
            IncompleteBasisError: If the eigenbasis captures less than 1 - 1e-4 of |phi(0)>.
        """
        n_modes = n_modes or env().DYNAMICS_N_MODES
        service = VvpService(self.params)
        l = service.resolve_l(l_policy or LPolicy.fixed(0))  # noqa: E741
        truncation = truncation or self.default_truncation(n_modes + l)
        levels = service.levels(n_modes, l)
        vectors = np.column_stack(
            [service.eigenvector(lv, truncation).coeffs.real for lv in levels]
        )
        energies = np.array([lv.energy for lv in levels])
        return self._evolve(Method.VVP, energies, vectors, t_grid, truncation)

    def evolve_ed(
        self, t_grid: Sequence[float], truncation: Optional[int] = None
    ) -> TimeSeries:
        """
        Without a truncation, the levels the initial state reaches
        (2 n_modes + 1 of them) are converged first and the propagator is
        built on the converged basis, widened to default_truncation.

        Raises:
            NoConvergenceError: If those levels do not settle below the truncation limit.
        """
        exact = ExactService(self.params)
        if truncation is None:
            n_modes = env().DYNAMICS_N_MODES
            converged = exact.converge(2 * n_modes + 1)
            truncation = max(converged.n_used, self.default_truncation(n_modes))
            logger.debug("ED propagator truncation", truncation=truncation)
        result = exact.diagonalize(exact.build_hamiltonian(truncation))
        return self._evolve(
            Method.ED, result.energies, result.vectors, t_grid, truncation
        )

    def _evolve(
        self,
        method: Method,
        energies: np.ndarray,
        vectors: np.ndarray,
        t_grid: Sequence[float],
        truncation: int,
    ) -> TimeSeries:
        times = np.asarray(t_grid, dtype=float)
        weights = vectors[initial_state(truncation).index(Qubit.UP, 0), :]
        completeness = float(np.sum(weights**2))
        deficit = 1.0 - completeness
        if deficit > INCOMPLETE:
            raise IncompleteBasisError(
                f"{method.value} eigenbasis captures {completeness:.6f} of the initial state"
            )
        if deficit > WARN_INCOMPLETE:
            logger.warning(
                "Incomplete eigenbasis for dynamics",
                method=method.value,
                completeness=completeness,
            )

        phases = np.exp(-1j * np.outer(times, energies / self.params.omega))
        states = (phases * weights) @ vectors.T
        size = truncation + 1
        up = np.sum(np.abs(states[:, :size]) ** 2, axis=1)
        down = np.sum(np.abs(states[:, size:]) ** 2, axis=1)
        norms = up + down
        sigma_z = (up - down) / norms
        return TimeSeries(
            method=method,
            times=times,
            sigma_z=sigma_z,
            params=self.params,
            truncation=truncation,
            completeness=min(completeness, 1.0 + 1e-8),
            norm_drift=float(np.max(np.abs(norms - completeness))),
        )
