import math
from typing import Tuple

import numpy as np

from app.exceptions.solver import DegenerateNormError, TruncationTooSmallError
from app.helpers.specfun import displaced_fock_column, laguerre
from app.models.base import Branch, Method
from app.models.bgrwa import BgrwaCoefficients, BgrwaEigenstate
from app.models.params import ModelParams
from app.models.spectrum import SpectrumEntry, SpectrumTable
from app.models.state import StateVector
from app.services.logging import StandardLoggerService

logger = StandardLoggerService()

TAIL_LIMIT = 1e-8


class BgrwaService:
    """
    Closed-form spectrum and eigenstates of the biased generalized
    rotating-wave approximation.

    After the polaron transform the qubit is rotated into the eigenbasis
    {|e'>, |g'>} of -(epsilon sigma_z + delta eta sigma_x)/2 and only the
    one-excitation terms are kept, which leaves independent 2x2 blocks on
    {|e', n>, |g', n+1>} plus the isolated ground state |g', 0>.

    All arithmetic runs on the dimensionless parameters (omega = 1); energies
    are multiplied by omega before they leave the service.
    """

    def __init__(self, params: ModelParams):
        """
        Args:
            params (ModelParams): Validated physical parameters.
        """
        self.params = params
        self.scaled = params.dimensionless()
        self.alpha = self.scaled.g
        self.x = 4.0 * self.alpha * self.alpha

    def g0_coefficient(self, n: int) -> float:
        """G0(n) = <n|cosh[2g/omega (a^dag - a)]|n> = exp(-2g^2/omega^2) L_n(4g^2/omega^2)."""
        return self.scaled.eta * laguerre(n, 0, self.x)

    def f1_coefficient(self, n: int) -> float:
        """F1(n) = <n+1|sinh[2g/omega (a^dag - a)]|n> / sqrt(n+1)."""
        return (
            2.0
            * self.alpha
            / (n + 1)
            * self.scaled.eta
            * laguerre(n, 1, self.x)
        )

    def coefficients(self) -> BgrwaCoefficients:
        """
        Raises:
            DegenerateNormError: If epsilon = delta = 0.
        """
        y = self._y()
        ratio = self.scaled.epsilon / y
        return BgrwaCoefficients(
            eta=self.scaled.eta,
            y=y,
            u=math.sqrt(max(0.0, 0.5 * (1.0 - ratio))),
            v=math.sqrt(max(0.0, 0.5 * (1.0 + ratio))),
            tunneling_sign=1 if self.scaled.delta >= 0 else -1,
        )

    def renormalized_bias(self, n: int) -> float:
        """eps(n) = (epsilon^2 + delta^2 eta G0(n)) / (2 sqrt(epsilon^2 + delta^2 eta^2))."""
        return self._bias(n) * self.params.omega

    def effective_coupling(self, n: int) -> float:
        """R_r(n) = delta F1(n) / 2."""
        return 0.5 * self.params.delta * self.f1_coefficient(n)

    def block(self, n: int) -> np.ndarray:
        """
        The 2x2 block on (|e', n>, |g', n+1>). The lower diagonal carries
        eps(n+1), the renormalized bias of the state it acts on.
        """
        return self._block(n) * self.params.omega

    def eigenvalues(self, n: int) -> Tuple[float, float]:
        """
        Eigenvalues (E_plus, E_minus) of block n. The result is checked
        against the printed closed form and a mismatch is logged.

        Raises:
            DegenerateNormError: If epsilon = delta = 0.
        """
        d1, d2, b = self._block_entries(n)
        center = 0.5 * (d1 + d2)
        radius = 0.5 * math.hypot(d1 - d2, 2.0 * b)
        e_plus, e_minus = center + radius, center - radius

        c_plus, c_minus = self._closed_form(n)
        mismatch = max(abs(e_plus - c_plus), abs(e_minus - c_minus))
        if mismatch > 1e-9 * max(1.0, abs(e_plus), abs(e_minus)):
            logger.warning(
                "Closed-form eigenvalues disagree with block diagonalization",
                n=n,
                mismatch=mismatch,
                params=self.params.model_dump(),
            )
        omega = self.params.omega
        return e_plus * omega, e_minus * omega

    def closed_form_eigenvalues(self, n: int) -> Tuple[float, float]:
        """Eigenvalues evaluated term by term from the printed closed form."""
        c_plus, c_minus = self._closed_form(n)
        return c_plus * self.params.omega, c_minus * self.params.omega

    def ground_energy(self) -> float:
        """E_g = -sqrt(epsilon^2 + delta^2 eta^2)/2 - g^2/omega."""
        return (
            -0.5 * self.scaled.y - self.alpha * self.alpha
        ) * self.params.omega

    def ground_state(self) -> BgrwaEigenstate:
        return BgrwaEigenstate(
            n=0, branch=Branch.GROUND, energy=self.ground_energy()
        )

    def eigenstate(self, n: int, branch: Branch) -> BgrwaEigenstate:
        """
        Mixing angle theta = arccos(delta / sqrt(delta^2 + 4 R_r^2 (n+1))) of pair n,
        with delta = eps(n) + eps(n+1) - omega. At an exact degeneracy with zero
        coupling theta is pi/2, the limit of vanishing coupling.

        Raises:
            DegenerateNormError: If epsilon = delta = 0.
        """
        if branch is Branch.GROUND:
            return self.ground_state()
        d1, d2, b = self._block_entries(n)
        gap = d1 - d2
        norm = math.hypot(gap, 2.0 * b)
        if norm == 0.0:
            theta = 0.5 * math.pi
        else:
            theta = math.acos(min(1.0, max(-1.0, gap / norm)))
        e_plus, e_minus = self.eigenvalues(n)
        return BgrwaEigenstate(
            n=n,
            branch=branch,
            theta=theta,
            delta_gap=gap * self.params.omega,
            coupling_sign=1 if b >= 0 else -1,
            energy=e_plus if branch is Branch.PLUS else e_minus,
        )

    def spectrum(self, n_max: int) -> SpectrumTable:
        """
        Ground level plus the (plus, minus) pair of every block n = 0..n_max.
        """
        entries = [
            SpectrumEntry(
                level_index=0, branch=Branch.GROUND, energy=self.ground_energy()
            )
        ]
        for n in range(n_max + 1):
            e_plus, e_minus = self.eigenvalues(n)
            entries.append(
                SpectrumEntry(level_index=n, branch=Branch.PLUS, energy=e_plus)
            )
            entries.append(
                SpectrumEntry(
                    level_index=n, branch=Branch.MINUS, energy=e_minus
                )
            )
        return SpectrumTable(
            method=Method.BGRWA, entries=entries, params=self.params
        )

    def lab_frame_vector(
        self, state: BgrwaEigenstate, truncation: int
    ) -> StateVector:
        """
        Expand an analytic eigenstate in the undisplaced product basis.

        A polaron-frame component |+z>|phi> maps to |+z> D(-g/omega)|phi> and
        |-z>|phi> to |-z> D(g/omega)|phi>; the dressed qubit states are
        |e'> = u|+z> - v|-z> and |g'> = v|+z> + u|-z>.

        Raises:
            TruncationTooSmallError: If the displaced tails lose more than 1e-8 of the norm.
        """
        size = truncation + 1
        top = state.n + 1 if state.branch is not Branch.GROUND else 0
        if top >= size:
            raise TruncationTooSmallError(
                f"Truncation {truncation} cannot hold Fock level {top}"
            )
        coeffs = self.coefficients()
        u, v = coeffs.signed_u, coeffs.v

        up_poly = np.zeros(size)
        down_poly = np.zeros(size)
        if state.branch is Branch.GROUND:
            up_poly[0], down_poly[0] = v, u
        else:
            w_e, w_g = state.pair_weights()
            up_poly[state.n] += u * w_e
            down_poly[state.n] -= v * w_e
            up_poly[state.n + 1] += v * w_g
            down_poly[state.n + 1] += u * w_g

        up = self._displace(up_poly, -self.alpha)
        down = self._displace(down_poly, self.alpha)
        vector = StateVector.from_blocks(up, down)
        tail = 1.0 - vector.norm() ** 2
        if tail > TAIL_LIMIT:
            raise TruncationTooSmallError(
                f"Truncation {truncation} loses {tail:.3e} of the norm"
            )
        return vector.normalized()

    def _displace(self, amplitudes: np.ndarray, alpha: float) -> np.ndarray:
        size = amplitudes.size
        out = np.zeros(size)
        for k in np.flatnonzero(amplitudes):
            out += amplitudes[k] * displaced_fock_column(int(k), alpha, size)
        return out

    def _y(self) -> float:
        y = self.scaled.y
        if y == 0.0:
            raise DegenerateNormError(
                "epsilon = delta = 0 leaves the renormalized bias undefined"
            )
        return y

    def _bias(self, n: int) -> float:
        eps, delta = self.scaled.epsilon, self.scaled.delta
        return (eps * eps + delta * delta * self.scaled.eta * self.g0_coefficient(n)) / (
            2.0 * self._y()
        )

    def _block_entries(self, n: int) -> Tuple[float, float, float]:
        shift = self.alpha * self.alpha
        d1 = n - shift + self._bias(n)
        d2 = n + 1 - shift - self._bias(n + 1)
        b = 0.5 * self.scaled.delta * self.f1_coefficient(n) * math.sqrt(n + 1)
        return d1, d2, b

    def _block(self, n: int) -> np.ndarray:
        d1, d2, b = self._block_entries(n)
        return np.array([[d1, b], [b, d2]])

    def _closed_form(self, n: int) -> Tuple[float, float]:
        eps, delta, eta = self.scaled.epsilon, self.scaled.delta, self.scaled.eta
        y = self._y()
        l_n = laguerre(n, 0, self.x)
        l_next = laguerre(n + 1, 0, self.x)
        l_one = laguerre(n, 1, self.x)
        center = (
            n
            + 0.5
            - self.alpha**2
            + delta**2 * eta / (4.0 * y) * eta * (l_n - l_next)
        )
        bracket = 0.5 - (2.0 * eps**2 + delta**2 * eta * eta * (l_n + l_next)) / (
            4.0 * y
        )
        radius = math.sqrt(
            bracket**2 + self.alpha**2 * delta**2 * eta**2 * l_one**2 / (n + 1)
        )
        return center + radius, center - radius
