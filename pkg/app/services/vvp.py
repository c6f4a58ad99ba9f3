import math
from typing import Dict, List, Optional, Tuple

import numpy as np

from app.exceptions.solver import (
    IndexOrderError,
    ResonantDenominatorError,
    TruncationTooSmallError,
)
from app.helpers.environment import env
from app.helpers.specfun import displaced_fock_column, displaced_fock_overlap, laguerre
from app.models.base import Branch, Method
from app.models.params import ModelParams
from app.models.spectrum import SpectrumEntry, SpectrumTable
from app.models.state import StateVector
from app.models.vvp import LPolicy, VvpLevel
from app.services.logging import StandardLoggerService

logger = StandardLoggerService()

RESONANCE = 1e-9
TAIL_LIMIT = 1e-8


class VvpService:
    """
    Van Vleck perturbation spectrum of the biased Rabi model.

    The displaced states |-z> D(g/omega)|m> (energy m + epsilon/2 - g^2/omega)
    and |+z> D(-g/omega)|m + l> (energy m + l - epsilon/2 - g^2/omega) are mixed
    pairwise by the tunneling, with every other tunneling matrix element folded
    in at second order.

    The spectrum is even in epsilon, so the engine works with |epsilon| and
    maps eigenvectors back with sigma_x times the oscillator parity.
    """

    def __init__(
        self,
        params: ModelParams,
        k_cutoff: Optional[int] = None,
        printed_prefactor: bool = True,
    ):
        """
        Args:
            params (ModelParams): Validated physical parameters.
            k_cutoff (Optional[int]): Exclusive upper bound of the k-sums, VVP_K_CUTOFF by default.
            printed_prefactor (bool): Keep the extra delta^2 on the summed shifts
                inside the square root; False uses the prefactor-free form.
        """
        self.params = params
        self.scaled = params.dimensionless()
        self.alpha = self.scaled.g
        self.bias = abs(self.scaled.epsilon)
        self.flipped = params.epsilon < 0
        self.k_cutoff = k_cutoff or env().VVP_K_CUTOFF
        self.printed_prefactor = printed_prefactor

    def d_matrix_element(self, m: int, n: int) -> float:
        """
        D_mn = (delta/2) (-1)^m (2g)^(n-m) exp(-2g^2) sqrt(m!/n!) L_m^(n-m)(4g^2),
        with g measured in units of omega.

        Raises:
            IndexOrderError: If n < m.
        """
        if n < m:
            raise IndexOrderError(f"D_mn needs n >= m, got m={m}, n={n}")
        return self._d(m, n) * self.params.omega

    def vvp_eigenvalues(
        self, m: int, l: int, k_cutoff: Optional[int] = None  # noqa: E741
    ) -> Tuple[float, float]:
        """
        Energies (E_plus, E_minus) of the pair (|-z, m>, |+z, m + l>).

        Raises:
            TruncationTooSmallError: If k_cutoff <= m + l.
            ResonantDenominatorError: If an included second-order denominator vanishes.
        """
        center, gap, coupling = self._pair(m, l, k_cutoff or self.k_cutoff)
        radius = 0.5 * math.hypot(gap, 2.0 * coupling)
        omega = self.params.omega
        return (center + radius) * omega, (center - radius) * omega

    def unpaired_energy(self, p: int, k_cutoff: Optional[int] = None) -> float:
        """
        Second-order energy of |+z, p> for p < l, which has no -z partner.

        Raises:
            ResonantDenominatorError: If an included denominator vanishes.
        """
        k_cutoff = k_cutoff or self.k_cutoff
        shift = 0.0
        for k in range(k_cutoff):
            shift += self._d_any(p, k) ** 2 / self._denominator(
                self.bias + k - p, p, k
            )
        energy = p - self.alpha**2 - 0.5 * self.bias - shift
        return energy * self.params.omega

    def levels(self, n_pairs: int, l: int) -> List[VvpLevel]:  # noqa: E741
        """
        The l unpaired levels plus both branches of pairs m = 0..n_pairs-1.
        """
        k_cutoff = self._cutoff_for(n_pairs - 1 + l)
        levels = [
            VvpLevel(
                m=p,
                l=l,
                branch=Branch.MINUS,
                energy=self.unpaired_energy(p, k_cutoff),
                k_cutoff=k_cutoff,
                paired=False,
            )
            for p in range(l)
        ]
        for m in range(n_pairs):
            e_plus, e_minus = self.vvp_eigenvalues(m, l, k_cutoff)
            levels.append(
                VvpLevel(
                    m=m, l=l, branch=Branch.PLUS, energy=e_plus, k_cutoff=k_cutoff
                )
            )
            levels.append(
                VvpLevel(
                    m=m, l=l, branch=Branch.MINUS, energy=e_minus, k_cutoff=k_cutoff
                )
            )
        return levels

    def resolve_l(self, policy: LPolicy, n_levels: int = 8) -> int:
        """
        A single offset for the policy. The best policy keeps the candidate with
        the smallest worst-level deviation from exact diagonalization.
        """
        if policy.kind == "fixed":
            return policy.l
        if policy.kind == "nearest":
            return int(math.floor(self.bias + 0.5))
        deviations = self._candidate_deviations(policy, n_levels)
        return min(deviations, key=lambda l: (max(deviations[l][1]), l))

    def vvp_spectrum(
        self, n_levels: int, l_policy: Optional[LPolicy] = None
    ) -> SpectrumTable:
        """
        The n_levels lowest VVP levels, sorted ascending.

        Raises:
            ResonantDenominatorError: If the chosen offset hits a resonance, or
                every candidate of the best policy does.
        """
        policy = l_policy or LPolicy.fixed(0)
        if policy.kind != "best":
            l = self.resolve_l(policy)  # noqa: E741
            entries = self._entries(n_levels, l)
            metadata = {"l_policy": policy.describe(), "l": l}
            logger.info("VVP offset chosen", l_policy=policy.describe(), l=l)
        else:
            entries, assignment = self._best_entries(policy, n_levels)
            metadata = {"l_policy": "best", "l_assignment": assignment}
            logger.info("VVP offsets assigned per level", l_assignment=assignment)
        return SpectrumTable(
            method=Method.VVP,
            entries=entries,
            params=self.params,
            metadata=metadata,
        )

    def eigenvector(self, level: VvpLevel, truncation: int) -> StateVector:
        """
        Zeroth-order VVP state of a level in the undisplaced product basis.

        Raises:
            TruncationTooSmallError: If the displaced tails lose more than 1e-8 of the norm.
        """
        size = truncation + 1
        if level.n >= size:
            raise TruncationTooSmallError(
                f"Truncation {truncation} cannot hold Fock level {level.n}"
            )
        up = np.zeros(size)
        down = np.zeros(size)
        if not level.paired:
            up += displaced_fock_column(level.m, -self.alpha, size)
        else:
            _, gap, _ = self._pair(level.m, level.l, level.k_cutoff)
            coupling = self._tunneling_overlap(level.m, level.n)
            norm = math.hypot(gap, 2.0 * coupling)
            theta = (
                0.5 * math.pi
                if norm == 0.0
                else math.acos(min(1.0, max(-1.0, gap / norm)))
            )
            s = 1.0 if coupling >= 0 else -1.0
            half = 0.5 * theta
            if level.branch is Branch.PLUS:
                w_a, w_b = math.cos(half), s * math.sin(half)
            else:
                w_a, w_b = math.sin(half), -s * math.cos(half)
            down += w_a * displaced_fock_column(level.m, self.alpha, size)
            up += w_b * displaced_fock_column(level.n, -self.alpha, size)

        if self.flipped:
            parity = (-1.0) ** np.arange(size)
            up, down = parity * down, parity * up
        vector = StateVector.from_blocks(up, down)
        tail = 1.0 - vector.norm() ** 2
        if tail > TAIL_LIMIT:
            raise TruncationTooSmallError(
                f"Truncation {truncation} loses {tail:.3e} of the norm"
            )
        return vector.normalized()

    def _d(self, m: int, n: int) -> float:
        a = self.alpha
        ratio = 1.0
        for j in range(m + 1, n + 1):
            ratio *= 2.0 * a / math.sqrt(j)
        sign = -1.0 if m % 2 else 1.0
        return (
            0.5
            * self.scaled.delta
            * sign
            * ratio
            * self.scaled.eta
            * laguerre(m, n - m, 4.0 * a * a)
        )

    def _d_any(self, i: int, j: int) -> float:
        return self._d(min(i, j), max(i, j))

    def _tunneling_overlap(self, m: int, n: int) -> float:
        """<-z, D(g)m| H |+z, D(-g)n> = -(delta/2) <m|D(-2g)|n>."""
        return (
            -0.5
            * self.scaled.delta
            * displaced_fock_overlap(m, n, -2.0 * self.alpha)
        )

    def _denominator(self, value: float, level: int, k: int) -> float:
        if abs(value) < RESONANCE:
            raise ResonantDenominatorError(
                f"Resonant denominator for level {level}, k={k} at epsilon/omega={self.bias}"
            )
        return value

    def _pair(
        self, m: int, l: int, k_cutoff: int  # noqa: E741
    ) -> Tuple[float, float, float]:
        """(center, diagonal gap, coupling D_mn) of a pair, in units of omega."""
        n = m + l
        if k_cutoff <= n:
            raise TruncationTooSmallError(
                f"k_cutoff {k_cutoff} must exceed m + l = {n}"
            )
        sum_a = 0.0
        sum_b = 0.0
        for k in range(k_cutoff):
            if k != n:
                sum_a += self._d_any(m, k) ** 2 / self._denominator(
                    self.bias + m - k, m, k
                )
            if k != m:
                sum_b += self._d_any(n, k) ** 2 / self._denominator(
                    self.bias + k - n, n, k
                )
        prefactor = self.scaled.delta**2 if self.printed_prefactor else 1.0
        center = m + 0.5 * l - self.alpha**2 + 0.5 * (sum_a - sum_b)
        gap = self.bias - l + prefactor * (sum_a + sum_b)
        return center, gap, self._d(m, n)

    def _cutoff_for(self, top: int) -> int:
        if self.k_cutoff > top:
            return self.k_cutoff
        raised = top + 1 + self.k_cutoff
        logger.debug(
            "Raising VVP k cutoff", requested=self.k_cutoff, used=raised
        )
        return raised

    def _entries(self, n_levels: int, l: int) -> List[SpectrumEntry]:  # noqa: E741
        levels = self.levels(n_levels, l)
        entries = [
            SpectrumEntry(level_index=lv.m, branch=lv.branch, energy=lv.energy)
            for lv in levels
        ]
        return sorted(entries, key=lambda entry: entry.energy)[:n_levels]

    def _candidate_deviations(
        self, policy: LPolicy, n_levels: int
    ) -> Dict[int, Tuple[List[SpectrumEntry], List[float]]]:
        from app.services.exact import ExactService

        reference = ExactService(self.params).converge(n_levels).energies
        results = {}
        last_error = None
        for l in policy.candidates:  # noqa: E741
            try:
                entries = self._entries(n_levels, l)
            except ResonantDenominatorError as e:
                logger.info("Skipping resonant VVP offset", l=l, error=str(e))
                last_error = e
                continue
            deviations = [
                abs(entry.energy - ref) for entry, ref in zip(entries, reference)
            ]
            results[l] = (entries, deviations)
        if not results:
            raise last_error
        return results

    def _best_entries(
        self, policy: LPolicy, n_levels: int
    ) -> Tuple[List[SpectrumEntry], List[int]]:
        results = self._candidate_deviations(policy, n_levels)
        entries = []
        assignment = []
        for k in range(n_levels):
            l = min(results, key=lambda c: (results[c][1][k], c))  # noqa: E741
            entries.append(results[l][0][k])
            assignment.append(l)
        return entries, assignment
