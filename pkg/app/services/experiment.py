from typing import List, Optional

from app.models.base import Method
from app.models.experiment import FluxQubitParams, FluxScan, FluxScanRow
from app.models.params import ModelParams
from app.models.vvp import LPolicy
from app.services.bgrwa import BgrwaService
from app.services.exact import ExactService
from app.services.logging import StandardLoggerService
from app.services.sweep import SweepService
from app.services.vvp import VvpService

logger = StandardLoggerService()


def levels_for(
    method: Method,
    params: ModelParams,
    n_levels: int,
    l_policy: Optional[LPolicy] = None,
    tol: Optional[float] = None,
) -> List[float]:
    """The n_levels lowest energies of one engine, ascending."""
    if method is Method.BGRWA:
        table = BgrwaService(params).spectrum(n_levels)
    elif method is Method.VVP:
        table = VvpService(params).vvp_spectrum(n_levels, l_policy)
    else:
        exact = ExactService(params)
        table = exact.spectrum(exact.converge(n_levels, tol))
    return table.sorted_levels(n_levels)


class ExperimentService:
    """
    Spectroscopy lines of a flux qubit coupled to an oscillator as a function
    of the applied flux, reported as transitions from the ground state.
    """

    def __init__(self, circuit: FluxQubitParams, sweep: Optional[SweepService] = None):
        self.circuit = circuit
        self.sweep = sweep or SweepService()

    def flux_scan(
        self,
        n_transitions: int,
        method: Method = Method.BGRWA,
        l_policy: Optional[LPolicy] = None,
    ) -> FluxScan:
        """
        With method ED every row also carries the BGRWA minus ED deviation of
        each transition.
        """
        logger.info(
            "Flux scan",
            method=method.value,
            points=len(self.circuit.flux_grid),
            n_transitions=n_transitions,
        )
        rows = self.sweep.map(
            lambda flux: self._row(flux, n_transitions, method, l_policy),
            self.circuit.flux_grid,
        )
        return FluxScan(method=method, circuit=self.circuit, rows=rows)

    def _row(
        self,
        flux: float,
        n_transitions: int,
        method: Method,
        l_policy: Optional[LPolicy],
    ) -> FluxScanRow:
        params = self.circuit.to_model_params(flux)
        transitions = self._transitions(method, params, n_transitions, l_policy)
        deviations = None
        if method is Method.ED:
            analytic = self._transitions(
                Method.BGRWA, params, n_transitions, l_policy
            )
            deviations = [a - e for a, e in zip(analytic, transitions)]
        return FluxScanRow(
            flux_ratio=flux,
            epsilon=params.epsilon,
            transitions=transitions,
            deviations=deviations,
        )

    def _transitions(
        self,
        method: Method,
        params: ModelParams,
        n_transitions: int,
        l_policy: Optional[LPolicy],
    ) -> List[float]:
        levels = levels_for(method, params, n_transitions + 1, l_policy)
        return [level - levels[0] for level in levels[1:]]
