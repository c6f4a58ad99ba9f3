from typing import Any, Dict, List, Optional

from app.models.base import Method
from app.models.params import ModelParams
from app.models.spectrum import SpectrumTable
from app.requests.run import RunConfig
from app.services.bgrwa import BgrwaService
from app.services.exact import ExactService
from app.services.sweep import SweepService
from app.services.vvp import VvpService


class SpectrumService:
    """
    Evaluates every requested engine on each point of the coupling sweep and
    lays the sorted levels out as one row per g.
    """

    def __init__(self, config: RunConfig, sweep: Optional[SweepService] = None):
        self.config = config
        self.sweep = sweep or SweepService(config.jobs)

    def params(self, g: float) -> ModelParams:
        return ModelParams(
            delta=self.config.delta,
            epsilon=self.config.epsilon,
            omega=self.config.omega,
            g=g,
        )

    def table(self, method: Method, params: ModelParams) -> SpectrumTable:
        levels = self.config.levels
        if method is Method.BGRWA:
            return BgrwaService(params).spectrum(levels)
        if method is Method.VVP:
            return VvpService(params).vvp_spectrum(levels, self.config.vvp_l)
        exact = ExactService(params, tolerance=self.config.tol)
        if self.config.truncation:
            result = exact.diagonalize(
                exact.build_hamiltonian(self.config.truncation), levels
            )
        else:
            result = exact.converge(levels)
        return exact.spectrum(result)

    def rows(self, deviations: bool = False) -> List[Dict[str, Any]]:
        """
        Args:
            deviations (bool): Add |E_method - E_ed| columns for every non-ED method.
        """
        return self.sweep.map(
            lambda g: self.row(g, deviations), self.config.g.values()
        )

    def row(self, g: float, deviations: bool = False) -> Dict[str, Any]:
        params = self.params(g)
        k = self.config.levels
        row: Dict[str, Any] = {"g": g}
        energies = {}
        for method in self.config.methods:
            table = self.table(method, params)
            energies[method] = table.sorted_levels(k)
            for i, energy in enumerate(energies[method]):
                row[f"{method.value}_E{i}"] = energy
            if method is Method.ED:
                row["ed_N"] = table.truncation
            if method is Method.VVP:
                row["vvp_l"] = _offsets(table)
        if deviations:
            reference = energies[Method.ED]
            for method in self.config.methods:
                if method is Method.ED:
                    continue
                for i, (energy, ref) in enumerate(
                    zip(energies[method], reference)
                ):
                    row[f"{method.value}_dE{i}"] = abs(energy - ref)
        return row


def _offsets(table: SpectrumTable) -> str:
    if "l_assignment" in table.metadata:
        return "|".join(str(l) for l in table.metadata["l_assignment"])  # noqa: E741
    return str(table.metadata.get("l"))
