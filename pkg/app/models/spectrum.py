from typing import Any, Dict, List, Optional

from pydantic import Field, field_validator

from app.exceptions.model import InsufficientLevelsError

from .base import Branch, Method, ValueModel
from .params import ModelParams


class SpectrumEntry(ValueModel):
    """
    One energy level of a spectrum table.

    Attributes:
        level_index (int): Quantum-number label of the level in its own frame
            (pair index n for BGRWA, oscillator index m for VVP, eigenvalue rank for ED).
        branch (Optional[Branch]): ground, plus or minus; None for ED levels, whose
            labels do not carry over between frames.
        energy (float): Level energy in the units of the parameters.
    """

    level_index: int = Field(ge=0)
    branch: Optional[Branch] = None
    energy: float


class SpectrumTable(ValueModel):
    """
    Method-tagged list of energy levels.

    Attributes:
        method (Method): Engine that produced the levels.
        entries (List[SpectrumEntry]): Levels in generation order.
        params (ModelParams): Parameters the levels belong to.
        truncation (Optional[int]): Fock truncation N (ED only).
        metadata (Dict[str, Any]): Engine-specific bookkeeping, e.g. the VVP l assignment.
    """

    method: Method
    entries: List[SpectrumEntry]
    params: ModelParams
    truncation: Optional[int] = None
    metadata: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("truncation")
    def check_truncation(cls, value):
        if value is not None and value < 0:
            raise ValueError("truncation must be non-negative")
        return value

    def sorted_entries(self) -> List[SpectrumEntry]:
        return sorted(self.entries, key=lambda entry: entry.energy)

    def sorted_view(self) -> "SpectrumTable":
        return self.model_copy(update={"entries": self.sorted_entries()})

    def sorted_levels(self, k: int) -> List[float]:
        return sorted_levels(self, k)


def sorted_levels(table: SpectrumTable, k: int) -> List[float]:
    """
    Return the k smallest energies of a table in ascending order.

    The sort is stable, so re-sorting an already sorted table is the identity.

    Raises:
        InsufficientLevelsError: If the table holds fewer than k entries.
    """
    if k > len(table.entries):
        raise InsufficientLevelsError(
            f"{table.method.value} table has {len(table.entries)} levels, {k} requested"
        )
    return [entry.energy for entry in table.sorted_entries()[:k]]
