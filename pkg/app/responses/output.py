from typing import Any, Dict, List

from pydantic import BaseModel, ConfigDict


class OutputDocument(BaseModel):
    """
    Pydantic model of a data file.

    Attributes:
        meta (Dict[str, Any]): Config echo, run context and per-run bookkeeping.
        rows (List[Dict[str, Any]]): One record per sweep point or time sample,
            columns in a fixed order.
    """

    model_config = ConfigDict(frozen=True)

    meta: Dict[str, Any]
    rows: List[Dict[str, Any]]

    @property
    def columns(self) -> List[str]:
        return list(self.rows[0]) if self.rows else []
