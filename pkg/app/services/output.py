import io
import json
import math
from pathlib import Path
from typing import Any, Optional

import pandas as pd

from app.helpers.environment import env
from app.responses.output import OutputDocument


class OutputService:
    """
    Renders an OutputDocument as CSV (with `#` metadata lines) or JSON
    (`meta` and `rows` keys). Floats are rounded to a fixed number of
    significant digits and nothing time-dependent is written, so identical
    runs produce identical bytes.
    """

    def __init__(self, precision: Optional[int] = None):
        self.precision = precision or env().OUTPUT_PRECISION

    def round(self, value: Any) -> Any:
        if isinstance(value, bool) or value is None:
            return value
        if isinstance(value, float):
            if not math.isfinite(value):
                return value
            return float(f"{value:.{self.precision}g}")
        if hasattr(value, "tolist"):
            return self.round(value.tolist())
        if isinstance(value, dict):
            return {k: self.round(v) for k, v in value.items()}
        if isinstance(value, (list, tuple)):
            return [self.round(v) for v in value]
        return value

    def document(self, meta: dict, rows: list) -> OutputDocument:
        return OutputDocument(meta=self.round(meta), rows=self.round(rows))

    def render(self, document: OutputDocument, fmt: str = "csv") -> str:
        if fmt == "json":
            return json.dumps(document.model_dump(), indent=2) + "\n"
        return self._csv(document)

    def write(self, document: OutputDocument, fmt: str, out: str) -> str:
        """Write to `out` unless it is "-"; the rendered text is returned either way."""
        text = self.render(document, fmt)
        if out != "-":
            path = Path(out)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
        return text

    def read(self, text: str, fmt: str = "csv") -> OutputDocument:
        """Parse a rendered document back."""
        if fmt == "json":
            return OutputDocument(**json.loads(text))
        meta = {}
        body = []
        for line in text.splitlines():
            if line.startswith("# "):
                key, _, value = line[2:].partition(": ")
                meta[key] = json.loads(value)
            else:
                body.append(line)
        frame = pd.read_csv(io.StringIO("\n".join(body)))
        return OutputDocument(meta=meta, rows=frame.to_dict(orient="records"))

    def _csv(self, document: OutputDocument) -> str:
        header = "".join(
            f"# {key}: {json.dumps(value, sort_keys=True)}\n"
            for key, value in document.meta.items()
        )
        frame = pd.DataFrame(document.rows, columns=document.columns)
        body = frame.to_csv(
            index=False,
            float_format=f"%.{self.precision}g",
            lineterminator="\n",
        )
        return header + body
