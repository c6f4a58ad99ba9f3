import json

import pytest

from app.responses.output import OutputDocument
from app.services.output import OutputService


@pytest.fixture
def output():
    return OutputService(precision=12)


@pytest.fixture
def document(output):
    return output.document(
        {"command": "spectrum", "config": {"delta": 1.0, "g": "0:0.1:0.1"}},
        [
            {"g": 0.0, "bgrwa_E0": -0.5, "ed_N": 20},
            {"g": 0.1, "bgrwa_E0": -0.5100251257867, "ed_N": 20},
        ],
    )


def test_rounds_to_significant_digits(output):
    assert output.round(0.1 + 0.2) == 0.3
    assert output.round(1.23456789012345678) == 1.23456789012
    assert output.round({"a": [1e-20 / 3.0, True, None, 3]}) == {
        "a": [3.33333333333e-21, True, None, 3]
    }


def test_json_rendering(output, document):
    text = output.render(document, "json")
    data = json.loads(text)

    assert text.endswith("\n")
    assert data["meta"]["command"] == "spectrum"
    assert data["rows"][1]["bgrwa_E0"] == -0.510025125787


def test_csv_rendering(output, document):
    lines = output.render(document, "csv").splitlines()

    assert lines[0] == "# command: \"spectrum\""
    assert lines[1] == '# config: {"delta": 1.0, "g": "0:0.1:0.1"}'
    assert lines[2] == "g,bgrwa_E0,ed_N"
    assert lines[4] == "0.1,-0.510025125787,20"


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_rendered_documents_read_back(output, document, fmt):
    parsed = output.read(output.render(document, fmt), fmt)

    assert parsed.meta == document.meta
    assert parsed.columns == document.columns
    assert parsed.rows[1]["bgrwa_E0"] == pytest.approx(-0.510025125787, abs=1e-15)


def test_write_to_file(output, document, tmp_path):
    path = tmp_path / "out" / "levels.csv"

    text = output.write(document, "csv", str(path))

    assert path.read_text(encoding="utf-8") == text


def test_write_to_stdout_leaves_no_file(output, document, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)

    output.write(document, "json", "-")

    assert list(tmp_path.iterdir()) == []


def test_empty_document_has_no_columns():
    assert OutputDocument(meta={}, rows=[]).columns == []
