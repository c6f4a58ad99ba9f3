import pytest
from pydantic import ValidationError

from app.exceptions.config import InvalidRunConfigError
from app.models.base import Method
from app.requests.run import RunConfig, SweepSpec, read_config_file


def test_sweep_values_include_the_stop():
    spec = SweepSpec.parse("0:0.3:0.1")

    assert spec.values() == [0.0, 0.1, 0.2, 0.3]
    assert str(spec) == "0:0.3:0.1"


def test_sweep_never_passes_the_stop():
    assert SweepSpec.parse("0:1:0.4").values() == [0.0, 0.4, 0.8]
    assert SweepSpec.parse("0:0.95:0.1").values()[-1] == 0.9
    assert len(SweepSpec.parse("0.495:0.505:0.0001").values()) == 101


def test_sweep_single_value():
    assert SweepSpec.parse("0.25").values() == [0.25]
    assert SweepSpec.parse(0.5).values() == [0.5]


@pytest.mark.parametrize("text", ["1:0:0.1", "0:1:0", "0:1:-0.1", "a:b:c", "0:1", "0:nan:0.1"])
def test_sweep_rejects_bad_grids(text):
    with pytest.raises(ValueError):
        SweepSpec.parse(text)


def test_defaults():
    config = RunConfig(command="spectrum")

    assert config.delta == 1.0
    assert config.omega == 1.0
    assert config.methods == [Method.BGRWA, Method.ED]
    assert config.levels == 8
    assert config.vvp_l.kind == "fixed"
    assert config.format == "csv"
    assert config.out == "-"


def test_methods_from_comma_list():
    config = RunConfig(command="spectrum", methods="ED, vvp,ed")

    assert config.methods == [Method.ED, Method.VVP]


def test_unknown_method_is_rejected():
    with pytest.raises(ValidationError):
        RunConfig(command="spectrum", methods="bgrwa,nrg")


@pytest.mark.parametrize(
    "values",
    [
        {"omega": 0.0},
        {"omega": -1.0},
        {"delta": float("inf")},
        {"g": "-0.1:0.2:0.1"},
        {"format": "xml"},
        {"levels": 0},
        {"vvp_l": "sometimes"},
    ],
)
def test_invalid_values_are_rejected(values):
    with pytest.raises(ValidationError):
        RunConfig(command="spectrum", **values)


def test_compare_needs_the_exact_reference():
    with pytest.raises(ValidationError):
        RunConfig(command="compare", methods="bgrwa,vvp")


def test_flux_scan_takes_a_single_coupling():
    assert RunConfig(command="flux-scan", g=0.82).g.values() == [0.82]
    with pytest.raises(ValidationError, match="single coupling"):
        RunConfig(command="flux-scan", g="0.5:0.9:0.2")


def test_flags_override_config_file(tmp_path):
    path = tmp_path / "run.conf"
    path.write_text("delta = 0.5\nepsilon = 0.2\ng = 0:0.2:0.1\n")

    config = RunConfig.from_sources(
        "spectrum", {"epsilon": 0.3, "levels": None}, str(path), {"omega": 2.0}
    )

    assert config.delta == 0.5
    assert config.epsilon == 0.3
    assert config.omega == 2.0
    assert config.levels == 8
    assert config.g.values() == [0.0, 0.1, 0.2]


def test_config_file_rejects_unknown_keys(tmp_path):
    path = tmp_path / "run.conf"
    path.write_text("delta = 0.5\ncolour = blue\n")

    with pytest.raises(InvalidRunConfigError):
        read_config_file(str(path))


def test_missing_config_file(tmp_path):
    with pytest.raises(InvalidRunConfigError):
        read_config_file(str(tmp_path / "missing.conf"))


def test_config_file_accepts_dashed_keys(tmp_path):
    path = tmp_path / "run.conf"
    path.write_text("VVP-L = best\nn-modes = 5\n")

    assert read_config_file(str(path)) == {"vvp_l": "best", "n_modes": "5"}


def test_echo_round_trips_and_skips_run_only_fields():
    config = RunConfig(
        command="dynamics", g="0:0.2:0.1", vvp_l="nearest", out="x.csv", jobs=3
    )
    echo = config.echo()

    assert "out" not in echo and "jobs" not in echo
    assert echo["g"] == "0:0.2:0.1"
    assert echo["vvp_l"] == "nearest"
    assert RunConfig(**echo).echo() == echo
