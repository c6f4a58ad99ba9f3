import numpy as np
import pytest
from pydantic import ValidationError

from app.exceptions.model import InsufficientLevelsError
from app.models.base import Branch, Method, Qubit
from app.models.spectrum import SpectrumEntry, SpectrumTable, sorted_levels
from app.models.state import StateVector


@pytest.fixture
def table(resonant_params):
    entries = [
        SpectrumEntry(level_index=0, branch=Branch.PLUS, energy=0.7),
        SpectrumEntry(level_index=0, branch=Branch.GROUND, energy=-0.5),
        SpectrumEntry(level_index=0, branch=Branch.MINUS, energy=0.2),
    ]
    return SpectrumTable(
        method=Method.BGRWA, entries=entries, params=resonant_params
    )


def test_sorted_levels_ascending(table):
    assert sorted_levels(table, 3) == [-0.5, 0.2, 0.7]
    assert table.sorted_levels(2) == [-0.5, 0.2]


def test_sorting_is_idempotent(table):
    once = table.sorted_view()
    twice = once.sorted_view()

    assert once.entries == twice.entries


def test_insufficient_levels(table):
    with pytest.raises(InsufficientLevelsError):
        sorted_levels(table, 4)


def test_negative_level_index_is_rejected():
    with pytest.raises(ValidationError):
        SpectrumEntry(level_index=-1, energy=0.0)


def test_state_vector_blocks_and_amplitudes():
    state = StateVector.from_blocks(np.array([1.0, 0.0]), np.array([0.0, 1.0]))

    assert state.truncation == 1
    assert state.index(Qubit.DOWN, 1) == 3
    assert state.amplitude(Qubit.UP, 0) == 1.0
    assert state.norm() == pytest.approx(np.sqrt(2.0))
    assert state.normalized().norm() == pytest.approx(1.0)


def test_state_vector_is_read_only_copy():
    source = np.array([1.0, 0.0, 0.0, 0.0])
    state = StateVector(coeffs=source)
    source[0] = 5.0

    assert state.coeffs[0] == 1.0
    with pytest.raises(ValueError):
        state.coeffs[0] = 2.0


def test_state_vector_overlap():
    up = StateVector(coeffs=[1.0, 0.0, 0.0, 0.0])
    mixed = StateVector(coeffs=[1.0, 0.0, 1.0, 0.0]).normalized()

    assert up.overlap(mixed) == pytest.approx(1.0 / np.sqrt(2.0))


def test_state_vector_needs_even_length():
    with pytest.raises(ValidationError):
        StateVector(coeffs=[1.0, 0.0, 0.0])
