import math

import numpy as np
import pytest
from pydantic import ValidationError

from app.exceptions.solver import IncompleteBasisError, TruncationTooSmallError
from app.models.base import Branch, Method
from app.models.dynamics import TimeSeries
from app.models.params import ModelParams
from app.models.state import StateVector
from app.models.vvp import LPolicy
from app.services import dynamics as dynamics_module
from app.services.bgrwa import BgrwaService
from app.services.dynamics import (
    DynamicsService,
    default_time_grid,
    initial_state,
    sigma_z_expectation,
)
from app.services.exact import ExactService

# RMS of BGRWA minus ED over t in [0, 50] at delta = omega = 1, for g = 0.1, 0.2, 0.5.
# Measured at 0.056 / 0.105 / 0.390 (epsilon = 0.1) and 0.047 / 0.084 / 0.337 (epsilon = sqrt(0.5)).
TRACKING_BOUNDS = {
    0.1: (0.07, 0.13, 0.45),
    math.sqrt(0.5): (0.06, 0.11, 0.40),
}
TRACKING_COUPLINGS = (0.1, 0.2, 0.5)


def test_initial_state_is_excited_vacuum():
    state = initial_state(5)

    assert state.truncation == 5
    assert state.coeffs[0] == 1.0
    assert state.norm() == 1.0
    assert sigma_z_expectation(state) == 1.0


def test_initial_state_needs_a_truncation():
    with pytest.raises(TruncationTooSmallError):
        initial_state(0)


def test_sigma_z_of_equal_superposition_vanishes():
    coeffs = np.zeros(8)
    coeffs[0] = coeffs[4] = 1.0 / np.sqrt(2.0)

    assert sigma_z_expectation(StateVector(coeffs=coeffs)) == pytest.approx(0.0)


def test_default_time_grid():
    grid = default_time_grid(10.0, 5)

    assert grid == pytest.approx([0.0, 2.5, 5.0, 7.5, 10.0])


def test_uncoupled_rabi_oscillation():
    params = ModelParams(delta=1.0, epsilon=0.0, omega=1.0, g=0.0)
    service = DynamicsService(params)
    times = np.linspace(0.0, 20.0, 201)

    for series in (service.evolve_bgrwa(times, 4), service.evolve_ed(times, 20)):
        assert series.sigma_z == pytest.approx(np.cos(times), abs=1e-10)
        assert series.completeness == pytest.approx(1.0, abs=1e-12)


def test_biased_uncoupled_oscillation():
    params = ModelParams(delta=0.6, epsilon=0.8, omega=1.0, g=0.0)
    times = np.linspace(0.0, 10.0, 51)
    series = DynamicsService(params).evolve_bgrwa(times, 4)
    expected = 0.64 + 0.36 * np.cos(times)

    assert series.sigma_z == pytest.approx(expected, abs=1e-10)


def test_time_is_measured_in_oscillator_periods():
    slow = DynamicsService(ModelParams(delta=1.0, epsilon=0.0, omega=1.0, g=0.1))
    fast = DynamicsService(ModelParams(delta=2.0, epsilon=0.0, omega=2.0, g=0.2))
    times = np.linspace(0.0, 5.0, 11)

    assert fast.evolve_ed(times, 30).sigma_z == pytest.approx(
        slow.evolve_ed(times, 30).sigma_z, abs=1e-10
    )


@pytest.mark.parametrize("epsilon", sorted(TRACKING_BOUNDS))
def test_bgrwa_follows_exact_dynamics(epsilon):
    times = np.linspace(0.0, 50.0, 1000)
    bounds = TRACKING_BOUNDS[epsilon]
    deviations = []
    for g, bound in zip(TRACKING_COUPLINGS, bounds):
        service = DynamicsService(ModelParams(delta=1.0, epsilon=epsilon, omega=1.0, g=g))
        analytic = service.evolve_bgrwa(times)
        exact = service.evolve_ed(times)

        assert analytic.sigma_z[0] == pytest.approx(1.0, abs=1e-6)
        assert exact.sigma_z[0] == pytest.approx(1.0, abs=1e-12)
        assert exact.completeness == pytest.approx(1.0, abs=1e-12)
        assert exact.norm_drift < 1e-12

        rms = float(np.sqrt(np.mean((analytic.sigma_z - exact.sigma_z) ** 2)))
        assert rms < bound
        deviations.append(rms)

    assert list(bounds) == sorted(bounds)
    assert deviations == sorted(deviations)


def test_exact_truncation_comes_from_converged_levels(mocker, resonant_params):
    converge = mocker.spy(ExactService, "converge")

    series = DynamicsService(resonant_params).evolve_ed([0.0, 1.0])

    converge.assert_called_once()
    assert series.truncation >= converge.spy_return.n_used


def test_bgrwa_series_oscillates_at_level_differences():
    params = ModelParams(delta=1.0, epsilon=0.0, omega=1.0, g=0.5)
    service = BgrwaService(params)
    n_modes = 20
    truncation = DynamicsService(params).default_truncation(n_modes)
    states = [service.ground_state()]
    for n in range(n_modes):
        states += [service.eigenstate(n, Branch.PLUS), service.eigenstate(n, Branch.MINUS)]
    populated = [
        s.energy for s in states if abs(service.lab_frame_vector(s, truncation).coeffs[0]) > 1e-4
    ]
    differences = np.abs(np.subtract.outer(populated, populated)).ravel()

    samples, t_max = 8192, 400.0
    times = np.arange(samples) * (t_max / samples)
    sigma_z = DynamicsService(params).evolve_bgrwa(times, n_modes, truncation).sigma_z
    power = np.abs(np.fft.rfft((sigma_z - sigma_z.mean()) * np.hanning(samples)))
    frequencies = 2.0 * np.pi * np.fft.rfftfreq(samples, t_max / samples)
    resolution = 2.0 * np.pi / t_max

    inner = power[1:-1]
    peaks = np.flatnonzero((inner > power[:-2]) & (inner > power[2:]) & (inner > 0.05 * inner.max())) + 1
    assert peaks.size > 0
    for peak in peaks:
        assert np.min(np.abs(differences - frequencies[peak])) < 3.0 * resolution


def test_vvp_series_starts_excited(resonant_params):
    series = DynamicsService(resonant_params).evolve_vvp(
        [0.0, 1.0], 10, l_policy=LPolicy.fixed(0)
    )

    assert series.method is Method.VVP
    assert series.sigma_z[0] == pytest.approx(1.0, abs=1e-4)


def test_too_few_modes_is_reported():
    params = ModelParams(delta=1.0, epsilon=0.1, omega=1.0, g=1.0)

    with pytest.raises(IncompleteBasisError):
        DynamicsService(params).evolve_bgrwa([0.0, 1.0], 1)


def test_small_deficit_only_warns(mocker, resonant_params):
    warning = mocker.patch.object(dynamics_module.logger, "warning")
    service = DynamicsService(resonant_params)
    vectors = np.eye(4)[:, :2] * np.sqrt(1.0 - 1e-5)

    series = service._evolve(Method.ED, np.zeros(2), vectors, [0.0], 1)

    warning.assert_called_once()
    assert series.completeness == pytest.approx(1.0 - 1e-5)


def test_default_truncation_grows_with_coupling():
    weak = DynamicsService(ModelParams(delta=1.0, epsilon=0.0, omega=1.0, g=0.0))
    strong = DynamicsService(ModelParams(delta=1.0, epsilon=0.0, omega=1.0, g=1.0))

    assert weak.default_truncation(20) == 60
    assert strong.default_truncation(20) == 68


def test_time_series_rejects_unordered_times(resonant_params):
    with pytest.raises(ValidationError):
        TimeSeries(
            method=Method.ED,
            times=[0.0, 2.0, 1.0],
            sigma_z=[1.0, 0.5, 0.0],
            params=resonant_params,
            truncation=10,
            completeness=1.0,
        )


def test_time_series_rejects_unphysical_polarization(resonant_params):
    with pytest.raises(ValidationError):
        TimeSeries(
            method=Method.ED,
            times=[0.0, 1.0],
            sigma_z=[1.0, 1.5],
            params=resonant_params,
            truncation=10,
            completeness=1.0,
        )


def test_time_series_needs_matching_lengths(resonant_params):
    with pytest.raises(ValidationError):
        TimeSeries(
            method=Method.ED,
            times=[0.0, 1.0],
            sigma_z=[1.0],
            params=resonant_params,
            truncation=10,
            completeness=1.0,
        )
