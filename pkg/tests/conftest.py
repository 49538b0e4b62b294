"""Shared test oracles, independent of the library's evolution path."""

import numpy as np
import pytest
from scipy.integrate import solve_ivp

from phasekick import SystemParams, to_intervals, validate_fractions


def ode_evolve(params: SystemParams, fractions, initial=None) -> np.ndarray:
    """Brute-force evolution: piecewise integration of the rotating-frame
    equations

        dc_e/dt = (i/2) (-D c_e + W c_g)
        dc_g/dt = (i/2) ( W c_e + D c_g)

    with a ground-amplitude sign flip between intervals.  Uses a generic
    adaptive integrator so it shares nothing with the closed-form
    propagator it cross-checks.
    """
    state = np.array([0.0, 1.0] if initial is None else initial, dtype=complex)
    frac = validate_fractions(fractions)
    if frac.size == 0 and params.total_time == 0.0:
        return state
    omega, delta = params.rabi_frequency, params.detuning

    def rhs(t, y):
        ce = y[0] + 1j * y[1]
        cg = y[2] + 1j * y[3]
        dce = 0.5j * (-delta * ce + omega * cg)
        dcg = 0.5j * (omega * ce + delta * cg)
        return [dce.real, dce.imag, dcg.real, dcg.imag]

    for k, tau in enumerate(to_intervals(frac, params.total_time)):
        if k > 0:
            state[1] = -state[1]
        y0 = [state[0].real, state[0].imag, state[1].real, state[1].imag]
        sol = solve_ivp(rhs, (0.0, float(tau)), y0, rtol=1e-12, atol=1e-14)
        y = sol.y[:, -1]
        state = np.array([y[0] + 1j * y[1], y[2] + 1j * y[3]])
    return state


def random_fractions(rng, n: int, spacing: float = 1e-3) -> np.ndarray:
    """Sorted fractions in (0, 1) with a minimum spacing for conditioning."""
    while True:
        frac = np.sort(rng.uniform(0.02, 0.98, n))
        if n < 2 or np.min(np.diff(frac)) >= spacing:
            return frac


@pytest.fixture
def rng():
    return np.random.default_rng(20240809)
