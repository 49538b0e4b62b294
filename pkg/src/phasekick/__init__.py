"""Suppressing unwanted transitions in a driven two-level system with phase kicks.

A small numpy/scipy toolkit with four layers:

* su2: rotating-frame transfer matrices and the instantaneous kick operator.
* sequences: equidistant and UDD kick timings, validation, file loading.
* evolution: exact product evolution and time-resolved trajectories.
* models: first-order and resonant closed forms used as cross-checks.
* optimize: Newton and derivative-free rediscovery of the optimal timing.

The `phasekick` console script drives figure presets, parameter sweeps,
timing optimization, and a self-verification suite.
"""

from .evolution import TrajectoryPoint, evolve_final, trajectory, transition_probability
from .models import (
    TangentPoleError,
    ZeroDetuningError,
    equidistant_closed_form,
    filter_sum,
    perturbative_amplitude_delta,
    perturbative_amplitude_tau,
    perturbative_probability,
    theta_from_fractions,
    theta_from_intervals,
    udd_bessel_approx,
    udd_closed_sum,
    zero_detuning_probabilities,
)
from .optimize import (
    DegenerateFitError,
    NoConvergenceError,
    OptimizationResult,
    minimize_transition,
    power_sum_residuals,
    solve_derivative_conditions,
    suppression_order,
)
from .sequences import (
    DuplicateTimeError,
    NotSortedError,
    OutOfRangeError,
    SequenceError,
    equidistant,
    read_fractions,
    to_intervals,
    udd,
    validate_fractions,
)
from .su2 import (
    EXCITED,
    GROUND,
    IDENTITY,
    UNITARITY_TOL,
    SystemParams,
    apply,
    is_unitary,
    mat_mul,
    pulse_operator,
    rotating_propagator,
    zero_detuning_propagator,
)

__version__ = "0.1.0"
