import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phasekick import (
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


def test_equidistant_values():
    np.testing.assert_allclose(equidistant(3), [0.25, 0.5, 0.75], atol=1e-16)
    assert equidistant(0).size == 0
    np.testing.assert_allclose(equidistant(1), [0.5], atol=1e-16)
    with pytest.raises(ValueError):
        equidistant(-1)


def test_udd_values():
    # sin^2(pi/6) and sin^2(pi/3) are exactly 1/4 and 3/4
    np.testing.assert_allclose(udd(2), [0.25, 0.75], atol=1e-15)
    # sin^2(pi/8) = 1/2 - sqrt(2)/4, sin^2(pi/4) = 1/2, sin^2(3pi/8) = 1/2 + sqrt(2)/4
    np.testing.assert_allclose(
        udd(3),
        [0.14644660940672624, 0.5, 0.85355339059327373],
        atol=1e-15,
    )
    assert udd(0).size == 0
    with pytest.raises(ValueError):
        udd(-1)


def test_udd_1_equals_equidistant_1():
    np.testing.assert_allclose(udd(1), equidistant(1), atol=1e-15)


@pytest.mark.parametrize("n", range(1, 65))
def test_udd_symmetry(n):
    frac = udd(n)
    assert np.all(np.diff(frac) > 0.0)
    np.testing.assert_allclose(frac + frac[::-1], 1.0, atol=1e-15)


@pytest.mark.parametrize("n", range(1, 65))
def test_udd_alternating_sum_identity(n):
    # the sum that zeroes the first derivative condition
    signs = np.where(np.arange(1, n + 1) % 2 == 0, 1.0, -1.0)
    assert signs @ udd(n) == pytest.approx(0.5 * (-1.0) ** n, abs=1e-12)


def test_to_intervals_basics():
    np.testing.assert_allclose(to_intervals([0.5], 2.0), [1.0, 1.0], atol=1e-16)
    np.testing.assert_allclose(
        to_intervals(equidistant(3), 4.0), [1.0, 1.0, 1.0, 1.0], atol=1e-15
    )
    np.testing.assert_allclose(to_intervals(udd(2), 1.0), [0.25, 0.5, 0.25], atol=1e-15)
    np.testing.assert_allclose(to_intervals([], 3.0), [3.0], atol=1e-16)


def test_to_intervals_rejects_bad_input():
    with pytest.raises(SequenceError):
        to_intervals([0.5, 0.4], 1.0)
    with pytest.raises(ValueError):
        to_intervals([0.5], 0.0)
    with pytest.raises(ValueError):
        to_intervals([0.5], -1.0)


def test_validate_errors():
    with pytest.raises(DuplicateTimeError):
        validate_fractions([0.2, 0.2])
    with pytest.raises(OutOfRangeError):
        validate_fractions([0.0, 0.5])
    with pytest.raises(OutOfRangeError):
        validate_fractions([0.5, 1.0])
    with pytest.raises(NotSortedError):
        validate_fractions([0.7, 0.3])
    with pytest.raises(SequenceError):
        validate_fractions([np.nan])
    out = validate_fractions([0.3, 0.7])
    np.testing.assert_array_equal(out, [0.3, 0.7])
    assert validate_fractions([]).size == 0


@settings(max_examples=100, deadline=None)
@given(
    n=st.integers(1, 10),
    t_total=st.floats(1e-3, 1e3),
    seed=st.integers(0, 2**32 - 1),
)
def test_interval_round_trip(n, t_total, seed):
    rng = np.random.default_rng(seed)
    frac = np.sort(rng.uniform(0.01, 0.99, n))
    if n > 1 and np.min(np.diff(frac)) < 1e-4:
        return
    intervals = to_intervals(frac, t_total)
    assert np.all(intervals > 0.0)
    assert abs(np.sum(intervals) - t_total) <= 1e-12 * t_total
    recovered = np.cumsum(intervals)[:-1] / t_total
    assert np.max(np.abs(recovered - frac)) <= 1e-14


def test_read_fractions(tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("# a three-kick timing\n0.2\n0.5  # midpoint\n\n0.9\n")
    np.testing.assert_allclose(read_fractions(path), [0.2, 0.5, 0.9], atol=1e-16)

    bad = tmp_path / "bad.txt"
    bad.write_text("0.5\nnot-a-number\n")
    with pytest.raises(SequenceError):
        read_fractions(bad)

    unsorted = tmp_path / "unsorted.txt"
    unsorted.write_text("0.9\n0.2\n")
    with pytest.raises(NotSortedError):
        read_fractions(unsorted)
