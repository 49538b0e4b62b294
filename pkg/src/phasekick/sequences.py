"""Pulse-timing sequences and conversions.

A sequence of N instantaneous kicks inside a window of duration T is
described by dimensionless fractions 0 < d_1 < ... < d_N < 1, the kick
times divided by T.  Two families matter here:

    equidistant:  d_i = i / (N + 1)
    udd:          d_i = sin^2(pi i / (2N + 2))

The UDD spacing bunches kicks toward both ends of the window and is the
timing that zeroes the leading derivatives of the transition amplitude's
filter sum; see the optimize module.  Fractions are the canonical
representation; inter-kick intervals are derived on demand.
"""

from __future__ import annotations

import numpy as np


class SequenceError(ValueError):
    """Invalid pulse-fraction input."""


class NotSortedError(SequenceError):
    """Fractions are not strictly increasing."""


class DuplicateTimeError(SequenceError):
    """Two pulses share the same time."""


class OutOfRangeError(SequenceError):
    """A fraction lies outside the open interval (0, 1)."""


def validate_fractions(raw) -> np.ndarray:
    """Return the fractions as a float array, or raise a SequenceError.

    Accepts anything array-like.  Pulses exactly at the window boundary
    (0 or 1) are rejected: they are a different protocol, not a limit of
    this one.
    """
    frac = np.atleast_1d(np.asarray(raw, dtype=float))
    if frac.ndim != 1:
        raise SequenceError("fractions must be a flat list")
    if frac.size == 0:
        return frac.copy()
    if not np.all(np.isfinite(frac)):
        raise SequenceError("fractions must be finite")
    if np.any(frac <= 0.0) or np.any(frac >= 1.0):
        raise OutOfRangeError("fractions must lie strictly inside (0, 1)")
    d = np.diff(frac)
    if np.any(d == 0.0):
        raise DuplicateTimeError("duplicate pulse times")
    if np.any(d < 0.0):
        raise NotSortedError("fractions must be strictly increasing")
    return frac.copy()


def equidistant(n: int) -> np.ndarray:
    """Uniform spacing d_i = i / (n + 1) for n >= 0 pulses."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return np.arange(1, n + 1, dtype=float) / (n + 1)


def udd(n: int) -> np.ndarray:
    """Optimal-interference spacing d_i = sin^2(pi i / (2n + 2)) for n >= 0 pulses.

    Symmetric about the window midpoint: d_i + d_{n+1-i} = 1.  For n = 1
    it coincides with the equidistant spacing.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    i = np.arange(1, n + 1, dtype=float)
    return np.sin(np.pi * i / (2 * n + 2)) ** 2


def to_intervals(fractions, t_total: float) -> np.ndarray:
    """Durations tau_k = T (d_k - d_{k-1}) between kicks, with d_0 = 0, d_{N+1} = 1.

    Returns N + 1 positive durations summing to t_total.
    """
    frac = validate_fractions(fractions)
    if t_total <= 0.0:
        raise ValueError("t_total must be positive")
    edges = np.concatenate(([0.0], frac, [1.0]))
    return t_total * np.diff(edges)


def read_fractions(path) -> np.ndarray:
    """Load fractions from a text file: one value per line, '#' starts a comment."""
    values = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                values.append(float(text))
            except ValueError as exc:
                raise SequenceError(f"{path}:{lineno}: not a number: {text!r}") from exc
    return validate_fractions(values)
