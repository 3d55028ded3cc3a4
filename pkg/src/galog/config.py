"""Numerical policy.

The zero tolerance drives every case-dispatch predicate (``a± = 0``,
``Det = 0``, ...). It is relative: a quantity counts as zero when its
magnitude is at most ``tol`` times the largest coefficient magnitude of
the input (squared for quadratic quantities).

The value lives in a :class:`contextvars.ContextVar`, so overrides made
with :func:`tolerance` are local to the calling thread or task. The
default can be set with the ``GALOG_TOL`` environment variable.
"""

from __future__ import annotations

import contextlib
import contextvars
import os

DEFAULT_TOLERANCE = 1e-12
ENV_VAR = "GALOG_TOL"


def _initial() -> float:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_TOLERANCE
    value = float(raw)
    if not value > 0:
        raise ValueError(f"{ENV_VAR} must be positive, got {raw!r}")
    return value


_tolerance: contextvars.ContextVar[float] = contextvars.ContextVar("galog_tolerance", default=_initial())


def get_tolerance() -> float:
    return _tolerance.get()


def set_tolerance(tol: float) -> None:
    """Set the tolerance for the current context."""
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    _tolerance.set(float(tol))


@contextlib.contextmanager
def tolerance(tol: float):
    """Temporarily override the zero tolerance."""
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    token = _tolerance.set(float(tol))
    try:
        yield
    finally:
        _tolerance.reset(token)
