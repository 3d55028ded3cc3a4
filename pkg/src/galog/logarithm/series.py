"""Mercator series for ``log A`` around 1, evaluated in Horner form."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from galog.core import Multivector, gp_array, norm

STAGNATION = 1e-12


@dataclass(frozen=True)
class SeriesLog:
    value: Multivector
    converged: bool
    terms: int
    norm_b: float


def _horner(b: np.ndarray, n: int, sig) -> np.ndarray:
    # log B = B (1 + B (-1/2 + B (1/3 - ...)))
    h = np.zeros(8)
    h[0] = (-1.0) ** (n - 1) / n
    for k in range(n - 1, 0, -1):
        h = gp_array(b, h, sig)
        h[0] += (-1.0) ** (k - 1) / k
    return gp_array(b, h, sig)


def log_series(a: Multivector, max_terms: int = 4096) -> SeriesLog:
    """Partial sums with doubling term counts until they stagnate.

    ``converged`` requires the determinant norm ``|A - 1| < 1`` and two
    successive partial sums agreeing to ``1e-12`` relative. The value is
    only meaningful when ``converged`` is true.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be positive")
    b = (a - 1.0).coeffs
    nb = norm(a - 1.0)
    if not np.any(b):
        return SeriesLog(Multivector.zero(a.sig), True, 1, 0.0)
    prev = None
    n = min(16, max_terms)
    while True:
        cur = _horner(b, n, a.sig)
        if not np.all(np.isfinite(cur)):
            return SeriesLog(Multivector(np.nan_to_num(cur), a.sig), False, n, nb)
        if prev is not None:
            diff = np.max(np.abs(cur - prev))
            if diff <= STAGNATION * max(1.0, np.max(np.abs(cur))):
                return SeriesLog(Multivector(cur, a.sig), bool(nb < 1.0), n, nb)
        if n >= max_terms:
            return SeriesLog(Multivector(cur, a.sig), False, n, nb)
        prev = cur
        n = min(2 * n, max_terms)
