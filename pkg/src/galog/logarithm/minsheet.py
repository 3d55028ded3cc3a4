"""Empirical search for the sheet with the smallest determinant norm.

Zero constants do not always give the smallest-norm logarithm, so this
utility scans every combination of the applicable constants in
``[-cmax, cmax]``. It makes no claim beyond the scanned box.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from galog.branching import BranchParams
from galog.core import Multivector, norm
from galog.logarithm.result import LogResult

_CONSTANTS = ("c1_plus", "c1_minus", "c2_plus", "c2_minus")


@dataclass(frozen=True)
class SheetScan:
    best_branch: BranchParams
    best_value: Multivector
    best_norm: float
    principal_norm: float
    evaluated: int


def applicable_constants(result: LogResult) -> tuple[str, ...]:
    names = {name for _, name in result.family.discrete_generators}
    names |= {slot.constant for slot in result.family.continuous_slots}
    return tuple(n for n in _CONSTANTS if n in names)


def min_sheet(log_fn, a: Multivector, cmax: int, base: BranchParams | None = None) -> SheetScan:
    """Scan ``|c| <= cmax`` for the finite logarithm with the smallest norm.

    ``log_fn(a, branch)`` must return a :class:`LogResult`.
    """
    if cmax < 0:
        raise ValueError("cmax must be non-negative")
    base = base or BranchParams()
    principal = log_fn(a, base)
    value = principal.finite()
    names = applicable_constants(principal)
    best = (norm(value), base, value)
    principal_norm = best[0]
    count = 1
    for combo in itertools.product(range(-cmax, cmax + 1), repeat=len(names)):
        if not any(combo):
            continue
        branch = replace(base, **dict(zip(names, combo)))
        v = log_fn(a, branch).finite()
        count += 1
        nv = norm(v)
        if nv < best[0] - 1e-12 * max(1.0, best[0]):
            best = (nv, branch, v)
    return SheetScan(best[1], best[2], best[0], principal_norm, count)
