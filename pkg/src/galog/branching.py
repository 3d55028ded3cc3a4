"""Two-argument arctangent and branch bookkeeping for multivalued logarithms.

.. warning::
   :func:`arctan2` takes its arguments as ``(x, y)``: the cosine-like
   component FIRST, the sine-like component second. This is the reverse
   of :func:`math.atan2` (which is ``atan2(y, x)``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from galog.core import AlgebraError, Multivector, Signature


class UndefinedAngleError(ValueError):
    """``arctan2(0, 0)`` has no value."""


def arctan2(x: float, y: float) -> float:
    """Angle of the point ``(x, y)`` in ``(-pi, pi]``. Note the ``(x, y)`` order.

    >>> arctan2(-1.0, 0.0) == math.pi
    True
    """
    if x == 0 and y == 0:
        raise UndefinedAngleError("arctan2(0, 0) is undefined")
    if x < 0 and y == 0:
        # the cut itself belongs to the upper sheet, also for y == -0.0
        return math.pi
    return math.atan2(y, x)


def arctan2_branched(x: float, y: float, c: int) -> float:
    """``arctan2(x, y) + 2*pi*c``."""
    return arctan2(x, y) + 2.0 * math.pi * c


# default continuous directions, per signature
_DEFAULT_VECTOR = {
    Signature.CL03: (1.0, 0.0, 0.0),
}
_DEFAULT_BIVECTOR = {
    Signature.CL03: (1.0, 0.0, 0.0),  # e12
    Signature.CL30: (1.0, 0.0, 0.0),  # e12
    Signature.CL21: (1.0, 0.0, 0.0),  # e12
    Signature.CL12: (0.0, 0.0, 1.0),  # e23; e12 squares to +1 here
}


@dataclass(frozen=True)
class BranchParams:
    """Integer sheet constants plus optional free unit directions.

    ``c1``/``c2`` (the single-pair naming used for Cl(3,0), Cl(1,2) and the
    blade formulas) are aliases of ``c1_plus``/``c2_plus``.
    Free directions are raw 3-component coordinates; they are normalised
    against the active signature by :meth:`unit_vector` and
    :meth:`unit_bivector`.
    """

    c1_plus: int = 0
    c1_minus: int = 0
    c2_plus: int = 0
    c2_minus: int = 0
    free_vector: Optional[tuple[float, float, float]] = None
    free_bivector: Optional[tuple[float, float, float]] = None

    @property
    def c1(self) -> int:
        return self.c1_plus

    @property
    def c2(self) -> int:
        return self.c2_plus

    @classmethod
    def single(cls, c1: int = 0, c2: int = 0, **kw) -> "BranchParams":
        return cls(c1_plus=c1, c2_plus=c2, **kw)

    @classmethod
    def parse(cls, text: str) -> "BranchParams":
        """Parse ``"c1p=0,c1m=0,c2p=0,c2m=0"`` (``c1``/``c2`` also accepted)."""
        names = {
            "c1p": "c1_plus", "c1m": "c1_minus", "c2p": "c2_plus", "c2m": "c2_minus",
            "c1": "c1_plus", "c2": "c2_plus",
            "c1_plus": "c1_plus", "c1_minus": "c1_minus",
            "c2_plus": "c2_plus", "c2_minus": "c2_minus",
        }
        values = {}
        for item in filter(None, (p.strip() for p in text.split(","))):
            key, sep, val = item.partition("=")
            key = key.strip().lower()
            if not sep or key not in names:
                raise ValueError(f"bad branch constant {item!r}")
            try:
                values[names[key]] = int(val)
            except ValueError:
                raise ValueError(f"branch constant {key} must be an integer, got {val!r}") from None
        return cls(**values)

    def with_directions(self, vector=None, bivector=None) -> "BranchParams":
        return replace(
            self,
            free_vector=None if vector is None else tuple(float(v) for v in vector),
            free_bivector=None if bivector is None else tuple(float(v) for v in bivector),
        )

    def as_dict(self) -> dict:
        return {
            "c1_plus": self.c1_plus,
            "c1_minus": self.c1_minus,
            "c2_plus": self.c2_plus,
            "c2_minus": self.c2_minus,
            "free_vector": None if self.free_vector is None else list(self.free_vector),
            "free_bivector": None if self.free_bivector is None else list(self.free_bivector),
        }

    def unit_vector(self, sig: Signature) -> Multivector:
        """Free unit vector with square -1 (only Cl(0,3) rows use one)."""
        raw = self.free_vector or _DEFAULT_VECTOR.get(sig)
        if raw is None:
            raise AlgebraError(f"no free unit vector is defined for {sig.label}")
        return _unit(Multivector.from_grades(sig, vector=raw))

    def unit_bivector(self, sig: Signature) -> Multivector:
        """Free unit bivector with square -1 in ``sig``."""
        raw = self.free_bivector or _DEFAULT_BIVECTOR[sig]
        return _unit(Multivector.from_grades(sig, bivector=raw))


def _unit(u: Multivector) -> Multivector:
    sq = (u * u).a0
    if not sq < 0:
        raise AlgebraError(
            f"free direction {u} squares to {sq:g}; a direction with negative square is required"
        )
    return u / math.sqrt(-sq)


@dataclass(frozen=True)
class ContinuousSlot:
    """A free-direction term ``c * factor * U`` (``U`` a unit vector or bivector)."""

    kind: str  # "free_vector" | "free_bivector"
    constant: str
    factor: Multivector

    def term(self, branch: BranchParams, c: int = 1) -> Multivector:
        sig = self.factor.sig
        u = branch.unit_vector(sig) if self.kind == "free_vector" else branch.unit_bivector(sig)
        return c * (self.factor * u)


@dataclass(frozen=True)
class FreeFamily:
    """Description of the free multivectors ``F`` with ``exp(F) = 1``.

    Each discrete generator is the increment of the logarithm when its
    named constant grows by one. Continuous slots additionally depend on a
    free unit direction.
    """

    discrete_generators: tuple[tuple[Multivector, str], ...] = ()
    continuous_slots: tuple[ContinuousSlot, ...] = field(default_factory=tuple)

    def member(self, constants: dict[str, int], branch: BranchParams | None = None) -> Multivector | None:
        """The free multivector for the given integer constants."""
        branch = branch or BranchParams()
        total = None
        for gen, name in self.discrete_generators:
            total = _acc(total, constants.get(name, 0) * gen)
        for slot in self.continuous_slots:
            total = _acc(total, slot.term(branch, constants.get(slot.constant, 0)))
        return total

    def describe(self) -> dict:
        return {
            "discrete": [
                {"constant": name, "generator": [float(x) for x in g.coeffs]}
                for g, name in self.discrete_generators
            ],
            "continuous": [
                {"kind": s.kind, "constant": s.constant, "factor": [float(x) for x in s.factor.coeffs]}
                for s in self.continuous_slots
            ],
        }


def _acc(total, term):
    return term if total is None else total + term


def as_triple(values: Sequence[float] | None) -> tuple[float, float, float] | None:
    if values is None:
        return None
    arr = np.asarray(values, dtype=float).reshape(-1)
    if arr.shape != (3,):
        raise ValueError("a free direction needs exactly three components")
    return tuple(float(v) for v in arr)
