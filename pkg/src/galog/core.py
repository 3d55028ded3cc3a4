"""Multivector arithmetic for the four real Clifford algebras of dimension 3.

Coefficients are stored densely in the fixed basis order::

    [1, e1, e2, e3, e12, e13, e23, e123]

(inverse degree lexicographic). ``I`` denotes the pseudoscalar ``e123``,
which is central in every 3D algebra. The geometric product is driven by
an 8x8 signed index table built once per signature from the
anticommutation rules.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

import numpy as np

from galog.config import get_tolerance

BASIS_LABELS = ("1", "e1", "e2", "e3", "e12", "e13", "e23", "e123")

# bitmask of each basis slot (bit i <-> e_{i+1})
_MASKS = (0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111)
_SLOT_OF_MASK = {m: i for i, m in enumerate(_MASKS)}
_GRADES = np.array([bin(m).count("1") for m in _MASKS])

SCALAR = 0
VECTOR_SLOTS = (1, 2, 3)
BIVECTOR_SLOTS = (4, 5, 6)
PSEUDO = 7


class AlgebraError(ValueError):
    """Usage error: mismatched or unsupported signatures, bad shapes."""


class NonInvertibleError(ArithmeticError):
    """Raised when a multivector with vanishing determinant is inverted."""


class Signature(enum.Enum):
    """Signature tag together with the squares of ``(e1, e2, e3)``."""

    CL03 = "cl03"
    CL30 = "cl30"
    CL12 = "cl12"
    CL21 = "cl21"

    @property
    def squares(self) -> tuple[int, int, int]:
        return _SQUARES[self]

    @property
    def label(self) -> str:
        p = sum(1 for s in self.squares if s > 0)
        return f"Cl({p},{3 - p})"

    @property
    def pseudoscalar_square(self) -> int:
        return int(_TABLES[self][1][PSEUDO, PSEUDO])

    @classmethod
    def parse(cls, text: str | "Signature") -> "Signature":
        if isinstance(text, Signature):
            return text
        key = text.strip().lower().replace("(", "").replace(")", "").replace(",", "")
        key = key if key.startswith("cl") else "cl" + key
        try:
            return cls(key)
        except ValueError:
            raise AlgebraError(f"unknown algebra {text!r}; expected cl03, cl30, cl12 or cl21") from None


_SQUARES = {
    Signature.CL03: (-1, -1, -1),
    Signature.CL30: (1, 1, 1),
    Signature.CL12: (1, -1, -1),
    Signature.CL21: (1, 1, -1),
}


def _blade_product(ma: int, mb: int, squares: Sequence[int]) -> tuple[int, int]:
    """Product of two basis blades given as bitmasks -> (sign, mask)."""
    sign = 1
    # count transpositions needed to sort the concatenated generator list
    a = ma >> 1
    while a:
        sign *= (-1) ** bin(a & mb).count("1")
        a >>= 1
    common = ma & mb
    for i in range(3):
        if common & (1 << i):
            sign *= squares[i]
    return sign, ma ^ mb


def _build_table(sig: Signature) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    idx = np.zeros((8, 8), dtype=np.intp)
    sgn = np.zeros((8, 8), dtype=np.int64)
    for i, mi in enumerate(_MASKS):
        for j, mj in enumerate(_MASKS):
            s, m = _blade_product(mi, mj, _SQUARES[sig])
            idx[i, j] = _SLOT_OF_MASK[m]
            sgn[i, j] = s
    # dense structure tensor: (a*b)_k = sum_ij a_i b_j G[i, j, k]
    tensor = np.zeros((8, 8, 8))
    for i in range(8):
        for j in range(8):
            tensor[i, j, idx[i, j]] = sgn[i, j]
    return idx, sgn, tensor


_TABLES = {sig: _build_table(sig) for sig in Signature}

_REV = np.array([1, 1, 1, 1, -1, -1, -1, -1], dtype=float)
_GINV = np.array([1, -1, -1, -1, 1, 1, 1, -1], dtype=float)
_CONJ = _REV * _GINV


def product_table(sig: Signature) -> tuple[np.ndarray, np.ndarray]:
    """Return the ``(slot index, sign)`` tables of the geometric product."""
    idx, sgn, _ = _TABLES[sig]
    return idx.copy(), sgn.copy()


def gp_array(a: np.ndarray, b: np.ndarray, sig: Signature) -> np.ndarray:
    """Geometric product on raw coefficient arrays of shape ``(..., 8)``."""
    return np.einsum("...i,...j,ijk->...k", a, b, _TABLES[sig][2])


class Multivector:
    """Immutable element of a 3D real Clifford algebra.

    Supports ``+``, ``-``, ``*`` (geometric product, or scaling by a real),
    ``/`` by a real, and ``~`` (reversion).
    """

    __slots__ = ("_c", "sig")

    def __init__(self, coeffs: Iterable[float], sig: Signature | str):
        c = np.array(coeffs, dtype=float).reshape(-1)
        if c.shape != (8,):
            raise AlgebraError(f"expected 8 coefficients, got {c.shape[0]}")
        if not np.all(np.isfinite(c)):
            raise AlgebraError("multivector coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "sig", Signature.parse(sig))

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # construction helpers
    @classmethod
    def scalar(cls, value: float, sig: Signature | str) -> "Multivector":
        c = np.zeros(8)
        c[0] = value
        return cls(c, sig)

    @classmethod
    def zero(cls, sig: Signature | str) -> "Multivector":
        return cls(np.zeros(8), sig)

    @classmethod
    def basis(cls, label: str, sig: Signature | str) -> "Multivector":
        key = "e123" if label == "I" else label
        if key not in BASIS_LABELS:
            raise AlgebraError(f"unknown basis element {label!r}")
        c = np.zeros(8)
        c[BASIS_LABELS.index(key)] = 1.0
        return cls(c, sig)

    @classmethod
    def from_grades(cls, sig, scalar=0.0, vector=(0, 0, 0), bivector=(0, 0, 0), pseudo=0.0):
        """Assemble from ``scalar``, ``(a1,a2,a3)``, ``(a12,a13,a23)``, ``a123``."""
        return cls([scalar, *vector, *bivector, pseudo], sig)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    def __getitem__(self, label: str | int) -> float:
        if isinstance(label, (int, np.integer)):
            return float(self._c[label])
        key = "e123" if label == "I" else label
        return float(self._c[BASIS_LABELS.index(key)])

    # grade access
    @property
    def a0(self) -> float:
        return float(self._c[0])

    @property
    def a123(self) -> float:
        return float(self._c[7])

    @property
    def vector(self) -> np.ndarray:
        return self._c[1:4].copy()

    @property
    def bivector(self) -> np.ndarray:
        return self._c[4:7].copy()

    def grade_view(self) -> "GradeView":
        return GradeView(self.a0, tuple(self._c[1:4]), tuple(self._c[4:7]), self.a123)

    def grade(self, *grades: int) -> "Multivector":
        mask = np.isin(_GRADES, grades)
        return Multivector(np.where(mask, self._c, 0.0), self.sig)

    def vector_bivector(self) -> "Multivector":
        """The grade-1 plus grade-2 part ``a + A``."""
        return self.grade(1, 2)

    # arithmetic
    def _check(self, other: "Multivector") -> None:
        if other.sig is not self.sig:
            raise AlgebraError(f"signature mismatch: {self.sig.label} vs {other.sig.label}")

    def _coerce(self, other) -> "Multivector | None":
        if isinstance(other, Multivector):
            self._check(other)
            return other
        if isinstance(other, (int, float, np.integer, np.floating)):
            return Multivector.scalar(float(other), self.sig)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Multivector(self._c + o._c, self.sig)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Multivector(self._c - o._c, self.sig)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Multivector(o._c - self._c, self.sig)

    def __neg__(self):
        return Multivector(-self._c, self.sig)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, float, np.integer, np.floating)):
            return Multivector(self._c * float(other), self.sig)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.integer, np.floating)):
            return Multivector(self._c * float(other), self.sig)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, np.integer, np.floating)):
            return Multivector(self._c / float(other), self.sig)
        return NotImplemented

    def __invert__(self):
        return self.reverse()

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig is other.sig and bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash((self.sig, self._c.tobytes()))

    # involutions
    def reverse(self) -> "Multivector":
        return Multivector(self._c * _REV, self.sig)

    def grade_involution(self) -> "Multivector":
        return Multivector(self._c * _GINV, self.sig)

    def clifford_conjugate(self) -> "Multivector":
        return Multivector(self._c * _CONJ, self.sig)

    def scale(self) -> float:
        """Largest coefficient magnitude (used to scale zero tests)."""
        return float(np.max(np.abs(self._c)))

    def allclose(self, other: "Multivector", atol: float = 1e-9) -> bool:
        self._check(other)
        return bool(np.allclose(self._c, other._c, rtol=0.0, atol=atol))

    def __repr__(self):
        return f"Multivector({format_mv(self)}, {self.sig.value})"

    def __str__(self):
        return format_mv(self)


class GradeView:
    """Grade decomposition ``a0 + a + A + a123 I`` of a multivector."""

    __slots__ = ("scalar", "vector", "bivector", "pseudoscalar")

    def __init__(self, scalar, vector, bivector, pseudoscalar):
        self.scalar = float(scalar)
        self.vector = tuple(float(x) for x in vector)
        self.bivector = tuple(float(x) for x in bivector)
        self.pseudoscalar = float(pseudoscalar)

    def assemble(self, sig: Signature | str) -> Multivector:
        return Multivector.from_grades(sig, self.scalar, self.vector, self.bivector, self.pseudoscalar)


def format_mv(a: Multivector, digits: int = 10) -> str:
    parts = []
    for label, x in zip(BASIS_LABELS, a.coeffs):
        if x == 0:
            continue
        mag = f"{abs(x):.{digits}g}"
        body = mag if label == "1" else f"{mag}*{label}"
        parts.append(("- " if x < 0 else "+ ") + body)
    if not parts:
        return "0"
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    if a.sig is not b.sig:
        raise AlgebraError(f"signature mismatch: {a.sig.label} vs {b.sig.label}")
    return Multivector(gp_array(a.coeffs, b.coeffs, a.sig), a.sig)


def involutions(a: Multivector) -> tuple[Multivector, Multivector, Multivector]:
    """Return ``(reverse, grade involution, Clifford conjugate)``."""
    return a.reverse(), a.grade_involution(), a.clifford_conjugate()


def _four_factor(a: Multivector) -> Multivector:
    rev = a.reverse()
    ginv = a.grade_involution()
    return a * rev * ginv * ginv.reverse()


def determinant(a: Multivector) -> float:
    """Scalar ``A Ã Â Â~`` (the four-factor determinant of a 3D multivector)."""
    prod = _four_factor(a)
    c = prod.coeffs
    residue = float(np.max(np.abs(c[1:])))
    bound = 1e-9 * max(abs(c[0]), a.scale() ** 4, np.finfo(float).tiny)
    if residue > bound:
        raise AssertionError(f"determinant has non-scalar residue {residue:g}")
    return float(c[0])


def norm(a: Multivector) -> float:
    """Determinant (semi-)norm ``|Det A|^(1/4)``."""
    return abs(determinant(a)) ** 0.25


def adjugate(a: Multivector) -> Multivector:
    rev = a.reverse()
    ginv = a.grade_involution()
    return rev * ginv * ginv.reverse()


def inverse(a: Multivector, tol: float | None = None) -> Multivector:
    """Inverse via the adjugate ``Ã Â Â~`` divided by the determinant."""
    tol = get_tolerance() if tol is None else tol
    det = determinant(a)
    if abs(det) <= tol * max(a.scale(), 1e-300) ** 4 or det == 0.0:
        raise NonInvertibleError(f"multivector {a} has zero determinant")
    return adjugate(a) / det


def dot_wedge_split(
    vector: Sequence[float], bivector: Sequence[float], sig: Signature | str
) -> tuple[float, float, float]:
    """Return ``(a.a, A.A, coefficient of I in a^A)`` for a vector and bivector."""
    sig = Signature.parse(sig)
    a = Multivector.from_grades(sig, vector=vector)
    B = Multivector.from_grades(sig, bivector=bivector)
    aa = (a * a).a0
    bb = (B * B).a0
    w = (a * B).a123
    return aa, bb, w


# Cl(3,0) slot -> (Cl(1,2) slot, sign). The plain exchange
# e1,e2,e3 -> -e1,-e12,-e13 reverses products; composing it with
# reversion on the Cl(1,2) side gives a product-preserving map.
_EXCHANGE_30_TO_12 = ((0, 1), (1, -1), (4, -1), (5, -1), (2, -1), (3, -1), (6, 1), (7, -1))
_ISO_30_TO_12 = ((0, 1), (1, -1), (4, 1), (5, 1), (2, -1), (3, -1), (6, -1), (7, 1))


def _signed_permutation(a: Multivector, table) -> Multivector:
    out = np.zeros(8)
    if a.sig is Signature.CL30:
        for src, (dst, s) in enumerate(table):
            out[dst] = s * a.coeffs[src]
        return Multivector(out, Signature.CL12)
    if a.sig is Signature.CL12:
        for src, (dst, s) in enumerate(table):
            out[src] = s * a.coeffs[dst]
        return Multivector(out, Signature.CL30)
    raise AlgebraError(f"map defined only between Cl(3,0) and Cl(1,2), got {a.sig.label}")


def isomorphism_cl30_cl12(a: Multivector) -> Multivector:
    """Algebra isomorphism Cl(3,0) <-> Cl(1,2): ``f(ab) = f(a) f(b)``.

    Basis images: ``1, -e1, e12, e13, -e2, -e3, -e23, e123``.
    """
    return _signed_permutation(a, _ISO_30_TO_12)


def exchange_cl30_cl12(a: Multivector) -> Multivector:
    """Basis exchange ``1, -e1, -e12, -e13, -e2, -e3, e23, -e123``.

    This one is an anti-isomorphism, ``f(ab) = f(b) f(a)``; it equals
    :func:`isomorphism_cl30_cl12` followed by reversion.
    """
    return _signed_permutation(a, _EXCHANGE_30_TO_12)


def is_zero(x: float, scale: float, tol: float | None = None) -> bool:
    """Relative zero test ``|x| <= tol * scale`` shared by all case dispatch."""
    tol = get_tolerance() if tol is None else tol
    return abs(x) <= tol * scale
