"""Tiny grammar for multivector literals.

    expr := [sign] term (sign term)*
    term := coeff [['*'] blade] | blade
    coeff := decimal ['/' decimal]
    blade := e1 | e2 | e3 | e12 | e13 | e23 | e123 | I

Whitespace is ignored between tokens. Repeated blades are summed.
Scientific notation is not accepted since ``3e123`` means ``3 * e123``.
"""

from __future__ import annotations

import re
from fractions import Fraction

import numpy as np

from galog.core import BASIS_LABELS, Multivector, Signature

_NUMBER = re.compile(r"\d+(?:\.\d*)?|\.\d+")
_BLADE = re.compile(r"e\d+|I")
_SLOT = {label: i for i, label in enumerate(BASIS_LABELS) if label != "1"}
_SLOT["I"] = _SLOT["e123"]


class MvSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def match(self, pattern: re.Pattern) -> str | None:
        self.skip()
        m = pattern.match(self.text, self.pos)
        if m is None:
            return None
        self.pos = m.end()
        return m.group(0)

    def error(self, message: str) -> MvSyntaxError:
        return MvSyntaxError(message, self.text, self.pos)


def _coefficient(sc: _Scanner) -> Fraction | None:
    num = sc.match(_NUMBER)
    if num is None:
        return None
    value = Fraction(num)
    if sc.peek() == "/":
        sc.pos += 1
        den = sc.match(_NUMBER)
        if den is None:
            raise sc.error("expected a denominator")
        if Fraction(den) == 0:
            raise sc.error("zero denominator")
        value /= Fraction(den)
    return value


def _blade(sc: _Scanner) -> int | None:
    start = sc.pos
    tok = sc.match(_BLADE)
    if tok is None:
        return None
    if tok not in _SLOT:
        sc.pos = start
        sc.skip()
        raise sc.error(f"unknown basis element {tok!r}")
    return _SLOT[tok]


def _term(sc: _Scanner) -> tuple[Fraction, int]:
    coeff = _coefficient(sc)
    if coeff is None:
        slot = _blade(sc)
        if slot is None:
            raise sc.error("expected a coefficient or basis element")
        return Fraction(1), slot
    if sc.peek() == "*":
        sc.pos += 1
        slot = _blade(sc)
        if slot is None:
            raise sc.error("expected a basis element after '*'")
        return coeff, slot
    slot = _blade(sc)
    return coeff, (0 if slot is None else slot)


def parse_coefficients(text: str) -> list[Fraction]:
    """Exact coefficients in basis order."""
    sc = _Scanner(text)
    coeffs = [Fraction(0)] * 8
    sign = 1
    if sc.peek() in "+-" and sc.peek():
        sign = -1 if sc.peek() == "-" else 1
        sc.pos += 1
    while True:
        if not sc.peek():
            raise sc.error("unexpected end of input")
        c, slot = _term(sc)
        coeffs[slot] += sign * c
        nxt = sc.peek()
        if not nxt:
            return coeffs
        if nxt not in "+-":
            raise sc.error(f"expected '+' or '-' but found {nxt!r}")
        sign = -1 if nxt == "-" else 1
        sc.pos += 1


def parse_mv(text: str, sig: Signature | str) -> Multivector:
    return Multivector([float(c) for c in parse_coefficients(text)], Signature.parse(sig))


def format_coefficient(x: float, digits: int = 10) -> str:
    """Positional notation, so the output stays inside the grammar."""
    return np.format_float_positional(abs(float(x)), precision=digits, fractional=False, trim="-")


def print_mv(a: Multivector, digits: int = 10) -> str:
    """Inverse of :func:`parse_mv` up to ``digits`` significant digits."""
    parts = []
    for label, x in zip(BASIS_LABELS, a.coeffs):
        mag = format_coefficient(x, digits)
        if float(mag) == 0:
            continue
        body = mag if label == "1" else f"{mag}*{label}"
        parts.append(("- " if x < 0 else "+ ") + body)
    if not parts:
        return "0"
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]
