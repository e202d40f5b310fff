"""Exact scalars over Q and Q(i) with a selectable involution.

A scalar is a pair of ``fractions.Fraction`` values (real and imaginary
part).  Over the plain rationals the imaginary part is pinned to zero by
the field configuration.  All arithmetic is exact; equality is structural.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)


class FieldBase(enum.Enum):
    """Which base field scalars live in."""

    RATIONALS = "rationals"
    GAUSSIAN_RATIONALS = "gaussian_rationals"


class Involution(enum.Enum):
    """The ring involution used for adjoints: identity or complex conjugation."""

    IDENTITY = "identity"
    CONJUGATION = "conjugation"


@dataclass(frozen=True)
class FieldConfig:
    """Base field plus involution.

    Conjugation restricted to the rationals is the identity map, so that
    combination is normalized on construction; two configs that act the
    same way compare equal.
    """

    base: FieldBase = FieldBase.RATIONALS
    involution: Involution = Involution.IDENTITY

    def __post_init__(self) -> None:
        if self.base is FieldBase.RATIONALS and self.involution is Involution.CONJUGATION:
            object.__setattr__(self, "involution", Involution.IDENTITY)

    def involute(self, s: "Scalar") -> "Scalar":
        """Apply the configured involution to one scalar."""
        if self.involution is Involution.CONJUGATION:
            return s.conjugate()
        return s

    def admits(self, s: "Scalar") -> bool:
        """Whether the scalar lies in the configured base field."""
        return self.base is FieldBase.GAUSSIAN_RATIONALS or not s.im


QQ = FieldConfig(FieldBase.RATIONALS, Involution.IDENTITY)
QI_CONJ = FieldConfig(FieldBase.GAUSSIAN_RATIONALS, Involution.CONJUGATION)
QI_IDENT = FieldConfig(FieldBase.GAUSSIAN_RATIONALS, Involution.IDENTITY)


class Scalar:
    """An element of Q(i): exact real and imaginary parts.

    Instances are treated as immutable; arithmetic returns new objects.
    Plain ints and Fractions coerce in mixed arithmetic.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Fraction | int = 0, im: Fraction | int = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Scalar | int | Fraction") -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: "Scalar | int | Fraction") -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: "Scalar | int | Fraction") -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(other.re - self.re, other.im - self.im)

    def __mul__(self, other: "Scalar | int | Fraction") -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Scalar(a * c, _F0)
        return Scalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other: "Scalar | int | Fraction") -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other: "Scalar | int | Fraction") -> "Scalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inv() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inv(self) -> "Scalar":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        a, b = self.re, self.im
        if not b:
            return Scalar(_F1 / a, _F0)  # raises ZeroDivisionError if a == 0
        d = a * a + b * b
        return Scalar(a / d, -b / d)

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    # -- predicates and hashing ----------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"


def _coerce(value: object) -> Scalar | None:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Scalar(value)
    return None


ZERO = Scalar(0)
ONE = Scalar(1)
IMAG = Scalar(0, 1)


class ParseError(ValueError):
    """A scalar literal failed to parse; carries the offending position."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def parse_scalar(text: str, cfg: FieldConfig | None = None) -> Scalar:
    """Parse a scalar literal.

    Accepted forms: ``5``, ``-3``, ``1/2``, ``-7/3``, ``i``, ``-i``,
    ``3/4i``, ``1/2+3/4i``, ``2-i``.  Denominators are unsigned and
    nonzero; no whitespace inside the literal (surrounding whitespace is
    tolerated).  When ``cfg`` restricts to the rationals, imaginary parts
    are rejected.
    """
    pos = 0
    n = len(text)
    while pos < n and text[pos].isspace():
        pos += 1
    while n > pos and text[n - 1].isspace():
        n -= 1
    if pos >= n:
        raise ParseError("empty scalar", text, pos)

    def peek() -> str:
        return text[pos] if pos < n else ""

    def read_unsigned_rational() -> Fraction:
        nonlocal pos
        start = pos
        while pos < n and "0" <= text[pos] <= "9":
            pos += 1
        if pos == start:
            raise ParseError("expected digits", text, start)
        num = int(text[start:pos])
        if peek() == "/":
            pos += 1
            dstart = pos
            while pos < n and "0" <= text[pos] <= "9":
                pos += 1
            if pos == dstart:
                raise ParseError("expected digits after '/'", text, dstart)
            den = int(text[dstart:pos])
            if den == 0:
                raise ParseError("zero denominator", text, dstart)
            return Fraction(num, den)
        return Fraction(num)

    sign = 1
    if peek() == "-":
        sign = -1
        pos += 1

    if peek() == "i":
        pos += 1
        value = Scalar(_F0, Fraction(sign))
    else:
        mag = read_unsigned_rational()
        if peek() == "i":
            pos += 1
            value = Scalar(_F0, sign * mag)
        elif peek() in ("+", "-"):
            sign2 = 1 if text[pos] == "+" else -1
            pos += 1
            if peek() == "i":
                pos += 1
                value = Scalar(sign * mag, Fraction(sign2))
            else:
                mag2 = read_unsigned_rational()
                if peek() != "i":
                    raise ParseError("expected 'i'", text, pos)
                pos += 1
                value = Scalar(sign * mag, sign2 * mag2)
        else:
            value = Scalar(sign * mag, _F0)

    if pos != n:
        raise ParseError("unexpected trailing characters", text, pos)
    if cfg is not None and not cfg.admits(value):
        raise ParseError("imaginary part not allowed over the rationals", text, 0)
    return value


def format_scalar(s: Scalar) -> str:
    """Canonical text for a scalar; inverse of :func:`parse_scalar`."""
    re_, im_ = s.re, s.im
    if not im_:
        return str(re_)
    if im_ == 1:
        itxt = "i"
    elif im_ == -1:
        itxt = "-i"
    else:
        itxt = f"{im_}i"
    if not re_:
        return itxt
    if im_ > 0:
        return f"{re_}+{itxt}"
    return f"{re_}{itxt}"


def involute(s: Scalar, cfg: FieldConfig) -> Scalar:
    """Module-level spelling of ``cfg.involute(s)``."""
    return cfg.involute(s)
