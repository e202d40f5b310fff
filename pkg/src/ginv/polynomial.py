"""Dense univariate polynomials over the exact scalar field.

Coefficients are stored constant-term first with trailing zeros stripped,
so equal polynomials are structurally equal.  The zero polynomial has an
empty coefficient tuple and degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .field import ONE, ZERO, Scalar


def _as_scalar(value: Scalar | int | Fraction) -> Scalar:
    return value if isinstance(value, Scalar) else Scalar(value)


class Polynomial:
    """Immutable polynomial with exact scalar coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar | int | Fraction] = ()):
        items = [_as_scalar(c) for c in coeffs]
        while items and not items[-1]:
            items.pop()
        self.coeffs = tuple(items)

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((ONE,))

    @classmethod
    def lambda_power(cls, k: int) -> "Polynomial":
        """The monomial lambda^k."""
        return cls((ZERO,) * k + (ONE,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == ONE

    def monic(self) -> "Polynomial":
        lead = self.leading()
        if lead == ONE:
            return self
        inv = lead.inv()
        return Polynomial(tuple(c * inv for c in self.coeffs))

    def coefficient(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    def scale(self, s: Scalar | int | Fraction) -> "Polynomial":
        s = _as_scalar(s)
        return Polynomial(tuple(c * s for c in self.coeffs))

    def shifted(self, k: int) -> "Polynomial":
        """Multiply by lambda^k."""
        if not self.coeffs:
            return self
        return Polynomial((ZERO,) * k + self.coeffs)

    def __divmod__(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dcoeffs = divisor.coeffs
        dd = len(dcoeffs) - 1
        lead_inv = dcoeffs[-1].inv()
        if len(rem) - 1 < dd:
            return Polynomial(), self
        quot = [ZERO] * (len(rem) - dd)
        for top in range(len(rem) - 1, dd - 1, -1):
            c = rem[top]
            if not c:
                continue
            q = c * lead_inv
            quot[top - dd] = q
            for j in range(dd + 1):
                rem[top - dd + j] = rem[top - dd + j] - q * dcoeffs[j]
        return Polynomial(quot), Polynomial(rem)

    def divides(self, other: "Polynomial") -> bool:
        """Whether self divides other exactly."""
        _, rem = divmod(other, self)
        return rem.is_zero()

    # -- evaluation ----------------------------------------------------

    def __call__(self, x: Scalar | int | Fraction) -> Scalar:
        x = _as_scalar(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, a):
        """Evaluate at a square matrix (Horner), identity for the constant term."""
        ident = a.identity_like()
        if not self.coeffs:
            return ident.scale(ZERO)
        acc = ident.scale(self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * a + ident.scale(c)
        return acc

    # -- structure -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Polynomial()"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                var = "x" if k == 1 else f"x^{k}"
                terms.append(var if c == ONE else f"({c})*{var}")
        return "Polynomial[" + " + ".join(terms) + "]"


def zero_multiplicity(p: Polynomial) -> tuple[int, Polynomial]:
    """Split p = lambda^k * g with g(0) != 0; returns (k, g).

    The multiplicity of the root 0, applied to a minimal polynomial, is
    the Drazin index of the underlying matrix.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no zero-root multiplicity")
    k = 0
    while not p.coeffs[k]:
        k += 1
    return k, Polynomial(p.coeffs[k:])
