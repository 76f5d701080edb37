"""Exact arithmetic in a quadratic extension of the rationals.

A QuadExt represents a + b*sqrt(d) with rational a, b and a fixed rational
radicand d that is not a perfect square.  Values with b == 0 collapse to
plain Fractions at construction, so series code can treat "Fraction or
QuadExt" as one coefficient domain.  Mixing two different radicands in one
computation is rejected: a certificate carries at most one square root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import RadicandMismatch

Coeff = "Fraction | QuadExt"


def sqrt_exact(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    rn = isqrt(q.numerator)
    rd = isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _as_pair(value, d: Fraction) -> tuple[Fraction, Fraction]:
    """View a coefficient as (a, b) over sqrt(d)."""
    if isinstance(value, QuadExt):
        if value.b != 0 and value.d != d:
            raise RadicandMismatch(f"cannot mix sqrt({value.d}) with sqrt({d})")
        return value.a, value.b
    return Fraction(value), Fraction(0)


@dataclass(frozen=True)
class QuadExt:
    """a + b*sqrt(d), exact.  Use make() so rational values fold to Fraction."""

    a: Fraction
    b: Fraction
    d: Fraction

    @staticmethod
    def make(a, b, d):
        """Build a + b*sqrt(d), returning a plain Fraction when possible."""
        a, b, d = Fraction(a), Fraction(b), Fraction(d)
        if b == 0:
            return a
        root = sqrt_exact(d)
        if root is not None:
            return a + b * root
        return QuadExt(a, b, d)

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - b^2 d (product with the conjugate)."""
        return self.a * self.a - self.b * self.b * self.d

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __add__(self, other):
        oa, ob = _as_pair(other, self.d)
        return QuadExt.make(self.a + oa, self.b + ob, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadExt) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        oa, ob = _as_pair(other, self.d)
        return QuadExt.make(
            self.a * oa + self.b * ob * self.d, self.a * ob + self.b * oa, self.d
        )

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("quadratic-extension value has zero norm")
        return QuadExt.make(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            return self * other.inverse()
        return QuadExt.make(self.a / Fraction(other), self.b / Fraction(other), self.d)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if self.b == 0:
            return self.a == other
        return False

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def sign(self) -> int:
        """Sign of a + b*sqrt(d) for d > 0, evaluated exactly."""
        if self.d <= 0:
            raise ValueError("sign is defined only for positive radicands")
        if self.b == 0:
            return -1 if self.a < 0 else (1 if self.a > 0 else 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        # Opposite signs: compare a^2 against b^2 d.
        lhs = self.a * self.a
        rhs = self.b * self.b * self.d
        if lhs == rhs:
            return 0
        dominant_a = lhs > rhs
        if dominant_a:
            return 1 if self.a > 0 else -1
        return 1 if self.b > 0 else -1

    def __repr__(self):
        return f"({self.a} + {self.b}*sqrt({self.d}))"


def coeff_sign(c) -> int:
    """Sign of a Fraction or QuadExt coefficient."""
    if isinstance(c, QuadExt):
        return c.sign()
    return -1 if c < 0 else (1 if c > 0 else 0)


def coeff_is_zero(c) -> bool:
    if isinstance(c, QuadExt):
        return c.a == 0 and c.b == 0
    return c == 0


def coeff_radicand(c) -> Fraction | None:
    """Radicand carried by a coefficient, or None for rational values."""
    if isinstance(c, QuadExt) and c.b != 0:
        return c.d
    return None
