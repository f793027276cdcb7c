"""Exact arithmetic in the quadratic integer ring Z[sqrt(2)].

A value is a pair (a, b) of unbounded integers standing for a + b*sqrt(2).
Powers of the Pell units 3 + 2*sqrt(2) and 1 + sqrt(2) therefore expand
exactly at any exponent, which is what lets the closed forms for the
balancing-family sequences be evaluated without any floating point.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class QuadInt:
    """Element a + b*sqrt(2) of Z[sqrt(2)].

    The (a, b) representation is canonical: two elements are equal iff both
    components are equal, which the generated dataclass equality provides.
    """

    a: int
    b: int

    def __add__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.a, -self.b)

    def __mul__(self, other: QuadInt) -> QuadInt:
        # (a1 + b1*s)(a2 + b2*s) with s^2 = 2
        return QuadInt(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __pow__(self, k: int) -> QuadInt:
        if k < 0:
            raise ValueError("exponent must be nonnegative, got %d" % k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> QuadInt:
        """Conjugate a + b*sqrt(2) -> a - b*sqrt(2); a ring homomorphism."""
        return QuadInt(self.a, -self.b)

    def norm(self) -> int:
        """Field norm a^2 - 2*b^2; multiplicative over products."""
        return self.a * self.a - 2 * self.b * self.b

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}*sqrt(2)"


ONE = QuadInt(1, 0)

# Fundamental solution of x^2 - 8*y^2 = 1 and its conjugate: norm 1 units.
LAMBDA1 = QuadInt(3, 2)
LAMBDA2 = QuadInt(3, -2)

# Fundamental unit of Z[sqrt(2)] and its conjugate: norm -1.
ALPHA1 = QuadInt(1, 1)
ALPHA2 = QuadInt(1, -1)


def qmul(x: QuadInt, y: QuadInt) -> QuadInt:
    """Ring product of two elements."""
    return x * y


def qpow(x: QuadInt, k: int) -> QuadInt:
    """x**k for k >= 0 by square-and-multiply; qpow(x, 0) is the identity."""
    return x ** k


def qconj(x: QuadInt) -> QuadInt:
    """Conjugation (sign flip of the sqrt(2) coefficient)."""
    return x.conj()


def qnorm(x: QuadInt) -> int:
    """Norm a^2 - 2*b^2 as a plain integer."""
    return x.norm()
