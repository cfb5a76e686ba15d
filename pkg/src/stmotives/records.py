"""Shared record types for L-polynomial data."""

from __future__ import annotations

from dataclasses import dataclass


class SkippedPrime(Exception):
    """Raised when a construction has no good L-polynomial at this prime."""


class DegenerateFiber(SkippedPrime):
    """Dwork pencil fiber is singular mod p (z = 0, 1 or infinity mod p)."""


class ConsistencyError(ArithmeticError):
    """An internal invariant (Weil bound, integrality) failed: a real bug."""


@dataclass(frozen=True)
class LPoly:
    """Coefficient data of the degree-4 Euler factor
    p^6 T^4 + c1 p^3 T^3 + c2 p T^2 + c1 T + 1 at a good prime p."""

    p: int
    c1: int
    c2: int

    def __post_init__(self):
        if self.c1 * self.c1 > 16 * self.p**3:
            raise ConsistencyError(f"|c1|={abs(self.c1)} breaks the Weil bound at p={self.p}")
        if not (-2 * self.p**2 <= self.c2 <= 6 * self.p**2):
            raise ConsistencyError(f"c2={self.c2} out of range at p={self.p}")

    def coefficients(self) -> tuple[int, int, int, int, int]:
        p = self.p
        return (1, self.c1, self.c2 * p, self.c1 * p**3, p**6)


@dataclass(frozen=True)
class NormalizedCoeffs:
    a1: float
    a2: float


def normalize(lp: LPoly) -> NormalizedCoeffs:
    """a1 = c1/p^(3/2) in [-4,4], a2 = c2/p^2 in [-2,6]."""
    return NormalizedCoeffs(lp.c1 / lp.p**1.5, lp.c2 / lp.p**2)
