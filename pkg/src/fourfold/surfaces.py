"""Surface-classification thresholds on the invariant deg(c1^2 - c2)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoetherViolation

UPPER_BOUND = "upper_bound"
EXACT_VALUE = "exact_value"


@dataclass(frozen=True)
class NotGeneralType:
    pass


@dataclass(frozen=True)
class ChiAtMost:
    r: int


@dataclass(frozen=True)
class ChiAndK2:
    r: int
    q: int


SurfaceConstraint = NotGeneralType | ChiAtMost | ChiAndK2


def invariant_threshold(c: SurfaceConstraint) -> tuple[str, int]:
    """Translate a surface constraint into a bound on c1^2 - c2.

    Surfaces not of general type have invariant at most 6; chi(O_S) <= r
    gives at most 6r (BMY plus Noether); chi = r together with K^2 = q pins
    the invariant to -12r + 2q.
    """
    if isinstance(c, NotGeneralType):
        return UPPER_BOUND, 6
    if isinstance(c, ChiAtMost):
        return UPPER_BOUND, 6 * c.r
    if isinstance(c, ChiAndK2):
        return EXACT_VALUE, -12 * c.r + 2 * c.q
    raise TypeError(f"unknown constraint {c!r}")


def chi_noether(c1sq: int, c2: int) -> int:
    total = c1sq + c2
    if total % 12:
        raise NoetherViolation(f"c1^2 + c2 = {total} is not divisible by 12")
    return total // 12


def invariant_from_chern(c1sq: int, c2: int) -> int:
    return c1sq - c2


def blowup_invariant(inv: int, points: int) -> int:
    """Invariant after blowing up ``points`` points (each blow-up lowers it by 2)."""
    if points < 0:
        raise ValueError("number of points must be nonnegative")
    return inv - 2 * points


def blowup_chern(c1sq: int, c2: int, points: int = 1) -> tuple[int, int]:
    return c1sq - points, c2 + points
