"""Genus-based admissibility bounds for curves with assigned multiplicities.

A curve C = (alpha, beta) on a hyperelliptic surface has normalisation of
genus at least 1 (it dominates the elliptic base), while the genus formula
bounds the genus from above by C^2/2 + 1 - sum m_i(m_i-1)/2.  Combining the
two, a multiplicity vector (m_1, ..., m_r) is admissible only if

    sum m_i(m_i - 1) <= 2*alpha*beta.

This necessary bound is the sole filter used here; whether a curve actually
realises a vector is never decided (checking a superset is sound).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .lattice import DivisorClass


@dataclass(frozen=True)
class CurveCandidate:
    """A class (alpha, beta) with multiplicities at labeled points."""

    cls: DivisorClass
    mults: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(m < 0 for m in self.mults):
            raise ValueError("multiplicities must be non-negative")
        if not any(m > 0 for m in self.mults):
            raise ValueError("at least one multiplicity must be positive")


def genus_admissible(c: CurveCandidate) -> bool:
    """True iff sum m_i(m_i - 1) <= 2*alpha*beta."""
    return sum(m * (m - 1) for m in c.mults) <= 2 * c.cls.a * c.cls.b


def max_single_multiplicity(cls: DivisorClass) -> int:
    """Largest m with m(m-1) <= 2*alpha*beta."""
    if cls.a < 1 or cls.b < 1:
        raise ValueError("requires alpha >= 1 and beta >= 1")
    bound = 2 * cls.a * cls.b
    # m^2 - m - bound <= 0  <=>  m <= (1 + sqrt(1 + 4*bound)) / 2
    m = (1 + isqrt(1 + 4 * bound)) // 2
    while m * (m - 1) > bound:
        m -= 1
    return m


def enumerate_admissible(
    cls: DivisorClass, r: int, cap: int
) -> list[tuple[int, ...]]:
    """All non-increasing admissible vectors of length r, entries <= cap, m_1 >= 1.

    Output is in ascending lexicographic order and equals the brute-force
    filter of the full box intersected with non-increasing vectors.
    """
    if r < 1 or cap < 1:
        raise ValueError("need r >= 1 and cap >= 1")
    budget = 2 * cls.a * cls.b
    out: list[tuple[int, ...]] = []
    vec: list[int] = []

    def rec(pos: int, prev: int, used: int) -> None:
        if pos == r:
            out.append(tuple(vec))
            return
        lo = 1 if pos == 0 else 0
        for m in range(lo, prev + 1):
            cost = m * (m - 1)
            if used + cost > budget:
                break
            vec.append(m)
            rec(pos + 1, m, used + cost)
            vec.pop()

    rec(0, cap, 0)
    return out
