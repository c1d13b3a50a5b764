"""Exact limit values and limit points of totally periodic radicals.

For a block of signs with running products ``delta_i`` and partial sums
``sigma_j = sum_{i<=j} delta_i / 2**i`` (``sigma_0 = 0``), the infinite sum is
``2**p * sigma_p / (2**p - delta_p)``; the radical converges to ``2cos(q*pi)``
with ``q = (1 - that sum) / 4``. The scaled errors ``2**n (r_inf - r_n)``
split into ``p`` (``delta_p = 1``) or ``2p`` (``delta_p = -1``) subsequences,
subsequence ``j`` tending to ``c_j * pi * sin(q*pi)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .codec import deltas, primitive_root
from .errors import DomainError
from .interval import DyadicInterval, sin_pi, pi_interval


@dataclass(frozen=True)
class SigmaTable:
    block: tuple[int, ...]
    delta: tuple[int, ...]
    sigma: tuple[Fraction, ...]
    delta_p: int

    @property
    def p(self) -> int:
        return len(self.block)

    @property
    def subsequences(self) -> int:
        """Number of residue classes the error sequence splits into."""
        return self.p if self.delta_p == 1 else 2 * self.p

    @property
    def infinite_sum(self) -> Fraction:
        p = self.p
        return 2**p * self.sigma[p] / (2**p - self.delta_p)


def sigma_table(block: Sequence[int]) -> SigmaTable:
    """Exact deltas and sigmas up to index ``p`` (or ``2p`` when ``delta_p = -1``)."""
    block = tuple(block)
    if not block:
        raise DomainError("block must be nonempty")
    delta_p = deltas(block)[-1]
    length = len(block) if delta_p == 1 else 2 * len(block)
    d = [0] + deltas((block * 2)[:length])
    sigma = [Fraction(0)]
    for i in range(1, length + 1):
        sigma.append(sigma[-1] + Fraction(d[i], 2**i))
    return SigmaTable(block, tuple(d), tuple(sigma), delta_p)


def limit_value(block: Sequence[int]) -> Fraction:
    """``q`` with limit ``2cos(q*pi)``; the all-plus block gives the sentinel 0."""
    return (1 - sigma_table(block).infinite_sum) / 4


@dataclass(frozen=True)
class LimitPointSet:
    q: Fraction
    coefficients: tuple[Fraction, ...]
    delta_p: int

    def values(self, prec: int) -> list[DyadicInterval]:
        """Enclosures of ``c_j * pi * sin(q*pi)``."""
        scale = pi_interval(prec) * sin_pi(self.q, prec)
        return [scale * c for c in self.coefficients]


def limit_points(block: Sequence[int]) -> LimitPointSet:
    block = primitive_root(tuple(block))
    table = sigma_table(block)
    total = table.infinite_sum
    q = (1 - total) / 4
    if q == 0:
        raise DomainError("the all-plus block has no error limit points")
    coeffs = tuple(
        Fraction(2**j, 2) * (total - table.sigma[j]) for j in range(table.subsequences)
    )
    if len(set(coeffs)) != len(coeffs):
        raise AssertionError(f"repeated limit points for block {block}")
    return LimitPointSet(q, coeffs, table.delta_p)


def first_limit_coefficient(q: Fraction) -> Fraction:
    """Coefficient of the subsequence along whole periods: ``(1 - 4q)/2``."""
    return (1 - 4 * Fraction(q)) / 2
