"""Exact rational and modular primitives.

Angles are rationals ``q`` read as ``q*pi``; nothing in this module touches
floating point.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from math import gcd

from .errors import DomainError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str, require_reduced: bool = True) -> Fraction:
    """Parse ``"t/s"`` or ``"t"``. Non-reduced fractions are rejected by default."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError("zero denominator")
    if require_reduced and gcd(num, den) != 1 and not (num == 0 and den == 1):
        raise ValueError(f"fraction {text.strip()} is not reduced")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def mod_pow(base: int, exp: int, modulus: int) -> int:
    if modulus < 1:
        raise DomainError("modulus must be positive")
    if exp < 0:
        raise DomainError("exponent must be non-negative")
    return pow(base, exp, modulus)


def split_two_power(n: int) -> tuple[int, int]:
    """Return ``(k, s)`` with ``n = 2**k * s`` and ``s`` odd (n > 0)."""
    k = (n & -n).bit_length() - 1
    return k, n >> k


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_order(a: int, s: int) -> int:
    """Order of ``a`` in the unit group mod ``s`` (requires gcd(a, s) = 1)."""
    if s < 2 or gcd(a, s) != 1:
        raise DomainError("a must be a unit modulo s >= 2")
    phi = 1
    for p, e in _factor(s).items():
        phi *= (p - 1) * p ** (e - 1)
    order = phi
    for p in _factor(phi):
        while order % p == 0 and pow(a, order // p, s) == 1:
            order //= p
    return order


def semi_order(s: int) -> tuple[int, int]:
    """Smallest ``p >= 1`` with ``2**p = +-1 (mod s)``, and which sign occurs.

    If -1 lies in the cyclic group generated by 2 it is reached exactly at half
    the order, so the semi-order is either the order or half of it.
    """
    if s < 3 or s % 2 == 0:
        raise DomainError(f"semi-order needs an odd modulus >= 3, got {s}")
    order = multiplicative_order(2, s)
    if order % 2 == 0 and pow(2, order // 2, s) == s - 1:
        return order // 2, -1
    return order, 1


class Quadrant(enum.Enum):
    FIRST = "first"
    SECOND = "second"
    THIRD = "third"
    FOURTH = "fourth"
    ON_AXIS_COS_ZERO = "on_axis_cos_zero"


_HALF = Fraction(1, 2)
_THREE_HALVES = Fraction(3, 2)


def reduce_angle(angle: Fraction) -> Fraction:
    """Representative of ``angle`` modulo 2 in ``[0, 2)``."""
    return Fraction(angle) % 2


def quadrant(angle: Fraction) -> Quadrant:
    """Quadrant of ``angle*pi``; the cos-zero axis gets its own tag.

    The axis at 0 counts as first, the axis at pi as second.
    """
    r = reduce_angle(angle)
    if r == _HALF or r == _THREE_HALVES:
        return Quadrant.ON_AXIS_COS_ZERO
    if r < _HALF:
        return Quadrant.FIRST
    if r <= 1:
        return Quadrant.SECOND
    if r < _THREE_HALVES:
        return Quadrant.THIRD
    return Quadrant.FOURTH


def cos_sign(angle: Fraction) -> int:
    """Sign of ``cos(angle*pi)`` as +1, -1 or 0."""
    quad = quadrant(angle)
    if quad is Quadrant.ON_AXIS_COS_ZERO:
        return 0
    return 1 if quad in (Quadrant.FIRST, Quadrant.FOURTH) else -1
