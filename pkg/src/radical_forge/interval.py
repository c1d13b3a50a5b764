"""Outward-rounded dyadic interval arithmetic.

An interval is ``[lo_man * 2**exp, hi_man * 2**exp]`` with integer mantissas
of at most ``prec`` bits. Every operation rounds ``lo`` toward -inf and ``hi``
toward +inf, so the exact value is always enclosed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

Number = Union[int, Fraction]


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _scaled_bounds(num: int, den: int, e: int) -> tuple[int, int]:
    """floor and ceil of ``num * 2**e / den`` (den > 0)."""
    if e >= 0:
        n = num << e
        return n // den, _ceil_div(n, den)
    d = den << (-e)
    return num // d, _ceil_div(num, d)


@dataclass(frozen=True)
class DyadicInterval:
    lo_man: int
    hi_man: int
    exp: int
    prec: int

    def __post_init__(self):
        if self.lo_man > self.hi_man:
            raise ValueError("interval with lo > hi")

    # -- construction -------------------------------------------------------

    @classmethod
    def _rounded(cls, lo: int, hi: int, exp: int, prec: int) -> "DyadicInterval":
        n = max(abs(lo).bit_length(), abs(hi).bit_length())
        if n > prec:
            sh = n - prec
            lo >>= sh
            hi = -((-hi) >> sh)
            exp += sh
        return cls(lo, hi, exp, prec)

    @classmethod
    def exact(cls, value: Number, prec: int) -> "DyadicInterval":
        """Interval for an int or Fraction; a point if it is representable."""
        if isinstance(value, int):
            return cls._rounded(value, value, 0, prec)
        value = Fraction(value)
        num, den = value.numerator, value.denominator
        if num == 0:
            return cls(0, 0, 0, prec)
        if den & (den - 1) == 0:
            return cls._rounded(num, num, -(den.bit_length() - 1), prec)
        e = den.bit_length() - abs(num).bit_length() + prec + 1
        lo, hi = _scaled_bounds(num, den, e)
        return cls._rounded(lo, hi, -e, prec)

    @classmethod
    def from_bounds(cls, lo: Number, hi: Number, prec: int) -> "DyadicInterval":
        a = cls.exact(lo, prec)
        b = cls.exact(hi, prec)
        return a.hull(b)

    def _coerce(self, other) -> "DyadicInterval":
        if isinstance(other, DyadicInterval):
            return other
        if isinstance(other, (int, Fraction)):
            return DyadicInterval.exact(other, self.prec)
        return NotImplemented

    def with_prec(self, prec: int) -> "DyadicInterval":
        return DyadicInterval._rounded(self.lo_man, self.hi_man, self.exp, prec)

    # -- endpoints ----------------------------------------------------------

    @property
    def lower(self) -> Fraction:
        return Fraction(self.lo_man) * Fraction(2) ** self.exp

    @property
    def upper(self) -> Fraction:
        return Fraction(self.hi_man) * Fraction(2) ** self.exp

    @property
    def mid(self) -> Fraction:
        return (self.lower + self.upper) / 2

    @property
    def radius(self) -> Fraction:
        return (self.upper - self.lower) / 2

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def __float__(self) -> float:
        return float(self.mid)

    def is_point(self) -> bool:
        return self.lo_man == self.hi_man

    def sign(self) -> int:
        """+1 or -1 if the interval excludes zero, otherwise 0."""
        if self.lo_man > 0:
            return 1
        if self.hi_man < 0:
            return -1
        return 0

    def contains(self, other) -> bool:
        if isinstance(other, DyadicInterval):
            return self.lower <= other.lower and other.upper <= self.upper
        other = Fraction(other)
        return self.lower <= other <= self.upper

    __contains__ = contains

    def overlaps(self, other: "DyadicInterval") -> bool:
        return self.lower <= other.upper and other.lower <= self.upper

    def hull(self, other: "DyadicInterval") -> "DyadicInterval":
        e = min(self.exp, other.exp)
        los = (self.lo_man << (self.exp - e), other.lo_man << (other.exp - e))
        his = (self.hi_man << (self.exp - e), other.hi_man << (other.exp - e))
        return DyadicInterval._rounded(min(los), max(his), e, max(self.prec, other.prec))

    def distance_bound(self, other: "DyadicInterval") -> Fraction:
        """Upper bound on ``|x - y|`` over both intervals."""
        return max(self.upper - other.lower, other.upper - self.lower)

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "DyadicInterval":
        return DyadicInterval(-self.hi_man, -self.lo_man, self.exp, self.prec)

    def __abs__(self) -> "DyadicInterval":
        if self.lo_man >= 0:
            return self
        if self.hi_man <= 0:
            return -self
        return DyadicInterval(0, max(-self.lo_man, self.hi_man), self.exp, self.prec)

    def __add__(self, other) -> "DyadicInterval":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        e = min(self.exp, other.exp)
        lo = (self.lo_man << (self.exp - e)) + (other.lo_man << (other.exp - e))
        hi = (self.hi_man << (self.exp - e)) + (other.hi_man << (other.exp - e))
        return DyadicInterval._rounded(lo, hi, e, max(self.prec, other.prec))

    __radd__ = __add__

    def __sub__(self, other) -> "DyadicInterval":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "DyadicInterval":
        return (-self) + other

    def __mul__(self, other) -> "DyadicInterval":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prods = (
            self.lo_man * other.lo_man,
            self.lo_man * other.hi_man,
            self.hi_man * other.lo_man,
            self.hi_man * other.hi_man,
        )
        return DyadicInterval._rounded(
            min(prods), max(prods), self.exp + other.exp, max(self.prec, other.prec)
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "DyadicInterval":
        if isinstance(other, int) and other != 0:
            return self._div_int(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.sign() == 0:
            raise ZeroDivisionError("divisor interval contains zero")
        quots = [a / b for a in (self.lower, self.upper) for b in (other.lower, other.upper)]
        return DyadicInterval.from_bounds(min(quots), max(quots), max(self.prec, other.prec))

    def __rtruediv__(self, other) -> "DyadicInterval":
        return self._coerce(other) / self

    def _div_int(self, n: int) -> "DyadicInterval":
        if n < 0:
            return (-self)._div_int(-n)
        g = self.prec + n.bit_length() + 2 - max(abs(self.lo_man).bit_length(), abs(self.hi_man).bit_length())
        g = max(g, 0)
        lo = (self.lo_man << g) // n
        hi = _ceil_div(self.hi_man << g, n)
        return DyadicInterval._rounded(lo, hi, self.exp - g, self.prec)

    def scale2(self, k: int) -> "DyadicInterval":
        """Exact multiplication by ``2**k``."""
        return DyadicInterval(self.lo_man, self.hi_man, self.exp + k, self.prec)

    def square(self) -> "DyadicInterval":
        a = abs(self)
        return DyadicInterval._rounded(a.lo_man * a.lo_man, a.hi_man * a.hi_man, 2 * a.exp, a.prec)

    def sqrt(self) -> "DyadicInterval":
        """Square root; a lower endpoint slightly below zero is clamped to zero."""
        if self.hi_man < 0:
            raise ValueError("square root of a negative interval")
        lo = max(self.lo_man, 0)
        hi = self.hi_man
        sh = max(0, 2 * self.prec + 4 - hi.bit_length())
        if (self.exp - sh) % 2:
            sh += 1
        lo <<= sh
        hi <<= sh
        r_lo = math.isqrt(lo)
        r_hi = math.isqrt(hi)
        if r_hi * r_hi < hi:
            r_hi += 1
        return DyadicInterval._rounded(r_lo, r_hi, (self.exp - sh) // 2, self.prec)

    # -- display ------------------------------------------------------------

    def guaranteed_digits(self) -> int | None:
        """Decimal places backed by the width: ``floor(-log10(radius))``."""
        rad = self.radius
        if rad == 0:
            return None
        d = math.floor(math.log10(rad.denominator) - math.log10(rad.numerator))
        while rad * Fraction(10) ** d >= 1:
            d -= 1
        while rad * Fraction(10) ** (d + 1) < 1:
            d += 1
        return d

    def format(self, max_digits: int = 80) -> str:
        d = self.guaranteed_digits()
        if d is None:
            return decimal_string(self.mid, max_digits)
        return f"{decimal_string(self.mid, max(0, min(d, max_digits)))} ± {float(self.radius):.1e}"

    def to_json(self, max_digits: int = 80) -> dict:
        d = self.guaranteed_digits()
        shown = max_digits if d is None else max(0, min(d, max_digits))
        return {
            "mid": decimal_string(self.mid, shown),
            "radius": f"{float(self.radius):.3e}",
            "digits": d,
        }

    def __str__(self) -> str:
        return self.format()


def decimal_string(x: Fraction, places: int) -> str:
    """``x`` rounded to ``places`` decimal places (half away from zero)."""
    scaled = x * 10**places
    n = math.floor(abs(scaled) + Fraction(1, 2))
    sign = "-" if x < 0 and n != 0 else ""
    digits = str(n).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


# -- transcendental constants ------------------------------------------------


def _atan_inv(x: int, w: int) -> tuple[int, int]:
    """Fixed-point ``atan(1/x) * 2**w`` and an error bound in ulps."""
    power = (1 << w) // x
    x2 = x * x
    total = power
    k = 0
    while power:
        k += 1
        power //= x2
        term = power // (2 * k + 1)
        total += -term if k % 2 else term
    return total, 3 * (k + 1) + 1


@lru_cache(maxsize=None)
def pi_interval(prec: int) -> DyadicInterval:
    """Enclosure of pi via Machin's formula in fixed point with error bookkeeping."""
    w = prec + 16
    a, ea = _atan_inv(5, w)
    b, eb = _atan_inv(239, w)
    mid = 16 * a - 4 * b
    err = 16 * ea + 4 * eb
    return DyadicInterval._rounded(mid - err, mid + err, -w, prec)


def _taylor(theta: DyadicInterval, start_cos: bool) -> DyadicInterval:
    """Alternating Taylor series of cos or sin for ``0 <= theta <= 1``."""
    w = theta.prec
    tiny = Fraction(1, 2 ** (w + 2))
    theta2 = theta.square()
    term = DyadicInterval.exact(1, w) if start_cos else theta
    total = term
    k = 0 if start_cos else 1
    sign = 1
    while True:
        term = term * theta2 / ((k + 1) * (k + 2))
        k += 2
        sign = -sign
        bound = term.upper
        if bound < tiny:
            total = total + DyadicInterval.from_bounds(-bound, bound, w)
            return total
        total = total + term if sign > 0 else total - term


def cos_pi(q: Fraction, prec: int) -> DyadicInterval:
    """Enclosure of ``cos(q*pi)`` for rational ``q``, reduced exactly first."""
    r = Fraction(q) % 2
    if r > 1:
        r = 2 - r
    negate = False
    if r > Fraction(1, 2):
        r = 1 - r
        negate = True
    if r == 0:
        value = DyadicInterval.exact(1, prec)
    elif r == Fraction(1, 2):
        value = DyadicInterval.exact(0, prec)
    else:
        w = prec + 32
        if r <= Fraction(1, 4):
            value = _taylor(pi_interval(w) * r, start_cos=True)
        else:
            value = _taylor(pi_interval(w) * (Fraction(1, 2) - r), start_cos=False)
        value = value.with_prec(prec)
    return -value if negate else value


def sin_pi(q: Fraction, prec: int) -> DyadicInterval:
    return cos_pi(Fraction(1, 2) - Fraction(q), prec)
