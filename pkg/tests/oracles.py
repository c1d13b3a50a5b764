"""Independent reference computations built on mpmath."""

from fractions import Fraction

import mpmath

mpmath.mp.dps = 160


def mpf(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def two_cos(q: Fraction):
    return 2 * mpmath.cospi(mpf(q))


def nested(signs, tail=0):
    """sqrt(2 + e1 sqrt(2 + ... + en sqrt(2 + tail))) evaluated naively."""
    v = mpmath.sqrt(2 + mpmath.mpf(tail))
    for e in reversed(signs):
        v = mpmath.sqrt(2 + e * v)
    return v


def brute_semi_order(s: int) -> tuple[int, int]:
    x = 1
    for p in range(1, s + 1):
        x = 2 * x % s
        if x == 1:
            return p, 1
        if x == s - 1:
            return p, -1
    raise AssertionError(s)


def sign_sequence(q: Fraction, n: int) -> list[int]:
    """sign cos(2**i q pi) for i = 1..n, from a float-free high precision cosine."""
    out = []
    with mpmath.workdps(40 + n):
        for i in range(1, n + 1):
            c = mpmath.cospi(mpf(q * 2**i))
            out.append(1 if c > 0 else -1)
    return out


def contains(interval, value) -> bool:
    lo = mpf(interval.lower)
    hi = mpf(interval.upper)
    return lo <= value <= hi
