"""Vieta-like products for pi built from periodic radicals of 2.

For ``0 < q < 1/2`` with odd denominator and block ``e_1..e_p`` of
``2cos(q*pi)``, let ``s_0 = sqrt(2)`` and ``s_{pn+i} = sqrt(2 + e_{p+1-i} s_{pn+i-1})``.
Then

    2cos(2q*pi) / ((1-4q) * pi * sin(q*pi))
        = (2cos(q*pi) + sqrt(2))/2 * prod_{i>=0} prod_{j=1..p} (|2cos(2**(p-j) q*pi)| + s_{pi+j})/2
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .codec import encode_rational
from .errors import DomainError
from .exact import reduce_angle
from .interval import DyadicInterval, cos_pi, pi_interval, sin_pi

GUARD_BITS = 32


def _check_q(q: Fraction) -> None:
    if not isinstance(q, Fraction):
        raise TypeError("q must be a Fraction")
    if not 0 < q < Fraction(1, 2) or q.denominator % 2 == 0:
        raise DomainError(f"q = {q} must lie in (0, 1/2) with odd denominator")


def product_block(q: Fraction) -> tuple[int, ...]:
    _check_q(q)
    return encode_rational(q).block


def s_sequence(q: Fraction, n_max: int, prec: int) -> list[DyadicInterval]:
    """Enclosures of ``s_0 .. s_{n_max}``."""
    block = product_block(q)
    # s_{pn+i} uses e_{p+1-i}: the block read backwards
    rev = block[::-1]
    s = [DyadicInterval.exact(2, prec).sqrt()]
    for n in range(1, n_max + 1):
        s.append((2 + rev[(n - 1) % len(rev)] * s[-1]).sqrt())
    return s


def vieta_target(q: Fraction, prec: int) -> DyadicInterval:
    """Enclosure of ``2cos(2q*pi) / ((1 - 4q) * pi * sin(q*pi))``."""
    _check_q(q)
    w = prec + GUARD_BITS
    num = 2 * cos_pi(2 * q, w)
    den = pi_interval(w) * sin_pi(q, w) * (1 - 4 * q)
    return (num / den).with_prec(prec)


def surd_target(q: Fraction, prec: int) -> DyadicInterval:
    """Closed surd form of the target for q = 1/3 and q = 1/5 (no cosines)."""
    w = prec + GUARD_BITS
    pi = pi_interval(w)

    def root(n: int | DyadicInterval) -> DyadicInterval:
        return DyadicInterval.exact(n, w).sqrt() if isinstance(n, int) else n.sqrt()

    if q == Fraction(1, 3):
        value = 2 * root(3) / pi
    elif q == Fraction(1, 5):
        value = (root(5) - 1) * 5 * root(2) / (pi * root(5 - root(5)))
    else:
        raise DomainError(f"no surd closed form for q = {q}")
    return value.with_prec(prec)


@dataclass(frozen=True)
class VietaFactor:
    """``(|2cos(cosine_angle*pi)| + s_{s_index}) / 2`` at block ``i``, slot ``j``."""

    i: int
    j: int
    cosine_angle: Fraction
    s_index: int
    magnitude: DyadicInterval = field(repr=False)
    value: DyadicInterval = field(repr=False)


def leading_factor(q: Fraction, prec: int) -> DyadicInterval:
    return (2 * cos_pi(q, prec) + DyadicInterval.exact(2, prec).sqrt()) / 2


def vieta_factors(q: Fraction, count: int, prec: int) -> tuple[DyadicInterval, list[VietaFactor]]:
    """Leading factor and the first ``count`` stream factors in (i, j) order."""
    block = product_block(q)
    p = len(block)
    s = s_sequence(q, count, prec)
    mags = {}
    for j in range(1, p + 1):
        angle = reduce_angle(q * 2 ** (p - j))
        mags[j] = (angle, abs(2 * cos_pi(angle, prec)))
    factors = []
    for n in range(1, count + 1):
        i, j = divmod(n - 1, p)
        j += 1
        angle, mag = mags[j]
        factors.append(VietaFactor(i, j, angle, n, mag, (mag + s[n]) / 2))
    return leading_factor(q, prec), factors


def block_products(q: Fraction, blocks: int, prec: int) -> list[DyadicInterval]:
    """Per-block products ``w_i`` of the stream, ``i = 0..blocks-1``."""
    p = len(product_block(q))
    _, factors = vieta_factors(q, blocks * p, prec)
    out = []
    for i in range(blocks):
        w = DyadicInterval.exact(1, prec)
        for f in factors[i * p:(i + 1) * p]:
            w = w * f.value
        out.append(w)
    return out


@dataclass(frozen=True)
class ProductReport:
    q: Fraction
    target: DyadicInterval
    partials: list[DyadicInterval]
    factor_count: int
    tolerance: Fraction
    period: int

    @property
    def distances(self) -> list[Fraction]:
        """Upper bounds on ``|partial_k - target|``."""
        return [part.distance_bound(self.target) for part in self.partials]

    @property
    def block_distances(self) -> list[Fraction]:
        """Distances at whole blocks, ``k = 0, p, 2p, ...``.

        Inside a block the factors tend to ``|2cos(2**(p-j) q*pi)|`` rather
        than 1, so only these partials approach the target.
        """
        return self.distances[:: self.period]

    @property
    def exhausted(self) -> bool:
        return any(part.width > self.tolerance for part in self.partials)

    @property
    def certified(self) -> bool:
        return not self.exhausted and self.block_distances[-1] <= self.tolerance

    def to_json(self) -> dict:
        return {
            "q": f"{self.q.numerator}/{self.q.denominator}",
            "period": self.period,
            "factor_count": self.factor_count,
            "target": self.target.to_json(),
            "partials": [part.to_json(40) for part in self.partials],
            "distances": [float(d) for d in self.distances],
            "block_distances": [float(d) for d in self.block_distances],
            "tolerance": float(self.tolerance),
            "exhausted": self.exhausted,
            "certified": self.certified,
        }


def verify_product(
    q: Fraction, factor_count: int, prec: int, tolerance: Fraction = Fraction(1, 10**10)
) -> ProductReport:
    """Partial products ``leading * f_1 * ... * f_k`` for ``k = 0..factor_count``."""
    w = prec + GUARD_BITS
    leading, factors = vieta_factors(q, factor_count, w)
    partials = [leading]
    for f in factors:
        partials.append(partials[-1] * f.value)
    return ProductReport(
        q=q,
        target=vieta_target(q, prec),
        partials=[part.with_prec(prec) for part in partials],
        factor_count=factor_count,
        tolerance=Fraction(tolerance),
        period=len(product_block(q)),
    )


def telescoping_sides(q: Fraction, n: int, prec: int) -> tuple[DyadicInterval, DyadicInterval]:
    """Both sides of the identity behind the product.

    Left: ``2**(p(n+1)) (2cos(q*pi) - s_{p(n+1)})`` times the first ``p(n+1)``
    stream factors. Right: ``delta_p**(n+1) (2cos(q*pi) - sqrt(2))``.
    """
    block = product_block(q)
    p = len(block)
    steps = p * (n + 1)
    w = prec + steps + 64
    _, factors = vieta_factors(q, steps, w)
    s = s_sequence(q, steps, w)
    two_cos = 2 * cos_pi(q, w)
    lhs = (two_cos - s[steps]).scale2(steps)
    for f in factors:
        lhs = lhs * f.value
    delta_p = 1
    for e in block:
        delta_p *= e
    rhs = delta_p ** (n + 1) * (two_cos - DyadicInterval.exact(2, w).sqrt())
    return lhs, rhs


# -- LaTeX -------------------------------------------------------------------

_TWO_COS_SURDS = {
    Fraction(0): "2",
    Fraction(1, 6): r"\sqrt{3}",
    Fraction(1, 5): r"(\sqrt{5}+1)\frac{1}{2}",
    Fraction(1, 4): r"\sqrt{2}",
    Fraction(1, 3): "1",
    Fraction(2, 5): r"(\sqrt{5}-1)\frac{1}{2}",
    Fraction(1, 2): "0",
}

_TARGET_SURDS = {
    Fraction(1, 3): r"\frac{2\sqrt{3}}{\pi}",
    Fraction(1, 5): r"\frac{(\sqrt{5}-1)5\sqrt{2}}{\pi\sqrt{5-\sqrt{5}}}",
}


def pi_frac_tex(a: Fraction) -> str:
    """``a*pi`` as LaTeX for ``a >= 0``."""
    num = r"\pi" if a.numerator == 1 else rf"{a.numerator}\pi"
    if a.denominator == 1:
        return num
    return rf"\frac{{{num}}}{{{a.denominator}}}"


def _abs_two_cos_tex(angle: Fraction) -> str:
    a = reduce_angle(angle)
    if a > 1:
        a = 2 - a
    b = a if a <= Fraction(1, 2) else 1 - a
    if b in _TWO_COS_SURDS:
        return _TWO_COS_SURDS[b]
    return rf"2\cos{pi_frac_tex(b)}"


def _target_tex(q: Fraction) -> str:
    if q in _TARGET_SURDS:
        return _TARGET_SURDS[q]
    c = 1 - 4 * q
    coeff = str(abs(c.numerator)) if c.denominator == 1 else rf"\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    if c < 0:
        coeff = rf"\left(-{coeff}\right)"
    return rf"\frac{{2\cos{pi_frac_tex(2 * q)}}}{{{coeff}\pi\sin{pi_frac_tex(q)}}}"


def radical_tex(signs_inner_first) -> str:
    """Nested radical starting from ``\\sqrt{2}`` and wrapping outward."""
    tex = r"\sqrt{2}"
    for e in signs_inner_first:
        tex = rf"\sqrt{{2{'+' if e > 0 else '-'}{tex}}}"
    return tex


def render_latex(q: Fraction, factor_count: int) -> str:
    block = product_block(q)
    p = len(block)
    rev = block[::-1]
    leading = rf"\frac{{{_abs_two_cos_tex(q)}+\sqrt{{2}}}}{{2}}"
    factors = []
    for n in range(1, factor_count + 1):
        j = (n - 1) % p + 1
        s_tex = radical_tex(rev[(k - 1) % p] for k in range(1, n + 1))
        mag = _abs_two_cos_tex(q * 2 ** (p - j))
        factors.append(rf"\frac{{{mag}+{s_tex}}}{{2}}")
    if p == 1:
        body = " \\cdot ".join([leading] + factors)
    else:
        groups = [factors[k:k + p] for k in range(0, len(factors), p)]
        body = " ".join([leading] + [r"\left(" + " \\cdot ".join(g) + r" \right)" for g in groups])
    return f"{_target_tex(q)} = {body} \\cdots"
