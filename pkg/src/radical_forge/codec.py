"""Conversion between rationals ``q`` (value ``2cos(q*pi)``) and sign words.

A sign word spells the continued radical

    sqrt(2 + e1*sqrt(2 + e2*sqrt(2 + ...)))

as a finite preamble followed by a repeating block. The sign sequence of
``2cos(phi)`` is ``e_n = sign(cos(2**n * phi))``, so every encoder here reads
signs off the doubling orbit of the angle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError
from .exact import cos_sign, semi_order, split_two_power
from .interval import DyadicInterval

Signs = tuple[int, ...]


class WordKind(enum.Enum):
    FINITE = "finite"
    TOTALLY_PERIODIC = "totally_periodic"
    EVENTUALLY_PERIODIC = "eventually_periodic"


@dataclass(frozen=True)
class SignWord:
    preamble: Signs = ()
    block: Signs = ()

    def __post_init__(self):
        for e in self.preamble + self.block:
            if e not in (1, -1):
                raise ValueError(f"signs must be +1 or -1, got {e!r}")

    @property
    def kind(self) -> WordKind:
        if not self.block:
            return WordKind.FINITE
        if not self.preamble:
            return WordKind.TOTALLY_PERIODIC
        return WordKind.EVENTUALLY_PERIODIC

    @property
    def period(self) -> int:
        return len(self.block)

    def in_set_a(self) -> bool:
        """True if the spelled sequence ends in -1, -1 followed by all +1."""
        if not self.block or any(e != 1 for e in self.block):
            return False
        stripped = _strip_plus(self.preamble)
        return len(stripped) >= 2 and stripped[-2:] == (-1, -1)

    def spell(self, n: int) -> Signs:
        """First ``n`` signs of the infinite sequence.

        Finite words are extended by ``+1, -1, +1, +1, ...``, the extension
        that stays outside set A.
        """
        out = list(self.preamble[:n])
        if self.block:
            while len(out) < n:
                out.extend(self.block)
        else:
            tail = [1, -1]
            while len(out) < n:
                out.append(tail.pop(0) if tail else 1)
        return tuple(out[:n])

    def render(self) -> str:
        return render_signs(self.preamble) + "|" + render_signs(self.block)

    @classmethod
    def parse(cls, text: str) -> "SignWord":
        return parse_word(text)

    def __str__(self) -> str:
        return self.render()


# Sentinels for the endpoints of [0, 2]: all plus is 2, a lone minus then all
# plus is 0.
CONSTANT_TWO = SignWord((), (1,))
CONSTANT_ZERO = SignWord((-1,), (1,))


def render_signs(signs: Iterable[int]) -> str:
    return "".join("+" if e > 0 else "-" for e in signs)


def parse_signs(text: str) -> Signs:
    out = []
    for ch in text.strip():
        if ch == "+":
            out.append(1)
        elif ch in "-−":
            out.append(-1)
        elif not ch.isspace() and ch != ",":
            raise ValueError(f"unexpected character {ch!r} in sign word")
    return tuple(out)


def parse_word(text: str) -> SignWord:
    """Parse ``"preamble|block"``. Without a bar the text is a periodic block."""
    if text.count("|") > 1:
        raise ValueError("sign word has more than one '|'")
    if "|" in text:
        pre, blk = text.split("|")
        return SignWord(parse_signs(pre), parse_signs(blk))
    signs = parse_signs(text)
    if not signs:
        raise ValueError("empty sign word; write '|' for the finite word sqrt(2)")
    return SignWord((), signs)


def _strip_plus(signs: Signs) -> Signs:
    end = len(signs)
    while end and signs[end - 1] == 1:
        end -= 1
    return signs[:end]


def primitive_root(block: Signs) -> Signs:
    """Shortest ``b`` with ``block == b * k``."""
    n = len(block)
    for d in range(1, n + 1):
        if n % d == 0 and block[:d] * (n // d) == block:
            return block[:d]
    return block


def deltas(signs: Sequence[int]) -> list[int]:
    """Running products ``e1, e1*e2, ...``."""
    out, acc = [], 1
    for e in signs:
        acc *= e
        out.append(acc)
    return out


# -- rationals to words --------------------------------------------------------


def _check_open_interval(q: Fraction):
    if not isinstance(q, Fraction):
        raise TypeError("q must be a Fraction")
    if not 0 < q < Fraction(1, 2):
        raise DomainError(f"q = {q} must lie strictly between 0 and 1/2")


def _periodic_block(q: Fraction) -> Signs:
    """Block of ``2cos(q*pi)`` for odd denominator, checked against the semi-order."""
    p, _ = semi_order(q.denominator)
    block = tuple(cos_sign(q * 2**i) for i in range(1, p + 1))
    if primitive_root(block) != block or cos_sign(q * 2 ** (p + 1)) != block[0]:
        raise AssertionError(f"block for {q} does not have period {p}")
    return block


def bridge(angle: Fraction) -> tuple[int, Fraction]:
    """Split ``2cos(angle*pi) = sign * 2cos(t0*pi)`` with ``0 <= t0 <= 1/2``.

    Both candidate signs are tried and the one whose residual lands in the
    first quadrant is kept.
    """
    a = angle % 2
    if a > 1:
        a = 2 - a
    for sign, residual in ((1, a), (-1, 1 - a)):
        if 0 <= residual <= Fraction(1, 2):
            return sign, residual
    raise AssertionError("unreachable")


def encode_rational(q: Fraction) -> SignWord:
    """Sign word of ``2cos(q*pi)`` for rational ``0 < q < 1/2``.

    With ``q = t / (2**k * s)``, ``s`` odd: if ``s == 1`` the radical is
    finite of depth ``k - 2``. Otherwise the first ``k - 1`` signs come from
    quadrants, the ``k``-th bridges to ``2cos(t0*pi/s)`` and the block is the
    totally periodic expansion of ``t0/s``, of length the semi-order of 2 mod s.
    """
    _check_open_interval(q)
    k, s = split_two_power(q.denominator)
    if s == 1:
        return SignWord(tuple(cos_sign(q * 2**i) for i in range(1, k - 1)), ())
    if k == 0:
        return SignWord((), _periodic_block(q))
    preamble = [cos_sign(q * 2**i) for i in range(1, k)]
    sign, residual = bridge(q * 2**k)
    preamble.append(sign)
    return SignWord(tuple(preamble), _periodic_block(residual))


def minimal_period(q: Fraction) -> int:
    _check_open_interval(q)
    if q.denominator % 2 == 0:
        raise DomainError("minimal period needs an odd denominator")
    return semi_order(q.denominator)[0]


# -- words to rationals --------------------------------------------------------


def _weighted_sum(signs: Sequence[int]) -> Fraction:
    """``sum(delta_i / 2**i)`` over the running products of ``signs``."""
    return sum((Fraction(d, 2**i) for i, d in enumerate(deltas(signs), 1)), Fraction(0))


def delta_sum(word: SignWord) -> Fraction:
    """Exact ``sum_{i>=1} delta_i / 2**i`` for the whole sequence."""
    head = _weighted_sum(word.preamble)
    if not word.block:
        return head
    k = len(word.preamble)
    p = len(word.block)
    delta_k = deltas(word.preamble)[-1] if k else 1
    block_prod = deltas(word.block)[-1]
    tail = Fraction(delta_k, 2**k) * _weighted_sum(word.block) * Fraction(2**p, 2**p - block_prod)
    return head + tail


def decode(word: SignWord) -> Fraction:
    """Exact ``q`` with limit value ``2cos(q*pi)``."""
    if word.in_set_a():
        raise DomainError(f"{word.render()} ends in set A; canonicalize it first")
    return (1 - delta_sum(word)) / 4


# -- finite radicals -----------------------------------------------------------


@dataclass(frozen=True)
class FiniteClosedForm:
    """Value ``2cos(beta*pi / 2**(k+2))``."""

    beta: int
    k: int

    @property
    def angle(self) -> Fraction:
        return Fraction(self.beta, 2 ** (self.k + 2))


def odd_decomposition(alpha: int, k: int) -> Signs:
    """The unique signs with ``sum(2**(i-1) * e_i) == alpha``."""
    if alpha % 2 == 0 or abs(alpha) > 2**k - 1:
        raise DomainError(f"alpha = {alpha} must be odd with |alpha| <= 2**{k} - 1")
    # e_i = 2*b_i - 1 where b is the binary expansion of (alpha + 2**k - 1)/2
    bits = (alpha + 2**k - 1) // 2
    return tuple(1 if (bits >> i) & 1 else -1 for i in range(k))


def finite_closed_form(signs: Sequence[int]) -> FiniteClosedForm:
    k = len(signs)
    alpha = sum(d * 2 ** (k - i) for i, d in enumerate(deltas(signs), 1))
    return FiniteClosedForm(2**k - alpha, k)


def finite_signs(form: FiniteClosedForm) -> Signs:
    """Inverse of ``finite_closed_form``."""
    beta, k = form.beta, form.k
    if beta % 2 == 0 or not 1 <= beta <= 2 ** (k + 1) - 1:
        raise DomainError(f"beta = {beta} must be odd in [1, 2**{k + 1} - 1]")
    if k == 0:
        return ()
    # alpha = sum(delta_i * 2**(k-i)) is odd_decomposition read backwards
    delta = odd_decomposition(2**k - beta, k)[::-1]
    signs, prev = [], 1
    for d in delta:
        signs.append(d * prev)
        prev = d
    return tuple(signs)


# -- canonical form ------------------------------------------------------------


def canonicalize(preamble: Sequence[int], block: Sequence[int]) -> SignWord:
    """Minimal preamble and block; set-A tails collapse to their finite word."""
    preamble = tuple(preamble)
    block = tuple(block)
    if not block:
        return SignWord(preamble, ())
    block = primitive_root(block)
    while preamble and preamble[-1] == block[-1]:
        block = (preamble[-1],) + block[:-1]
        preamble = preamble[:-1]
    if block == (1,):
        if not preamble:
            return CONSTANT_TWO
        if preamble == (-1,):
            return CONSTANT_ZERO
        # ...x, -1, then all +1 evaluates to the finite radical without x, -1
        return SignWord(preamble[:-2], ())
    return SignWord(preamble, block)


def is_canonical(word: SignWord) -> bool:
    return canonicalize(word.preamble, word.block) == word


# -- real numbers --------------------------------------------------------------


@dataclass(frozen=True)
class RealEncoding:
    signs: Signs
    failed_at: int | None = None

    @property
    def complete(self) -> bool:
        return self.failed_at is None


def encode_real(x: DyadicInterval, n: int, prec: int | None = None) -> RealEncoding:
    """First ``n`` signs of ``x = 2cos(phi)`` from an enclosure of ``x``.

    Iterates ``y_{m+1} = y_m**2 - 2`` starting at ``y_0 = x`` so that
    ``y_m`` encloses ``2cos(2**m * phi)``. Stops at the first index whose sign
    the interval cannot decide.
    """
    if not (x.lower > 0 and x.upper < 2):
        raise DomainError("x must lie strictly inside (0, 2)")
    y = x if prec is None else x.with_prec(prec)
    signs = []
    for i in range(1, n + 1):
        y = y.square() - 2
        s = y.sign()
        if s == 0:
            return RealEncoding(tuple(signs), i)
        signs.append(s)
    return RealEncoding(tuple(signs))
