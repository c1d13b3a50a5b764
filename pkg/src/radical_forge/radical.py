"""Rigorous evaluation of finite radical towers and their scaled errors."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .codec import SignWord, WordKind, decode
from .errors import DomainError, InconsistentTower, PrecisionExhausted
from .interval import DyadicInterval, cos_pi
from .limits import sigma_table

GUARD_BITS = 64


@dataclass(frozen=True)
class RadicalTower:
    """``sqrt(2 + e1*sqrt(2 + ... + en*sqrt(2 + tail)))``; signs outermost first."""

    signs: tuple[int, ...]
    tail: Fraction = field(default=Fraction(0))

    def __post_init__(self):
        if not -2 <= self.tail <= 2:
            raise DomainError(f"tail {self.tail} outside [-2, 2]")

    @property
    def depth(self) -> int:
        return len(self.signs)


def eval_tower(tower: RadicalTower, prec: int) -> DyadicInterval:
    # Signs are stored outermost first but evaluation runs from the inside,
    # so the loop walks them in reverse.
    v = DyadicInterval.exact(2 + Fraction(tower.tail), prec)
    for e in reversed(tower.signs):
        if v.hi_man < 0:
            raise InconsistentTower(f"negative radicand in {tower}")
        v = 2 + e * v.sqrt()
    if v.hi_man < 0:
        raise InconsistentTower(f"negative radicand in {tower}")
    return v.sqrt()


def eval_signs(signs, prec: int, tail: Fraction = Fraction(0)) -> DyadicInterval:
    return eval_tower(RadicalTower(tuple(signs), Fraction(tail)), prec)


def _periodic_word(word: SignWord) -> None:
    if word.kind is not WordKind.TOTALLY_PERIODIC:
        raise DomainError(f"{word.render()} is not totally periodic")
    if all(e == 1 for e in word.block):
        raise DomainError("the all-plus word is the trivial constant 2")


def u_sequence(word: SignWord, n_max: int, prec: int) -> list[DyadicInterval]:
    """Enclosures of ``u_n = 2**n (r_inf - r_n)`` for ``n = 0..n_max``.

    The difference cancels about ``n`` bits, so the work is done at
    ``prec + n_max + GUARD_BITS`` and each entry must still be accurate to
    ``2**-prec`` or ``PrecisionExhausted`` names the failing index.
    """
    _periodic_word(word)
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    work = prec + n_max + GUARD_BITS
    r_inf = 2 * cos_pi(decode(word), work)
    signs = word.spell(n_max)
    out = []
    for n in range(n_max + 1):
        u = (r_inf - eval_signs(signs[:n], work)).scale2(n)
        if u.radius > Fraction(1, 2**prec):
            raise PrecisionExhausted(f"u_{n} wider than 2**-{prec}", index=n)
        out.append(u.with_prec(prec + 8))
    return out


def iterate_angle(word: SignWord, m: int, j: int) -> Fraction:
    """Exact ``a`` with ``r_{mp+j} = 2cos(a*pi/4)`` for a totally periodic word.

    ``j`` ranges over ``0..p-1`` when the block product is +1 and over
    ``0..2p-1`` when it is -1.
    """
    _periodic_word(word)
    table = sigma_table(word.block)
    if m < 0 or not 0 <= j < table.subsequences:
        raise DomainError(f"offset j = {j} outside 0..{table.subsequences - 1}")
    total = table.infinite_sum
    p = table.p
    return 1 - total + Fraction(table.delta_p**m) * (total - table.sigma[j]) / 2 ** (m * p)
