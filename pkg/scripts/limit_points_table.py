#!/usr/bin/env python3
"""Print the exact limit points of every periodic block up to a given length,
together with how far u_{m*span+j} still is from each of them."""

import argparse
import itertools
from dataclasses import dataclass

from radical_forge.codec import SignWord, render_signs
from radical_forge.limits import limit_points
from radical_forge.radical import u_sequence


@dataclass(frozen=True)
class TableConfig:
    max_len: int = 3
    m: int = 12
    prec: int = 256


def primitive_blocks(max_len: int):
    for p in range(1, max_len + 1):
        for block in itertools.product((1, -1), repeat=p):
            if -1 not in block:
                continue
            if any(p % d == 0 and block == block[:d] * (p // d) for d in range(1, p)):
                continue
            yield block


def main(cfg: TableConfig) -> None:
    print(f"{'block':>8}  {'q':>7}  {'j':>2}  {'coef':>9}  {'|u - limit|':>11}")
    for block in primitive_blocks(cfg.max_len):
        points = limit_points(block)
        span = len(points.coefficients)
        u = u_sequence(SignWord((), block), cfg.m * span + span, cfg.prec)
        values = points.values(cfg.prec)
        for j, (c, v) in enumerate(zip(points.coefficients, values)):
            gap = float(u[cfg.m * span + j].distance_bound(v))
            print(f"{render_signs(block):>8}  {str(points.q):>7}  {j:>2}  {str(c):>9}  {gap:11.3e}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=TableConfig.max_len)
    ap.add_argument("--m", type=int, default=TableConfig.m)
    ap.add_argument("--prec", type=int, default=TableConfig.prec)
    a = ap.parse_args()
    main(TableConfig(a.max_len, a.m, a.prec))
