#!/usr/bin/env python3
"""Distance of the Vieta-like partial products to their target, sampled at
whole blocks of factors."""

import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from radical_forge.vieta import verify_product


@dataclass(frozen=True)
class ConvergenceConfig:
    qs: tuple[Fraction, ...] = field(
        default_factory=lambda: (Fraction(1, 3), Fraction(1, 5), Fraction(3, 7), Fraction(5, 17))
    )
    factors: int = 40
    prec: int = 256


def main(cfg: ConvergenceConfig) -> None:
    for q in cfg.qs:
        report = verify_product(q, cfg.factors, cfg.prec)
        p = report.period
        print(f"q = {q}  (period {p}, target {report.target.format(20)})")
        for k, d in zip(range(0, cfg.factors + 1, p), report.block_distances):
            print(f"  factors {k:3d}  |partial - target| <= {float(d):.3e}")
        print(f"  certified at 1e-10: {report.certified}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("q", nargs="*", type=Fraction)
    ap.add_argument("--factors", type=int, default=ConvergenceConfig.factors)
    ap.add_argument("--prec", type=int, default=ConvergenceConfig.prec)
    a = ap.parse_args()
    cfg = ConvergenceConfig(factors=a.factors, prec=a.prec)
    if a.q:
        cfg = ConvergenceConfig(tuple(a.q), a.factors, a.prec)
    main(cfg)
