"""Self-check suites run by ``radical-forge verify``."""

from __future__ import annotations

import itertools
import time
from fractions import Fraction
from math import gcd

from .codec import decode, encode_rational, finite_closed_form, parse_word
from .exact import semi_order
from .interval import cos_pi
from .limits import limit_points
from .radical import eval_signs, u_sequence
from .vieta import surd_target, telescoping_sides, verify_product, vieta_target

SUITES = ("roundtrip", "theorem3", "limits", "vieta")


def _result(name, passed, started, **details):
    return {
        "name": name,
        "passed": bool(passed),
        "seconds": round(time.perf_counter() - started, 3),
        "details": details,
    }


def suite_roundtrip(prec: int = 256) -> list[dict]:
    t0 = time.perf_counter()
    bad_semi = [s for s in range(3, 10000, 2) if pow(2, 2 * semi_order(s)[0], s) != 1]
    out = [_result("semi_order_sweep", not bad_semi, t0, moduli=4999, failures=bad_semi[:10])]

    t0 = time.perf_counter()
    failures, count = [], 0
    for s in range(3, 200, 2):
        p = semi_order(s)[0]
        for t in range(1, (s + 1) // 2):
            if gcd(t, s) != 1:
                continue
            q = Fraction(t, s)
            word = encode_rational(q)
            count += 1
            if decode(word) != q or len(word.block) != p or word.preamble:
                failures.append(f"{t}/{s}")
    out.append(_result("codec_roundtrip", not failures, t0, rationals=count, failures=failures[:10]))
    return out


def suite_finite_words(prec: int = 256, max_depth: int = 12) -> list[dict]:
    t0 = time.perf_counter()
    tol = Fraction(1, 2**100)
    problems = []
    worst = Fraction(0)
    for k in range(max_depth + 1):
        betas = []
        for signs in itertools.product((1, -1), repeat=k):
            form = finite_closed_form(signs)
            betas.append(form.beta)
            value = eval_signs(signs, prec)
            ref = 2 * cos_pi(form.angle, prec)
            dist = value.distance_bound(ref)
            worst = max(worst, dist)
            if not value.overlaps(ref) or dist > tol:
                problems.append(("mismatch", k, signs))
        if sorted(betas) != list(range(1, 2 ** (k + 1), 2)):
            problems.append(("not a bijection", k))
    return [
        _result(
            "finite_enumeration", not problems, t0,
            max_depth=max_depth, worst_distance=float(worst), problems=problems[:5],
        )
    ]


_LIMIT_CASES = (
    ("-+-", (Fraction(-5, 14), Fraction(-3, 14), Fraction(1, 14)), Fraction(1, 10**8)),
    ("-", (Fraction(-1, 6), Fraction(1, 6)), Fraction(1, 10**10)),
    ("+-", (Fraction(1, 10), Fraction(-3, 10), Fraction(-1, 10), Fraction(3, 10)), Fraction(1, 10**8)),
)


def suite_limits(prec: int = 256, m: int = 20) -> list[dict]:
    out = []
    for text, expected, tol in _LIMIT_CASES:
        t0 = time.perf_counter()
        word = parse_word(text)
        points = limit_points(word.block)
        p = len(word.block)
        # residue classes are taken modulo the period of the running products
        span = p if points.delta_p == 1 else 2 * p
        n_max = m * span + len(points.coefficients) - 1
        u = u_sequence(word, n_max, prec)
        values = points.values(prec)
        errors = [float(u[m * span + j].distance_bound(values[j])) for j in range(len(values))]
        passed = points.coefficients == expected and max(errors) <= tol
        out.append(
            _result(
                f"limit_points[{text}]", passed, t0,
                coefficients=[f"{c.numerator}/{c.denominator}" for c in points.coefficients],
                errors=errors,
            )
        )
    return out


def suite_vieta(prec: int = 256, factors: int = 40) -> list[dict]:
    out = []
    table = []
    ok = True
    t0 = time.perf_counter()
    for q in (Fraction(1, 3), Fraction(1, 5), Fraction(3, 7)):
        report = verify_product(q, factors, prec)
        err = float(report.block_distances[-1])
        table.append({"q": f"{q.numerator}/{q.denominator}", "factors": factors, "max_error": err})
        ok = ok and report.certified
    for q in (Fraction(1, 3), Fraction(1, 5)):
        ok = ok and vieta_target(q, prec).distance_bound(surd_target(q, prec)) <= Fraction(1, 10**12)
    out.append(_result("product_convergence", ok, t0, table=table))

    t0 = time.perf_counter()
    bad = []
    for q in (Fraction(1, 3), Fraction(1, 5), Fraction(3, 7)):
        for n in range(21):
            lhs, rhs = telescoping_sides(q, n, prec)
            if not lhs.overlaps(rhs):
                bad.append(f"{q}:{n}")
    out.append(_result("telescoping_identity", not bad, t0, failures=bad))
    return out


_RUNNERS = {
    "roundtrip": suite_roundtrip,
    "theorem3": suite_finite_words,
    "limits": suite_limits,
    "vieta": suite_vieta,
}


def run_suite(name: str, prec: int = 256) -> dict:
    names = SUITES if name == "all" else (name,)
    if any(n not in _RUNNERS for n in names):
        raise ValueError(f"unknown suite {name!r}")
    results = []
    for n in names:
        for r in _RUNNERS[n](prec):
            r["suite"] = n
            results.append(r)
    return {
        "command": "verify",
        "suite": name,
        "passed": all(r["passed"] for r in results),
        "results": results,
    }
