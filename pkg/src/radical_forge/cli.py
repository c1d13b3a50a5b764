"""``radical-forge`` command line interface.

Exit codes: 0 success, 1 parse or usage error, 2 domain error, 3 precision
exhausted, 4 a ``verify`` suite failed.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import __version__
from .codec import (
    SignWord,
    WordKind,
    decode,
    deltas,
    encode_rational,
    parse_word,
    render_signs,
)
from .errors import DomainError, InconsistentTower, PrecisionExhausted
from .exact import format_rational, parse_rational, split_two_power
from .interval import cos_pi
from .limits import limit_points
from .radical import eval_signs
from .suites import SUITES, run_suite
from .vieta import pi_frac_tex, radical_tex, render_latex, verify_product

DEFAULT_PREC = 256
MIN_PREC, MAX_PREC = 64, 65536
EXIT_PARSE, EXIT_DOMAIN, EXIT_PRECISION, EXIT_VERIFY = 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _precision(text: str) -> int:
    try:
        bits = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"precision must be an integer, got {text!r}")
    if not MIN_PREC <= bits <= MAX_PREC:
        raise argparse.ArgumentTypeError(f"precision must be in [{MIN_PREC}, {MAX_PREC}]")
    return bits


def _count(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("counts must be non-negative")
    return n


def default_precision() -> int:
    env = os.environ.get("RADICAL_FORGE_PREC")
    if env is None:
        return DEFAULT_PREC
    try:
        return _precision(env)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"RADICAL_FORGE_PREC: {exc}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--depth", type=_count, default=None, help="signs to evaluate")
    common.add_argument("--factors", type=_count, default=40, help="stream factors in the product")
    common.add_argument("--prec", type=_precision, default=None, help="working precision in bits")
    common.add_argument("--format", choices=("plain", "json", "latex"), default="plain")

    parser = _Parser(prog="radical-forge", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("classify", parents=[common], help="kind and period of 2cos(q pi)").add_argument("q")
    sub.add_parser("encode", parents=[common], help="sign word of 2cos(q pi)").add_argument("q")
    sub.add_parser("decode", parents=[common], help="q from a sign word").add_argument("word")
    sub.add_parser("eval", parents=[common], help="enclose a truncated radical").add_argument("word")
    sub.add_parser("limits", parents=[common], help="limit points of 2^n (r_inf - r_n)").add_argument("word")
    sub.add_parser("vieta", parents=[common], help="Vieta-like product for q").add_argument("q")
    sub.add_parser("verify", parents=[common], help="run self-check suites").add_argument(
        "suite", choices=SUITES + ("all",)
    )
    return parser


# -- command bodies: each returns (json object, plain text, latex text or None)


# Sign words such as "-+-" look like options to argparse, so they are tagged
# before parsing and untagged here. A bare "--" stays the option terminator;
# write "|--" for that block.
_WORD_TAG = "word:"
_WORD_RE = re.compile(r"^[+\-\u2212|]+$")


def _tag_words(argv: list[str]) -> list[str]:
    return [_WORD_TAG + tok if tok != "--" and _WORD_RE.match(tok) else tok for tok in argv]


def _word_arg(text: str) -> SignWord:
    return parse_word(text.removeprefix(_WORD_TAG))


def cmd_classify(args, prec):
    q = parse_rational(args.q)
    word = encode_rational(q)
    period = len(word.block) or None
    delta_p = deltas(word.block)[-1] if word.block else None
    depth = len(word.preamble) if word.kind is WordKind.FINITE else None
    obj = {
        "command": "classify",
        "q": format_rational(q),
        "word": word.render(),
        "kind": word.kind.value,
        "preamble_length": len(word.preamble),
        "period": period,
        "delta_p": delta_p,
        "depth": depth,
        "roots": None if depth is None else depth + 1,
    }
    k, s = split_two_power(q.denominator)
    lines = [f"q: {obj['q']}", f"kind: {word.kind.value.replace('_', ' ')}", f"word: {word.render()}"]
    if depth is not None:
        lines.append(f"depth: {depth} signs ({depth + 1} square roots)")
    else:
        lines += [
            f"preamble length: {len(word.preamble)}",
            f"minimal period: {period} (semi-order of 2 mod {s})",
            f"block sign product: {delta_p:+d}",
        ]
    return obj, "\n".join(lines), None


def _word_tex(word: SignWord, depth: int | None = None) -> str:
    if word.kind is WordKind.FINITE:
        return radical_tex(word.preamble[::-1])
    n = depth if depth is not None else len(word.preamble) + 2 * len(word.block)
    signs = word.spell(n)
    tex = r"\cdots"
    for e in reversed(signs):
        tex = rf"\sqrt{{2{'+' if e > 0 else '-'}{tex}}}"
    return tex


def cmd_encode(args, prec):
    q = parse_rational(args.q)
    word = encode_rational(q)
    obj = {
        "command": "encode",
        "q": format_rational(q),
        "word": word.render(),
        "kind": word.kind.value,
        "preamble": render_signs(word.preamble),
        "block": render_signs(word.block),
    }
    tex = rf"2\cos{pi_frac_tex(q)} = {_word_tex(word, args.depth)}"
    return obj, word.render(), tex


def cmd_decode(args, prec):
    word = _word_arg(args.word)
    q = decode(word)
    value = 2 * cos_pi(q, prec)
    obj = {"command": "decode", "word": word.render(), "q": format_rational(q), "value": value.to_json()}
    tex = rf"{_word_tex(word)} = 2\cos{pi_frac_tex(q)}"
    return obj, format_rational(q), tex


def cmd_eval(args, prec):
    word = _word_arg(args.word)
    if word.kind is WordKind.FINITE:
        signs = word.preamble
    else:
        signs = word.spell(64 if args.depth is None else args.depth)
    value = eval_signs(signs, prec)
    q = decode(word)
    limit = 2 * cos_pi(q, prec)
    obj = {
        "command": "eval",
        "word": word.render(),
        "depth": len(signs),
        "value": value.to_json(),
        "q": format_rational(q),
        "limit": limit.to_json(),
    }
    plain = "\n".join(
        [
            f"r_{len(signs)} = {value.format()}",
            f"limit 2cos({format_rational(q)} pi) = {limit.format()}",
        ]
    )
    tex = rf"{_word_tex(SignWord(tuple(signs), ()))} \approx {value.format(30).split(' ')[0]}"
    return obj, plain, tex


def cmd_limits(args, prec):
    word = _word_arg(args.word)
    if word.kind is not WordKind.TOTALLY_PERIODIC:
        raise DomainError("limit points are defined for totally periodic words")
    points = limit_points(word.block)
    values = points.values(prec)
    q = points.q
    obj = {
        "command": "limits",
        "word": word.render(),
        "q": format_rational(q),
        "delta_p": points.delta_p,
        "points": [
            {"j": j, "coef": format_rational(c), "value": v.to_json()}
            for j, (c, v) in enumerate(zip(points.coefficients, values))
        ],
    }
    lines = [f"q: {format_rational(q)}  (limit 2cos(q pi))"]
    for j, (c, v) in enumerate(zip(points.coefficients, values)):
        lines.append(f"j={j}: ({format_rational(c)}) pi sin({format_rational(q)} pi) = {v.format(40)}")
    sin_tex = rf"\sin{pi_frac_tex(q)}"
    tex = ", ".join(
        rf"{'-' if c < 0 else ''}{pi_frac_tex(abs(c))}{sin_tex}" for c in points.coefficients
    )
    return obj, "\n".join(lines), tex


def cmd_vieta(args, prec):
    q = parse_rational(args.q)
    report = verify_product(q, args.factors, prec)
    obj = {"command": "vieta", **report.to_json()}
    p = report.period
    lines = [
        f"q: {format_rational(q)}  period: {p}",
        f"target: {report.target.format(40)}",
    ]
    for k in range(0, args.factors + 1, p):
        lines.append(f"partial[{k}]: {report.partials[k].format(40)}  |err| <= {float(report.distances[k]):.3e}")
    lines.append(f"certified: {report.certified}")
    return obj, "\n".join(lines), render_latex(q, args.factors)


def cmd_verify(args, prec):
    summary = run_suite(args.suite, prec)
    lines = [
        f"[{'PASS' if r['passed'] else 'FAIL'}] {r['suite']}/{r['name']} ({r['seconds']} s)"
        for r in summary["results"]
    ]
    lines.append("all passed" if summary["passed"] else "FAILURES")
    return summary, "\n".join(lines), None


COMMANDS = {
    "classify": cmd_classify,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "eval": cmd_eval,
    "limits": cmd_limits,
    "vieta": cmd_vieta,
    "verify": cmd_verify,
}


def _fail(fmt: str, kind: str, code: int, message: str) -> int:
    print(f"radical-forge: {kind} error: {message}", file=sys.stderr)
    if fmt == "json":
        print(json.dumps({"error": message, "kind": kind, "exit_code": code}))
    return code


def _peek_format(argv) -> str:
    """Output format requested on the command line, for errors raised while parsing."""
    for i, tok in enumerate(argv):
        if tok == "--format" and i + 1 < len(argv):
            return argv[i + 1]
        if tok.startswith("--format="):
            return tok.split("=", 1)[1]
    return "plain"


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    fmt = _peek_format(argv)
    try:
        args = build_parser().parse_args(_tag_words(argv))
        fmt = args.format
        prec = args.prec if args.prec is not None else default_precision()
        obj, plain, tex = COMMANDS[args.command](args, prec)
    except UsageError as exc:
        return _fail(fmt, "parse", EXIT_PARSE, str(exc))
    except DomainError as exc:
        return _fail(fmt, "domain", EXIT_DOMAIN, str(exc))
    except (PrecisionExhausted, InconsistentTower) as exc:
        return _fail(fmt, "precision", EXIT_PRECISION, str(exc))
    except (ValueError, TypeError) as exc:
        return _fail(fmt, "parse", EXIT_PARSE, str(exc))

    if fmt == "json":
        print(json.dumps(obj, indent=2))
    elif fmt == "latex":
        print(tex if tex is not None else plain)
    else:
        print(plain)
    if args.command == "verify" and not obj["passed"]:
        return EXIT_VERIFY
    return 0


if __name__ == "__main__":
    sys.exit(main())
