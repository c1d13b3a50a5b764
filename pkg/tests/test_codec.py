import itertools
import random
from fractions import Fraction
from math import gcd

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from oracles import nested, sign_sequence, two_cos

from radical_forge.codec import (
    CONSTANT_TWO,
    CONSTANT_ZERO,
    FiniteClosedForm,
    SignWord,
    WordKind,
    canonicalize,
    decode,
    encode_rational,
    encode_real,
    finite_closed_form,
    finite_signs,
    is_canonical,
    minimal_period,
    odd_decomposition,
    parse_word,
)
from radical_forge.errors import DomainError
from radical_forge.exact import semi_order
from radical_forge.interval import cos_pi

signs = st.sampled_from([1, -1])
sign_lists = st.lists(signs, max_size=12).map(tuple)
nonempty_sign_lists = st.lists(signs, min_size=1, max_size=8).map(tuple)


@st.composite
def open_rationals(draw, max_k=6, max_s=400):
    """Reduced q in (0, 1/2) with denominator 2**k * s."""
    k = draw(st.integers(0, max_k))
    s = draw(st.integers(0, max_s // 2).map(lambda n: 2 * n + 1))
    den = 2**k * s
    assume(den >= 3)
    t = draw(st.integers(1, (den - 1) // 2))
    assume(gcd(t, den) == 1 and 2 * t < den)
    return Fraction(t, den)


@pytest.mark.parametrize(
    "q, text",
    [
        (Fraction(1, 3), "|-"),
        (Fraction(1, 5), "|+-"),
        (Fraction(3, 7), "|-+-"),
        (Fraction(21, 136), "+--|+-++"),
        (Fraction(1, 8), "+|"),
        (Fraction(1, 4), "|"),
        (Fraction(3, 8), "-|"),
        (Fraction(1, 6), "+|-"),
    ],
)
def test_encode_examples(q, text):
    word = encode_rational(q)
    assert word.render() == text
    assert decode(word) == q


def test_kinds():
    assert encode_rational(Fraction(1, 8)).kind is WordKind.FINITE
    assert encode_rational(Fraction(3, 7)).kind is WordKind.TOTALLY_PERIODIC
    assert encode_rational(Fraction(21, 136)).kind is WordKind.EVENTUALLY_PERIODIC


@pytest.mark.parametrize("q", [Fraction(0), Fraction(1, 2), Fraction(3, 4), Fraction(-1, 3)])
def test_encode_rejects_endpoints(q):
    with pytest.raises(DomainError):
        encode_rational(q)


@given(open_rationals())
def test_round_trip(q):
    word = encode_rational(q)
    assert decode(word) == q
    assert is_canonical(word)
    assert not word.in_set_a()


@given(open_rationals())
def test_signs_match_cosine_signs(q):
    word = encode_rational(q)
    # finite words meet cos = 0 exactly, where the sign is a convention
    assume(word.kind is not WordKind.FINITE)
    assert list(word.spell(40)) == sign_sequence(q, 40)


@given(open_rationals())
def test_block_length_is_semi_order(q):
    k = 0
    s = q.denominator
    while s % 2 == 0:
        s //= 2
        k += 1
    word = encode_rational(q)
    if s == 1:
        assert word.kind is WordKind.FINITE
        assert len(word.preamble) == k - 2
    else:
        assert word.period == semi_order(s)[0]
        assert len(word.preamble) == k
        if k == 0:
            assert minimal_period(q) == word.period
        else:
            with pytest.raises(DomainError):
                minimal_period(q)


def test_injective_on_small_denominators():
    seen = {}
    for den in range(3, 120):
        for t in range(1, (den + 1) // 2):
            if gcd(t, den) == 1 and 2 * t < den:
                q = Fraction(t, den)
                w = encode_rational(q)
                assert w not in seen, (q, seen.get(w))
                seen[w] = q


@given(sign_lists, sign_lists)
def test_render_parse_round_trip(pre, blk):
    word = SignWord(pre, blk)
    assert parse_word(word.render()) == word
    assert SignWord.parse(str(word)) == word


def test_parse_variants():
    assert parse_word("-+-") == SignWord((), (-1, 1, -1))
    assert parse_word("+−|+") == SignWord((1, -1), (1,))
    for bad in ("", "+|-|+", "+x-"):
        with pytest.raises(ValueError):
            parse_word(bad)
    with pytest.raises(ValueError):
        SignWord((2,), ())


def test_canonicalize_examples():
    assert canonicalize((1,), (-1, -1, 1)) == SignWord((), (1, -1, -1))
    assert canonicalize((), (-1, 1, -1, -1, 1, -1)) == SignWord((), (-1, 1, -1))
    assert canonicalize((1, -1, -1), (1,)) == SignWord((1,), ())
    assert canonicalize((), (1, 1)) == CONSTANT_TWO
    assert canonicalize((-1,), (1,)) == CONSTANT_ZERO
    assert canonicalize((-1, 1), (1,)) == CONSTANT_ZERO


@given(sign_lists, nonempty_sign_lists)
def test_canonicalize_leaves_no_set_a_tail(pre, blk):
    word = canonicalize(pre, blk)
    assert not word.in_set_a()
    assert canonicalize(word.preamble, word.block) == word


@given(sign_lists, nonempty_sign_lists)
def test_canonicalize_preserves_value(pre, blk):
    word = canonicalize(pre, blk)
    depth = len(pre) + 8 * len(blk) + 40
    raw = nested(SignWord(pre, blk).spell(depth))
    assume(word not in (CONSTANT_TWO, CONSTANT_ZERO))
    assert abs(raw - two_cos(decode(word))) < mpmath.mpf(10) ** -6


@given(sign_lists, nonempty_sign_lists)
def test_decode_invariant_under_canonicalize(pre, blk):
    word = SignWord(pre, blk)
    assume(not word.in_set_a() and any(e == -1 for e in blk))
    assert decode(word) == decode(canonicalize(pre, blk))


def test_decode_rejects_set_a():
    with pytest.raises(DomainError):
        decode(SignWord((1, -1, -1), (1,)))


def test_finite_closed_form_examples():
    assert finite_closed_form(()) == FiniteClosedForm(1, 0)
    assert finite_closed_form((1,)) == FiniteClosedForm(1, 1)
    assert finite_closed_form((-1,)) == FiniteClosedForm(3, 1)
    assert finite_closed_form((1, -1)) == FiniteClosedForm(3, 2)


@pytest.mark.parametrize("k", range(0, 9))
def test_finite_forms_biject_onto_odd_numbers(k):
    betas = sorted(finite_closed_form(w).beta for w in itertools.product((1, -1), repeat=k))
    assert betas == list(range(1, 2 ** (k + 1), 2))


@given(sign_lists)
def test_finite_signs_inverts_closed_form(w):
    form = finite_closed_form(w)
    assert finite_signs(form) == w
    assert abs(nested(w) - two_cos(form.angle)) < mpmath.mpf(10) ** -60


@given(st.integers(0, 12), st.data())
def test_odd_decomposition(k, data):
    assume(k > 0)
    alpha = data.draw(st.integers(-(2**k - 1) // 2, (2**k - 2) // 2).map(lambda n: 2 * n + 1))
    es = odd_decomposition(alpha, k)
    assert sum(2 ** (i - 1) * e for i, e in enumerate(es, 1)) == alpha


def test_odd_decomposition_rejects():
    with pytest.raises(DomainError):
        odd_decomposition(4, 3)
    with pytest.raises(DomainError):
        odd_decomposition(9, 3)


def test_spell_extends_finite_words_outside_set_a():
    assert SignWord((1,), ()).spell(5) == (1, 1, -1, 1, 1)
    assert SignWord((), (-1, 1)).spell(5) == (-1, 1, -1, 1, -1)


def test_encode_real_matches_encode_rational_sample():
    rng = random.Random(7)
    for _ in range(20):
        den = rng.choice([3, 5, 7, 9, 11, 13, 17, 24, 40, 136, 1000003])
        t = rng.randint(1, (den - 1) // 2)
        q = Fraction(t, den)
        if gcd(t, den) != 1:
            continue
        enc = encode_real(2 * cos_pi(q, 512), 64)
        assert enc.complete
        assert enc.signs == encode_rational(q).spell(64)


def test_encode_real_reports_undecidable_index():
    # 2cos(pi/8) has a finite radical, so 2cos(2**2 * pi/8) = 0 is hit exactly
    enc = encode_real(2 * cos_pi(Fraction(1, 8), 256), 10)
    assert not enc.complete
    assert enc.failed_at == 2
    assert enc.signs == (1,)


def test_encode_real_domain():
    with pytest.raises(DomainError):
        encode_real(2 * cos_pi(Fraction(0), 64), 4)
