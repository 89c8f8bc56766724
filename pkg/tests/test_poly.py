from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covforge.poly import evaluate_mod, parse, primitive_normalize, ring, to_text

R = ring(7)
VARS = ["t"] + [f"x{i}" for i in range(1, 8)] + ["Y1", "Y2"]


@st.composite
def polys(draw, max_terms=6):
    p = R.zero()
    for _ in range(draw(st.integers(0, max_terms))):
        c = draw(st.fractions(min_value=-50, max_value=50, max_denominator=6))
        mono = R.one()
        for v in draw(st.lists(st.sampled_from(VARS), max_size=4)):
            mono = mono * R.var(v)
        p = p + mono * c
    return p


def test_basic_arithmetic():
    t, x1, x2 = R.var("t"), R.var("x1"), R.var("x2")
    p = x2 * t - x1 ** 2
    assert to_text(p) == "1*t^1*x2^1 - 1*x1^2"
    assert (p + p - 2 * p).is_zero
    assert to_text(R.zero()) == "0"
    assert (p * p).degree() == 4


def test_negative_t_powers_only():
    t = R.var("t")
    assert (t ** -2 * t ** 3) == t
    with pytest.raises((ValueError, ZeroDivisionError)):
        (R.var("x1") + t) ** -1


def test_parse_lenient_forms():
    assert parse("x2*t - x1^2", R) == parse("t x2 - x1^2", R)
    assert parse("3/2 x1^2 t", R).coefficient(parse("x1^2*t", R).leading_term()[0]) == Fraction(3, 2)


@settings(max_examples=200, deadline=None)
@given(polys())
def test_text_round_trip(p):
    assert parse(to_text(p), R) == p
    assert to_text(parse(to_text(p), R)) == to_text(p)


@settings(max_examples=100, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


@settings(max_examples=50, deadline=None)
@given(polys())
def test_primitive_normalize_is_idempotent(p):
    if p.is_zero:
        return
    q = primitive_normalize(p)
    assert primitive_normalize(q) == q
    assert primitive_normalize(p * Fraction(-7, 3)) == q


def test_substitute_and_diff():
    t, x1 = R.var("t"), R.var("x1")
    p = t ** 2 * x1 + 3 * x1 ** 3
    assert p.diff("x1") == t ** 2 + 9 * x1 ** 2
    assert p.substitute({"x1": t}) == t ** 3 + 3 * t ** 3


def test_evaluate_mod_matches_exact():
    p = parse("3*t^2*x3 - 5*x2^2*x4 + 7*x1*x5*t - 11", R)
    q = 1_000_003
    rng = np.random.default_rng(1)
    pts = {v: rng.integers(0, q, size=5) for v in ["t", "x1", "x2", "x3", "x4", "x5"]}
    fast = evaluate_mod(p, pts, q)
    for k in range(5):
        env = {v: int(a[k]) for v, a in pts.items()}
        assert int(fast[k]) == int(p.evaluate(env)) % q
