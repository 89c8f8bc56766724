from __future__ import annotations

from math import comb

import pytest

from covforge.poly import parse, to_text
from covforge.sl2 import (
    D_apply,
    SemiInvariant,
    context,
    from_z,
    is_semiinvariant,
    kappa,
    kappa_inverse,
    lift,
    order,
    to_z,
)

# D in the chart (t, x1, z2..z7) for d = 7, copied term by term from the printed operator
PRINTED_D7 = {
    "t": "7*x1",
    "z2": "5*(2*x1*z2 + z3)*t^-1",
    "z3": "(15*x1*z3 - 18*z2^2 + 4*z4)*t^-1",
    "z4": "(20*x1*z4 - 24*z2*z3 + 3*z5)*t^-1",
    "z5": "(2*z6 + 25*x1*z5 - 30*z2*z4)*t^-1",
    "z6": "(z7 + 30*x1*z6 - 36*z2*z5)*t^-1",
    "z7": "7*(5*x1*z7 - 6*z2*z6)*t^-1",
}


def _expand(text, R):
    # the parser has no parentheses; expand "c*(a + b)*t^-1" by hand
    text = text.replace(" ", "")
    scale = 1
    if "*(" in text and not text.startswith("("):
        scale, text = text.split("*(", 1)
        text = "(" + text
    if text.startswith("("):
        body, tail = text[1:].split(")", 1)
        return parse(body, R) * int(scale) * (parse(tail[1:], R) if tail else R.one())
    return parse(text, R)


def test_D_on_x_coordinates(ctx7):
    R = ctx7.R
    assert D_apply(ctx7, R.var("t")) == 7 * R.var("x1")
    assert D_apply(ctx7, R.var("x3")) == 4 * R.var("x4")
    assert D_apply(ctx7, R.var("x7")).is_zero


def test_z_chart_operator_matches_printed_form(ctx7):
    R = ctx7.R
    for v, text in PRINTED_D7.items():
        assert ctx7.chart_D[R.index[v]] == _expand(text, R), v


def test_z_operator_is_the_conjugate_of_D(ctx7):
    # D(z_i) computed in x-coordinates then rewritten in the chart
    R = ctx7.R
    for i in range(2, 8):
        direct = to_z(ctx7, D_apply(ctx7, ctx7.z_in_x[i]))
        assert direct == ctx7.chart_D[R.index[f"z{i}"]]


def test_z_round_trip(ctx7):
    R = ctx7.R
    p = parse("x4*t - 4*x1*x3 + 3*x2^2", R)
    assert to_z(ctx7, p) == parse("3*z2^2 + z4", R) * R.var("t") ** -2
    assert from_z(ctx7, to_z(ctx7, p)) == p


def test_kappa_inverse_of_t_is_the_generic_form(ctx7):
    R = ctx7.R
    F = kappa_inverse(ctx7, R.var("t"))
    expect = R.zero()
    for i in range(8):
        xi = R.var("t") if i == 0 else R.var(f"x{i}")
        expect = expect + comb(7, i) * xi * R.var("Y1", 7 - i) * R.var("Y2", i)
    assert F == expect


@pytest.mark.parametrize("text", ["t", "x2*t - x1^2", "x4*t - 4*x1*x3 + 3*x2^2"])
def test_kappa_round_trip(ctx7, text):
    p = parse(text, ctx7.R)
    s = kappa(ctx7, kappa_inverse(ctx7, p))
    assert s.poly == p and s.order == order(ctx7, p)


def test_orders_of_degree_two(ctx7):
    R = ctx7.R
    assert order(ctx7, parse("x2*t - x1^2", R)) == 10
    assert order(ctx7, parse("x4*t - 4*x1*x3 + 3*x2^2", R)) == 6
    assert order(ctx7, parse("x6*t - 6*x1*x5 + 15*x2*x4 - 10*x3^2", R)) == 2


def test_non_semiinvariant_rejected(ctx7):
    R = ctx7.R
    assert not is_semiinvariant(ctx7, R.var("x1"))
    with pytest.raises(ValueError):
        SemiInvariant.from_poly(ctx7, R.var("x2"))


def test_core_lift_and_order_from_weight(reg13):
    ctx = reg13.ctx
    for name in ["dv1", "tr3", "ch1", "pt9", "sh4", "si7"]:
        s = reg13[name].semi
        full = lift(ctx, s.core)
        assert full.substitute({"x1": 0}) == s.core
        assert is_semiinvariant(ctx, full)
        assert order(ctx, full) == s.order == ctx.d * s.degree - 2 * ctx.weight(s.core)


def test_semiinvariant_product_is_gauss_primitive(reg13):
    a, b = reg13["dv1"].semi, reg13["tr1"].semi
    ab = a * b
    assert (ab.degree, ab.order) == (5, 11)
    assert ab.core == a.core * b.core
    assert to_text(ab.core)
