from __future__ import annotations

import random

import pytest

from covforge.discover import CellEngine
from covforge.poly import parse
from covforge.sl2 import SemiInvariant, order
from covforge.transvect import semitransvectant, semitransvectant_direct, transvectant


def test_explicit_degree_two(ctx7):
    R = ctx7.R
    t = SemiInvariant.base(ctx7)
    expect = {
        2: "x2*t - x1^2",
        4: "x4*t - 4*x1*x3 + 3*x2^2",
        6: "x6*t - 6*x1*x5 + 15*x2*x4 - 10*x3^2",
    }
    for r, text in expect.items():
        assert semitransvectant_direct(ctx7, t, t, r).poly == parse(text, R)
        assert semitransvectant(ctx7, t, t, r).poly == parse(text, R)


def test_odd_levels_of_t_with_itself_vanish(ctx7):
    t = SemiInvariant.base(ctx7)
    for r in (1, 3, 5, 7):
        assert semitransvectant_direct(ctx7, t, t, r) is None


def test_classical_transvectant_of_quadratic():
    from covforge.sl2 import context

    ctx = context(2)
    F = parse("t*Y1^2 + 2*x1*Y1*Y2 + x2*Y2^2", ctx.R)
    H = transvectant(F, F, 2)
    assert H == parse("2*t*x2 - 2*x1^2", ctx.R)


def test_level_out_of_range(ctx7):
    t = SemiInvariant.base(ctx7)
    with pytest.raises(ValueError):
        semitransvectant_direct(ctx7, t, t, 8)


def _pairs(reg, n, seed=7):
    rng = random.Random(seed)
    small = [r for r in reg.records if r.degree <= 4]
    out = []
    while len(out) < n:
        f, g = rng.choice(small), rng.choice(small)
        r = rng.randint(0, min(f.order, g.order))
        out.append((f, g, r))
    return out


def test_direct_agrees_with_classical_path(reg13):
    ctx = reg13.ctx
    checked = 0
    for f, g, r in _pairs(reg13, 60):
        a = semitransvectant_direct(ctx, f.semi, g.semi, r)
        b = semitransvectant(ctx, f.semi, g.semi, r)
        assert (a is None) == (b is None), (f.name, g.name, r)
        if a is not None:
            assert a.core == b.core and a.order == b.order
        checked += 1
    assert checked >= 50


def test_order_rule_on_replayed_constructions(replayed):
    reg, _ = replayed
    ctx = reg.ctx
    for rec in reg.records:
        if rec.semi is None:
            continue
        # weight formula everywhere, D-nilpotency where it is cheap
        assert ctx.d * rec.degree - 2 * ctx.weight(rec.semi.core) == rec.order
        if rec.degree <= 6:
            assert order(ctx, rec.semi.poly) == rec.order


def test_order_rule_on_random_pairs(reg13):
    ctx = reg13.ctx
    for f, g, r in _pairs(reg13, 40, seed=3):
        s = semitransvectant_direct(ctx, f.semi, g.semi, r)
        if s is not None:
            assert s.order == f.order + g.order - 2 * r == order(ctx, s.poly)


@pytest.mark.parametrize("gname", ["dv1", "tr3", "ch7", "pt4", "sh9"])
def test_invariant_factors_out(reg13, gname):
    # [t, f g]^i = f [t, g]^i for an invariant f
    ctx = reg13.ctx
    t = SemiInvariant.base(ctx)
    f, g = reg13["ch1"].semi, reg13[gname].semi
    assert f.order == 0
    for i in range(0, min(ctx.d, g.order) + 1):
        lhs = semitransvectant_direct(ctx, t, f * g, i)
        rhs = semitransvectant_direct(ctx, t, g, i)
        if rhs is None:
            assert lhs is None
        else:
            assert lhs.core == SemiInvariant(ctx, f.core * rhs.core).core


def test_reducibility_rule_spot_checks(reg13):
    """[t, fg]^i for i <= min(d, max(ord f, ord g)): holds at some levels, not all."""
    ctx = reg13.ctx
    eng = CellEngine(reg13)
    t = SemiInvariant.base(ctx)
    m = reg13["dv1"].semi * reg13["dv3"].semi
    verdicts = {}
    for i in range(0, 8):
        s = semitransvectant_direct(ctx, t, m, i)
        verdicts[i] = None if s is None else eng.in_span_exact(5, s.order, [], s)
    assert verdicts[1] is True
    assert verdicts[5] is False and verdicts[7] is False
    # smallest counterexample: [t, t*t]^3 is a nonzero element of C_{3,15}, a cell with no products
    s = semitransvectant_direct(ctx, t, t * t, 3)
    assert s is not None and s.order == 15
    assert eng.vectors(3, 15) == []
