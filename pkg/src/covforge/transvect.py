"""Transvectants of covariants and semitransvectants of semi-invariants."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .poly import Poly
from .sl2 import SemiInvariant, _ctx, kappa, kappa_inverse, y_order


def falling(m: int, i: int) -> int:
    out = 1
    for k in range(i):
        out *= m - k
    return out


def transvectant(F: Poly, G: Poly, r: int) -> Poly:
    """Classical r-th transvectant (F, G)^r via the Omega process.

    Scaled by (m-r)!(k-r)!/(m!k!) where m, k are the orders of F, G.
    """
    if r < 0:
        raise ValueError("negative transvectant level")
    m = y_order(F) if not F.is_zero else 0
    k = y_order(G) if not G.is_zero else 0
    if r > min(m, k):
        raise ValueError(f"level {r} exceeds min order {min(m, k)}")
    out = F.ring.zero()
    for i in range(r + 1):
        a = F.diff("Y1", r - i).diff("Y2", i)
        b = G.diff("Y1", i).diff("Y2", r - i)
        if a.is_zero or b.is_zero:
            continue
        out = out + (-1) ** i * comb(r, i) * a * b
    return out * Fraction(factorial(m - r) * factorial(k - r), factorial(m) * factorial(k))


def _check_level(f: SemiInvariant, g: SemiInvariant, r: int) -> None:
    if f.ctx is not g.ctx:
        raise ValueError("semi-invariants of different forms")
    if r < 0 or r > min(f.order, g.order):
        raise ValueError(f"level {r} out of range 0..{min(f.order, g.order)}")


def semitransvectant(ctx, f: SemiInvariant, g: SemiInvariant, r: int) -> SemiInvariant | None:
    """kappa((kappa^-1 f, kappa^-1 g)^r), normalized; None when it vanishes.

    Goes through full covariants, so it is the slow reference path.
    """
    ctx = _ctx(ctx)
    _check_level(f, g, r)
    T = transvectant(kappa_inverse(ctx, f), kappa_inverse(ctx, g), r)
    if T.is_zero:
        return None
    return kappa(ctx, T)


def semitransvectant_core(f: SemiInvariant, g: SemiInvariant, r: int) -> Poly:
    """Unnormalized core of [f, g]^r from restricted D-chains.

    ``sum_k (-1)^k C(r,k) D^k f / [m]_k * D^(r-k) g / [n]_(r-k)`` at x1 = 0,
    cleared of denominators by the factor [m]_r [n]_r.
    """
    ctx = f.ctx
    m, n = f.order, g.order
    cf = f.chain(r)
    cg = g.chain(r)
    out = ctx.R.zero()
    for k in range(r + 1):
        a, b = cf[k], cg[r - k]
        if a.is_zero or b.is_zero:
            continue
        c = (-1) ** k * comb(r, k) * (falling(m, r) // falling(m, k)) * (falling(n, r) // falling(n, r - k))
        out = out + (a * b).scale(c)
    return ctx.z_to_core(out)


def semitransvectant_direct(ctx, f: SemiInvariant, g: SemiInvariant, r: int) -> SemiInvariant | None:
    """[f, g]^r computed in the z-chart; None when it vanishes."""
    ctx = _ctx(ctx)
    _check_level(f, g, r)
    core = semitransvectant_core(f, g, r)
    if core.is_zero:
        return None
    return SemiInvariant(ctx, core, f.degree + g.degree, f.order + g.order - 2 * r)
