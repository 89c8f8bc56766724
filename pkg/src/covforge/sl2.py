"""Semi-invariant calculus: the derivation D, order, kappa and its inverse.

Coordinates.  The generic form is ``t*Y1^d + sum binom(d,i) x_i Y1^(d-i) Y2^i``.
D acts on x-coordinates as ``sum (d-i) x_{i+1} d/dx_i`` (with ``x_0 = t``), so
``D^i(t)/i! = binom(d,i) x_i``.  The chart ``(t, x1, z2..zd)`` is where the
semi-invariants live: they are exactly the Laurent polynomials in ``t, z``
with no ``x1`` that are also polynomial in the x's.

Restriction.  Setting ``x1 = 0`` sends ``z_i`` to ``x_i t^(i-1)``, so a
semi-invariant is determined by its restriction (its *core*) and the
z-form is obtained from the core by the monomial relabelling
``x^a t^e -> z^a t^(e - sum a_i (i-1))``.  Restriction is a ring map, so
products, spans and ranks can all be computed on cores.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .poly import FIELD_MASK, Poly, Ring, _clean, normalizing_factor, primitive_normalize, ring


class FormContext:
    """Everything that depends only on the form degree ``d``."""

    def __init__(self, d: int):
        self.d = d
        self.R: Ring = ring(d)
        R = self.R
        self.t = R.var("t")
        self.xi = [R.var(f"x{i}") for i in range(1, d + 1)]
        self.xi.insert(0, self.t)  # xi[i] = x_i, xi[0] = t
        self.X_IDX = [0] + [R.index[f"x{i}"] for i in range(1, d + 1)]
        self.Z_IDX = {i: R.index[f"z{i}"] for i in range(2, d + 1)}
        self.Y1, self.Y2 = R.index["Y1"], R.index["Y2"]
        self.z_in_x = {i: self._z_in_x(i) for i in range(2, d + 1)}
        self.x_in_chart = self._x_in_chart()
        # D on x-coordinates: x_i -> (d-i) x_{i+1}
        self._dx = [(self.X_IDX[i], d - i, self.X_IDX[i + 1]) for i in range(d)]
        self.chart_D = self._chart_images()
        self._chart_rules = self._compile_chart_rules()
        self._relabel = self._relabel_tables()

    def __repr__(self) -> str:
        return f"FormContext(d={self.d})"

    def __reduce__(self):
        return (context, (self.d,))

    # coordinates -----------------------------------------------------------
    def _z_in_x(self, i: int) -> Poly:
        x, t = self.xi, self.t
        out = (i - 1) * (-1) ** (i + 1) * x[1] ** i
        for k in range(0, i - 1):
            out = out + (-1) ** k * comb(i, k) * x[i - k] * x[1] ** k * t ** (i - k - 1)
        return out

    def _x_in_chart(self) -> dict[int, Poly]:
        """x_i written in t, x1, z (Laurent in t), by back-substitution."""
        R, t = self.R, self.t
        out = {0: t, 1: self.xi[1]}
        for i in range(2, self.d + 1):
            rest = self.z_in_x[i] - self.xi[i] * t ** (i - 1)
            rest = rest.substitute({f"x{k}": out[k] for k in range(2, i)})
            out[i] = (R.var(f"z{i}") - rest) * t ** (-(i - 1))
        return out

    def _chart_images(self) -> dict[int, Poly]:
        dx1 = (self.d - 1) * self.x_in_chart[2] if self.d > 1 else self.R.zero()
        images = {0: self.d * self.xi[1], self.X_IDX[1]: dx1}
        for i in range(2, self.d + 1):
            images[self.Z_IDX[i]] = to_z(self, D_apply(self, self.z_in_x[i]))
        return images

    def _compile_chart_rules(self):
        R = self.R
        rules = []
        for v, img in self.chart_D.items():
            if not img.is_zero:
                rules.append((v, R.units[v], R.shifts[v], list(img.items())))
        return rules

    def _relabel_tables(self):
        R = self.R
        pairs = []
        for i in range(2, self.d + 1):
            pairs.append((R.shifts[self.X_IDX[i]], R.shifts[self.Z_IDX[i]], i - 1))
        return pairs

    # core <-> z-form ---------------------------------------------------------
    def core_to_z(self, core: Poly) -> Poly:
        R = self.R
        ut = R.units[0]
        out = {}
        for k, c in core.items():
            nk = k
            for sx, sz, w in self._relabel:
                e = (k >> sx) & FIELD_MASK
                if e:
                    nk += (e << sz) - (e << sx) - e * w * ut
            out[nk] = c
        return Poly._raw(R, out)

    def z_to_core(self, zf: Poly) -> Poly:
        """Inverse relabelling; ``zf`` must be free of x's."""
        R = self.R
        ut = R.units[0]
        xmask = 0
        for i in range(1, self.d + 1):
            xmask |= FIELD_MASK << R.shifts[self.X_IDX[i]]
        out = {}
        for k, c in zf.items():
            if k & xmask:
                raise ValueError("z-form still contains x variables")
            nk = k
            for sx, sz, w in self._relabel:
                e = (k >> sz) & FIELD_MASK
                if e:
                    nk += (e << sx) - (e << sz) + e * w * ut
            out[nk] = c
        return Poly._raw(R, out)

    def weight(self, core: Poly) -> int:
        """Isobaric weight of a core (x_i has weight i, t weight 0); errors if mixed."""
        ws = {sum(i * e for i, e in zip(range(0, self.d + 1), self.R.decode(k)[: self.d + 1])) for k in core._t}
        if len(ws) != 1:
            raise ValueError("polynomial is not isobaric")
        return ws.pop()

    # chart derivation ------------------------------------------------------
    def chart_apply(self, p: Poly, x1_cap: int | None = None) -> Poly:
        """D on a chart polynomial (t, x1, z); drops terms with x1-degree > x1_cap."""
        R = self.R
        s1 = R.shifts[self.X_IDX[1]]
        ex = R.exponent
        out: dict = {}
        get = out.get
        for k, c in p.items():
            for v, unit, shift, img in self._chart_rules:
                e = (k >> shift) & FIELD_MASK if v else k >> R.t_shift
                if not e:
                    continue
                base = k - unit
                ce = c * e
                for ik, ic in img:
                    nk = base + ik
                    if x1_cap is not None and (nk >> s1) & FIELD_MASK > x1_cap:
                        continue
                    out[nk] = get(nk, 0) + ce * ic
        return Poly._raw(R, _clean(out))

    def restricted_chain(self, zf: Poly, length: int) -> list[Poly]:
        """``[D^k(zf)|_{x1=0} for k = 0..length]`` in z-coordinates."""
        chain = [zf]
        cur = zf
        for s in range(1, length + 1):
            cur = self.chart_apply(cur, x1_cap=length - s)
            chain.append(cur.without("x1"))
        return chain


@lru_cache(maxsize=None)
def context(d: int) -> FormContext:
    return FormContext(d)


def _ctx(ctx) -> FormContext:
    return context(ctx) if isinstance(ctx, int) else ctx


def _check_no_y(ctx: FormContext, p: Poly) -> None:
    if p.uses("Y1") or p.uses("Y2"):
        raise ValueError("expected a polynomial free of Y1, Y2")


def D_apply(ctx, p: Poly) -> Poly:
    """The derivation ``sum (d-i) x_{i+1} d/dx_i`` (x_0 = t) on x-coordinates."""
    ctx = _ctx(ctx)
    _check_no_y(ctx, p)
    R = ctx.R
    out: dict = {}
    get = out.get
    for k, c in p.items():
        for v, mult, nxt in ctx._dx:
            e = R.exponent(k, v)
            if e:
                nk = k - R.units[v] + R.units[nxt]
                out[nk] = get(nk, 0) + c * e * mult
    return Poly._raw(R, _clean(out))


def order(ctx, p: Poly, bound: int | None = None) -> int:
    """Largest s with D^s(p) != 0."""
    ctx = _ctx(ctx)
    if p.is_zero:
        raise ValueError("order of the zero polynomial")
    _check_no_y(ctx, p)
    if bound is None:
        bound = max(p.degree(), 1) * ctx.d
    s = 0
    cur = D_apply(ctx, p)
    while not cur.is_zero:
        s += 1
        if s > bound:
            raise ValueError("D is not nilpotent on this polynomial within the bound; not a semi-invariant")
        cur = D_apply(ctx, cur)
    return s


ord = order  # the customary name; shadows the builtin only inside this module


def to_z(ctx, p: Poly) -> Poly:
    """Rewrite an x-polynomial in the chart variables t, x1, z2..zd."""
    ctx = _ctx(ctx)
    _check_no_y(ctx, p)
    if any(p.uses(f"z{i}") for i in range(2, ctx.d + 1)):
        raise ValueError("input already contains z variables")
    return p.substitute({f"x{i}": ctx.x_in_chart[i] for i in range(2, ctx.d + 1)})


def from_z(ctx, p: Poly) -> Poly:
    """Inverse of :func:`to_z` (may leave negative powers of t)."""
    ctx = _ctx(ctx)
    return p.substitute({f"z{i}": ctx.z_in_x[i] for i in range(2, ctx.d + 1)})


def is_semiinvariant(ctx, p: Poly) -> bool:
    ctx = _ctx(ctx)
    if p.is_zero:
        return True
    if p.min_exponent("t") < 0:
        return False
    return not to_z(ctx, p).uses("x1")


def lift(ctx, core: Poly) -> Poly:
    """Rebuild the full x-form of a semi-invariant from its x1 = 0 restriction.

    Uses the annihilator ``E = sum i x_{i-1} d/dx_i`` (x_0 = t): writing
    ``f = sum x1^n f_n`` gives ``(n+1) t f_{n+1} = -(E'' f_n + 2 d/dx2 f_{n-1})``
    where ``E''`` is the part of E with i >= 3.
    """
    ctx = _ctx(ctx)
    R, d = ctx.R, ctx.d
    if core.uses("x1"):
        raise ValueError("core must be free of x1")

    def e2(f: Poly) -> Poly:
        out: dict = {}
        get = out.get
        for k, c in f.items():
            for i in range(3, d + 1):
                e = R.exponent(k, ctx.X_IDX[i])
                if e:
                    nk = k - R.units[ctx.X_IDX[i]] + R.units[ctx.X_IDX[i - 1]]
                    out[nk] = get(nk, 0) + c * e * i
        return Poly._raw(R, _clean(out))

    x1 = ctx.xi[1]
    tinv = R.var("t", -1)
    prev, cur = R.zero(), core
    total = core
    n = 0
    limit = core.degree() + 1 if not core.is_zero else 0
    while not (prev.is_zero and cur.is_zero) and n <= limit:
        nxt = -(e2(cur) + 2 * prev.diff("x2")) * tinv / (n + 1)
        n += 1
        total = total + nxt * x1 ** n
        prev, cur = cur, nxt
    return total


def kappa_inverse(ctx, a) -> Poly:
    """Robert reconstruction: ``sum D^i(a)/i! Y1^(m-i) Y2^i`` with m = ord(a)."""
    ctx = _ctx(ctx)
    R = ctx.R
    if isinstance(a, SemiInvariant):
        p, m = a.poly, a.order
    else:
        p = a
        m = order(ctx, p)
    out = R.zero()
    cur = p
    for i in range(m + 1):
        if cur.is_zero:
            break
        out = out + cur * Fraction(1, factorial(i)) * R.var("Y1", m - i) * R.var("Y2", i)
        cur = D_apply(ctx, cur)
    return out


def y_order(F: Poly) -> int:
    """Common total degree in Y1, Y2; raises if F is not homogeneous in them."""
    R = F.ring
    iy1, iy2 = R.index["Y1"], R.index["Y2"]
    orders = {R.exponent(k, iy1) + R.exponent(k, iy2) for k in F._t}
    if len(orders) != 1:
        raise ValueError("covariant is not homogeneous in Y1, Y2")
    return orders.pop()


def kappa(ctx, F: Poly) -> "SemiInvariant":
    """Leading coefficient (coefficient of Y1^k), normalized."""
    ctx = _ctx(ctx)
    if F.is_zero:
        raise ValueError("kappa of the zero covariant")
    k = y_order(F)
    lead = F.coefficient_of("Y1", k).coefficient_of("Y2", 0)
    return SemiInvariant.from_poly(ctx, lead, order=k)


class SemiInvariant:
    """A homogeneous semi-invariant stored through its x1 = 0 restriction.

    ``core`` is primitive with positive leading coefficient.  The full
    x-form (``poly``) and the z-form are derived lazily.
    """

    __slots__ = ("ctx", "core", "degree", "order", "_poly", "_z", "_chain", "__weakref__")

    def __init__(self, ctx, core: Poly, degree: int | None = None, order: int | None = None, normalize: bool = True):
        ctx = _ctx(ctx)
        if core.is_zero:
            raise ValueError("a SemiInvariant must be nonzero")
        if core.uses("x1"):
            raise ValueError("core must be free of x1")
        if core.min_exponent("t") < 0:
            raise ValueError("core has negative powers of t")
        self.ctx = ctx
        self.core = primitive_normalize(core) if normalize else core
        if degree is None:
            degs = {sum(ctx.R.decode(k)[: ctx.d + 1]) for k in core._t}
            if len(degs) != 1:
                raise ValueError("semi-invariant is not homogeneous")
            degree = degs.pop()
        self.degree = degree
        if order is None:
            order = ctx.d * degree - 2 * ctx.weight(core)
            if order < 0:
                raise ValueError("negative order: not a semi-invariant")
        self.order = order
        self._poly = None
        self._z = None
        self._chain = None

    @classmethod
    def from_poly(cls, ctx, p: Poly, order: int | None = None, check: bool = True) -> "SemiInvariant":
        ctx = _ctx(ctx)
        _check_no_y(ctx, p)
        if check and not is_semiinvariant(ctx, p):
            raise ValueError("polynomial is not a semi-invariant")
        core = p.without("x1")
        if core.is_zero:
            raise ValueError("semi-invariant with zero restriction must be zero")
        return cls(ctx, core, order=order)

    @classmethod
    def from_z(cls, ctx, zf: Poly, **kw) -> "SemiInvariant":
        ctx = _ctx(ctx)
        return cls(ctx, ctx.z_to_core(zf), **kw)

    @classmethod
    def base(cls, ctx) -> "SemiInvariant":
        ctx = _ctx(ctx)
        return cls(ctx, ctx.t, degree=1, order=ctx.d)

    @classmethod
    def one(cls, ctx) -> "SemiInvariant":
        ctx = _ctx(ctx)
        return cls(ctx, ctx.R.one(), degree=0, order=0)

    @property
    def poly(self) -> Poly:
        """Full x-form, primitive-normalized."""
        if self._poly is None:
            self._poly = primitive_normalize(lift(self.ctx, self.core))
        return self._poly

    @property
    def zform(self) -> Poly:
        if self._z is None:
            self._z = self.ctx.core_to_z(self.core)
        return self._z

    def chain(self, length: int) -> list[Poly]:
        """Cached ``D^k(self)|_{x1=0}`` in z-coordinates, k = 0..length."""
        if self._chain is None or len(self._chain) <= length:
            self._chain = self.ctx.restricted_chain(self.zform, length)
        return self._chain[: length + 1]

    def __mul__(self, other: "SemiInvariant") -> "SemiInvariant":
        if other.ctx is not self.ctx:
            raise ValueError("mixing form degrees")
        return SemiInvariant(self.ctx, self.core * other.core, self.degree + other.degree,
                             self.order + other.order, normalize=False)

    def __pow__(self, n: int) -> "SemiInvariant":
        if n < 0:
            raise ValueError("negative power")
        return SemiInvariant(self.ctx, self.core ** n, self.degree * n, self.order * n, normalize=False)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SemiInvariant) and self.ctx is other.ctx
                and self.order == other.order and self.core == other.core)

    def __hash__(self) -> int:
        return hash((self.ctx.d, self.order, self.core))

    def __repr__(self) -> str:
        text = str(self.core)
        if len(text) > 60:
            text = text[:57] + "..."
        return f"SemiInvariant(deg={self.degree}, ord={self.order}, core={text})"

    @property
    def cell(self) -> tuple[int, int]:
        return (self.degree, self.order)
