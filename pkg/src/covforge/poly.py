"""Exact sparse polynomials in t, x1..xd, z2..zd, Y1, Y2 (Laurent in t only).

A monomial is packed into one Python int.  Every variable other than ``t``
owns a fixed-width bit field; the exponent of ``t`` lives above all fields,
so it may be negative and monomial multiplication is plain int addition.
Coefficients are ``int`` or ``fractions.Fraction``; a fraction with
denominator 1 is always stored as an ``int``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

import numpy as np

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1

Scalar = Union[int, Fraction]


def scalar(c) -> Scalar:
    """Coerce to an exact rational; floats are refused."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        f = Fraction(int(c.numerator), int(c.denominator))
        return f.numerator if f.denominator == 1 else f
    if isinstance(c, str):
        return scalar(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


class Ring:
    """Variable layout for binary forms of degree ``d``.

    Variable order (also the monomial order, smallest first):
    t < x1 < ... < xd < z2 < ... < zd < Y1 < Y2.
    """

    def __init__(self, d: int):
        if not 1 <= d <= 12:
            raise ValueError(f"form degree must be in 1..12, got {d}")
        self.d = d
        names = ["t"]
        names += [f"x{i}" for i in range(1, d + 1)]
        names += [f"z{i}" for i in range(2, d + 1)]
        names += ["Y1", "Y2"]
        self.names = tuple(names)
        self.index = {n: k for k, n in enumerate(names)}
        self.nvars = len(names)
        self.shifts = tuple([(self.nvars - 1) * FIELD_BITS] + [(k - 1) * FIELD_BITS for k in range(1, self.nvars)])
        self.t_shift = self.shifts[0]
        self.low_mask = (1 << self.t_shift) - 1
        self.units = tuple(1 << s for s in self.shifts)

    def __repr__(self) -> str:
        return f"ring({self.d})"

    def __reduce__(self):
        return (ring, (self.d,))

    def var_index(self, v) -> int:
        if isinstance(v, int):
            if not 0 <= v < self.nvars:
                raise ValueError(f"variable index {v} out of range")
            return v
        try:
            return self.index[v]
        except KeyError:
            raise ValueError(f"unknown variable {v!r} for d={self.d}") from None

    def encode(self, exps: Iterable[int]) -> int:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        key = exps[0] << self.t_shift
        for k in range(1, self.nvars):
            e = exps[k]
            if not 0 <= e <= FIELD_MASK:
                raise ValueError(f"exponent {e} of {self.names[k]} out of range")
            key |= e << self.shifts[k]
        return key

    def decode(self, key: int) -> tuple[int, ...]:
        low = key & self.low_mask
        return (key >> self.t_shift,) + tuple((low >> s) & FIELD_MASK for s in self.shifts[1:])

    def exponent(self, key: int, k: int) -> int:
        if k == 0:
            return key >> self.t_shift
        return (key >> self.shifts[k]) & FIELD_MASK

    def monomial_key(self, m) -> int:
        """Packed key from an exponent tuple or a ``{name: exponent}`` mapping."""
        if isinstance(m, int):
            return m
        if isinstance(m, Mapping):
            exps = [0] * self.nvars
            for v, e in m.items():
                exps[self.var_index(v)] += e
            return self.encode(exps)
        return self.encode(m)

    def sort_key(self, key: int):
        exps = self.decode(key)
        return (sum(exps), exps[::-1])

    # constructors
    def zero(self) -> "Poly":
        return Poly._raw(self, {})

    def one(self) -> "Poly":
        return Poly._raw(self, {0: 1})

    def const(self, c) -> "Poly":
        c = scalar(c)
        return Poly._raw(self, {0: c} if c else {})

    def var(self, v, power: int = 1) -> "Poly":
        k = self.var_index(v)
        if power < 0 and k != 0:
            raise ValueError("only t may carry a negative exponent")
        return Poly._raw(self, {power * self.units[k]: 1})

    def poly(self, terms) -> "Poly":
        """Build from ``{monomial: coefficient}``; monomials as tuples or name maps."""
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        out: dict[int, Scalar] = {}
        for m, c in items:
            k = self.monomial_key(m)
            out[k] = out.get(k, 0) + scalar(c)
        return Poly._raw(self, _clean(out))

    def parse(self, text: str) -> "Poly":
        return parse(text, self)


@lru_cache(maxsize=None)
def ring(d: int) -> Ring:
    return Ring(d)


def _clean(terms: dict) -> dict:
    out = {}
    for k, c in terms.items():
        if c:
            if type(c) is Fraction and c.denominator == 1:
                c = c.numerator
            out[k] = c
    return out


class Poly:
    """Immutable sparse polynomial over the rationals.

    ``terms`` maps packed monomials to nonzero coefficients.  Use
    :meth:`terms` for a decoded ``{exponent tuple: coefficient}`` view.
    """

    __slots__ = ("ring", "_t", "_hash")

    def __init__(self, ring: Ring, terms=None):
        self.ring = ring
        self._t = ring.poly(terms or {})._t
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Poly":
        p = object.__new__(cls)
        p.ring = ring
        p._t = terms
        p._hash = None
        return p

    # inspection
    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    @property
    def is_zero(self) -> bool:
        return not self._t

    def items(self):
        """Packed ``(key, coefficient)`` pairs; see :meth:`Ring.decode`."""
        return self._t.items()

    def terms(self) -> dict[tuple[int, ...], Scalar]:
        dec = self.ring.decode
        return {dec(k): c for k, c in self._t.items()}

    def coefficient(self, m) -> Scalar:
        return self._t.get(self.ring.monomial_key(m), 0)

    def constant_term(self) -> Scalar:
        return self._t.get(0, 0)

    def sorted_keys(self, reverse: bool = True) -> list[int]:
        return sorted(self._t, key=self.ring.sort_key, reverse=reverse)

    def leading_term(self) -> tuple[tuple[int, ...], Scalar]:
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        k = max(self._t, key=self.ring.sort_key)
        return self.ring.decode(k), self._t[k]

    def variables(self) -> set[str]:
        used = set()
        for k in self._t:
            exps = self.ring.decode(k)
            used.update(self.ring.names[i] for i, e in enumerate(exps) if e)
        return used

    def uses(self, v) -> bool:
        i = self.ring.var_index(v)
        ex = self.ring.exponent
        return any(ex(k, i) for k in self._t)

    def degree(self, variables=None) -> int:
        """Maximum total degree over the given variables (default: t and the x's)."""
        if not self._t:
            raise ValueError("degree of the zero polynomial")
        if variables is None:
            idx = range(0, self.ring.d + 1)
        else:
            idx = [self.ring.var_index(v) for v in variables]
        ex = self.ring.exponent
        return max(sum(ex(k, i) for i in idx) for k in self._t)

    def min_exponent(self, v) -> int:
        i = self.ring.var_index(v)
        return min(self.ring.exponent(k, i) for k in self._t)

    def max_exponent(self, v) -> int:
        i = self.ring.var_index(v)
        return max(self.ring.exponent(k, i) for k in self._t)

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self._t.values())

    # arithmetic
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise ValueError(f"mixing polynomials of {self.ring} and {other.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if len(other._t) > len(self._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        out = dict(a)
        get = out.get
        for k, c in b.items():
            out[k] = get(k, 0) + c
        return Poly._raw(self.ring, _clean(out))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.ring, {k: -c for k, c in self._t.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def scale(self, c) -> "Poly":
        c = scalar(c)
        if not c:
            return self.ring.zero()
        return Poly._raw(self.ring, _clean({k: v * c for k, v in self._t.items()}))

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._coerce(other)
        a, b = self._t, other._t
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, Scalar] = {}
        get = out.get
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return Poly._raw(self.ring, _clean(out))

    def __rmul__(self, other) -> "Poly":
        return self.scale(other)

    def __truediv__(self, c) -> "Poly":
        c = scalar(c)
        if not c:
            raise ZeroDivisionError("polynomial divided by zero")
        return self.scale(Fraction(1) / c)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            if len(self._t) != 1:
                raise ValueError("negative power of a non-monomial")
            (k, c), = self._t.items()
            if k & self.ring.low_mask:
                raise ValueError("only powers of t may be inverted")
            return Poly._raw(self.ring, _clean({k * n: Fraction(1) / Fraction(c) ** -n}))
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ring is other.ring and self._t == other._t
        try:
            other = scalar(other)
        except TypeError:
            return NotImplemented
        return self._t == ({0: other} if other else {})

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.d, frozenset(self._t.items())))
        return self._hash

    # calculus and substitution
    def diff(self, v, times: int = 1) -> "Poly":
        """Formal partial derivative, applied ``times`` times."""
        i = self.ring.var_index(v)
        unit = self.ring.units[i]
        ex = self.ring.exponent
        terms = self._t
        for _ in range(times):
            out = {}
            for k, c in terms.items():
                e = ex(k, i)
                if e:
                    out[k - unit] = c * e
            terms = out
        return Poly._raw(self.ring, terms)

    def filter(self, keep) -> "Poly":
        """Terms whose decoded exponent tuple satisfies ``keep``."""
        dec = self.ring.decode
        return Poly._raw(self.ring, {k: c for k, c in self._t.items() if keep(dec(k))})

    def without(self, v) -> "Poly":
        """Set ``v`` to zero (drop every term in which it occurs)."""
        i = self.ring.var_index(v)
        if i == 0:
            raise ValueError("t is a unit; it cannot be set to zero")
        s = self.ring.shifts[i]
        return Poly._raw(self.ring, {k: c for k, c in self._t.items() if not (k >> s) & FIELD_MASK})

    def coefficient_of(self, v, e: int) -> "Poly":
        """Coefficient of ``v**e`` as a polynomial free of ``v``."""
        i = self.ring.var_index(v)
        ex = self.ring.exponent
        off = e * self.ring.units[i]
        return Poly._raw(self.ring, {k - off: c for k, c in self._t.items() if ex(k, i) == e})

    def substitute(self, bindings: Mapping) -> "Poly":
        """Simultaneous substitution ``{variable: Poly or scalar}``.

        A bound variable raised to a negative power (only ``t`` can be) must
        be bound to a monomial in ``t``; anything else would need division by
        a non-monomial and is rejected.
        """
        R = self.ring
        bound = {}
        for v, q in bindings.items():
            bound[R.var_index(v)] = self._coerce(q)
        if not bound:
            return self
        free_mask = 0
        for i in bound:
            if i == 0:
                continue
            free_mask |= FIELD_MASK << R.shifts[i]
        powers: dict[tuple[int, int], Poly] = {}

        def power(i: int, e: int) -> Poly:
            key = (i, e)
            if key not in powers:
                if e < 0:
                    powers[key] = bound[i] ** e
                elif e == 0:
                    powers[key] = R.one()
                elif e == 1:
                    powers[key] = bound[i]
                else:
                    powers[key] = power(i, e // 2) * power(i, e - e // 2)
            return powers[key]

        order = sorted(bound)
        groups: dict[tuple, dict] = {}
        ex = R.exponent
        for k, c in self._t.items():
            sig = tuple(ex(k, i) for i in order)
            rest = k
            if 0 in bound:
                rest -= sig[0] * R.units[0]
            rest &= ~free_mask
            g = groups.setdefault(sig, {})
            g[rest] = g.get(rest, 0) + c
        out = R.zero()
        for sig, rest in groups.items():
            term = Poly._raw(R, _clean(rest))
            for i, e in zip(order, sig):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def evaluate(self, values: Mapping) -> Scalar:
        """Exact value at a point given as ``{variable: rational}`` covering every used variable."""
        R = self.ring
        vals = [None] * R.nvars
        for v, a in values.items():
            vals[R.var_index(v)] = scalar(a)
        total = Fraction(0)
        for k, c in self._t.items():
            term = Fraction(c)
            for i, e in enumerate(R.decode(k)):
                if e:
                    if vals[i] is None:
                        raise ValueError(f"no value for {R.names[i]}")
                    term *= Fraction(vals[i]) ** e
            total += term
        return scalar(total)

    # normalization and text
    def content(self) -> Fraction:
        if not self._t:
            raise ValueError("content of the zero polynomial")
        nums = [Fraction(c).numerator for c in self._t.values()]
        dens = [Fraction(c).denominator for c in self._t.values()]
        return Fraction(math.gcd(*nums), math.lcm(*dens))

    def primitive(self) -> "Poly":
        return primitive_normalize(self)

    def __str__(self) -> str:
        return to_text(self, explicit=False)

    def __repr__(self) -> str:
        return f"Poly({to_text(self, explicit=False)!r}, d={self.ring.d})"


def primitive_normalize(p: Poly) -> Poly:
    """Scale to coprime integer coefficients with a positive leading coefficient."""
    return p * normalizing_factor(p)


def normalizing_factor(p: Poly) -> Fraction:
    if p.is_zero:
        raise ValueError("cannot normalize the zero polynomial")
    lam = 1 / p.content()
    if p.leading_term()[1] < 0:
        lam = -lam
    return lam


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def diff(p: Poly, v) -> Poly:
    return p.diff(v)


def substitute(p: Poly, bindings: Mapping) -> Poly:
    return p.substitute(bindings)


def _format_coeff(c: Scalar) -> str:
    return str(c) if type(c) is int else f"{c.numerator}/{c.denominator}"


def to_text(p: Poly, explicit: bool = True) -> str:
    """Text form, terms in decreasing monomial order.

    ``explicit=True`` is the canonical serialization: every coefficient and
    every exponent is written, e.g. ``1*t^1*x4^1 - 4*x1^1*x3^1 + 3*x2^2``.
    """
    if p.is_zero:
        return "0"
    R = p.ring
    parts = []
    for n, k in enumerate(p.sorted_keys()):
        c = p._t[k]
        neg = c < 0
        a = -c if neg else c
        factors = []
        for i, e in enumerate(R.decode(k)):
            if e:
                factors.append(f"{R.names[i]}^{e}" if explicit or e != 1 else R.names[i])
        if explicit or not factors or a != 1:
            factors.insert(0, _format_coeff(a))
        body = "*".join(factors)
        if n == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"{'-' if neg else '+'} {body}")
    return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z]\w*)(?:\s*\^\s*(?P<exp>[+-]?\d+))?|(?P<op>[-+*]))")


def parse(text: str, R: Ring) -> Poly:
    """Parse a sum of terms like ``3/2*x2^2 - x1*x3 + t^-2*z4``.

    ``*`` between factors is optional and a missing exponent means 1.
    Accepts everything :func:`to_text` produces.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    pos = 0
    terms: dict[int, Scalar] = {}
    sign = 1
    coeff: Scalar = 1
    exps = [0] * R.nvars
    have_factor = False
    expect_term = True

    def flush():
        nonlocal sign, coeff, exps, have_factor
        if not have_factor:
            raise ValueError(f"dangling operator in {text!r}")
        k = R.encode(exps)
        terms[k] = terms.get(k, 0) + sign * coeff
        sign, coeff, exps, have_factor = 1, 1, [0] * R.nvars, False

    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        pos = m.end()
        if m.group("op"):
            op = m.group("op")
            if op == "*":
                if not have_factor:
                    raise ValueError(f"misplaced '*' in {text!r}")
                continue
            if have_factor:
                flush()
            elif not expect_term:
                raise ValueError(f"misplaced sign in {text!r}")
            sign *= -1 if op == "-" else 1
            expect_term = True
            continue
        if m.group("num"):
            coeff = coeff * scalar(Fraction(m.group("num")))
        else:
            name = m.group("var")
            e = int(m.group("exp")) if m.group("exp") else 1
            i = R.var_index(name)
            if e < 0 and i != 0:
                raise ValueError(f"negative exponent on {name} in {text!r}")
            exps[i] += e
        have_factor = True
        expect_term = False
    flush()
    return Poly._raw(R, _clean(terms))


# modular evaluation -------------------------------------------------------

def coeff_mod(c: Scalar, p: int) -> int:
    if type(c) is int:
        return c % p
    return c.numerator * pow(c.denominator, -1, p) % p


def evaluate_mod(poly: Poly, points: Mapping, p: int) -> np.ndarray:
    """Values of ``poly`` mod ``p`` at many points at once.

    ``points`` maps variable names to int64 arrays (all the same length) of
    residues; variables with negative exponents need unit residues.
    Requires ``p < 2**31.5`` so products fit in int64.
    """
    R = poly.ring
    arrays = {R.var_index(v): np.asarray(a, dtype=np.int64) % p for v, a in points.items()}
    npts = len(next(iter(arrays.values())))
    if poly.is_zero:
        return np.zeros(npts, dtype=np.int64)
    keys = list(poly._t)
    exps = np.array([R.decode(k) for k in keys], dtype=np.int64)
    coeffs = np.array([coeff_mod(poly._t[k], p) for k in keys], dtype=np.int64)
    vals = np.ones((len(keys), npts), dtype=np.int64)
    for i in range(R.nvars):
        col = exps[:, i]
        if not col.any():
            continue
        if i not in arrays:
            raise ValueError(f"no values for {R.names[i]}")
        base = arrays[i]
        lo, hi = int(col.min()), int(col.max())
        table = {}
        if lo < 0:
            inv = np.array([pow(int(b), -1, p) for b in base], dtype=np.int64)
            acc = np.ones(npts, dtype=np.int64)
            for e in range(-1, lo - 1, -1):
                acc = acc * inv % p
                table[e] = acc
        acc = np.ones(npts, dtype=np.int64)
        table[0] = acc
        for e in range(1, hi + 1):
            acc = acc * base % p
            table[e] = acc
        stack = np.stack([table[e] for e in range(lo, hi + 1)])
        vals = vals * stack[col - lo] % p
    # coefficient-weighted column sums without int64 overflow
    out = np.zeros(npts, dtype=np.int64)
    chunk = 4
    for s in range(0, len(keys), chunk):
        part = (vals[s:s + chunk] * coeffs[s:s + chunk, None]) % p
        out = (out + part.sum(axis=0)) % p
    return out
