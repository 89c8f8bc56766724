"""Construction expressions: ``t``, names, products and ``[u,v]^r``.

Grammar::

    expr    := factor ('*' factor)*
    factor  := atom ('^' INT)?          -- power, except on a bracket
    atom    := NAME | '[' expr ',' expr ']' ('^' INT)? | '(' expr ')'

A bracket's ``^r`` is its level.  A bracket without a level is allowed only
at the top of an expression; its level is then inferred from a target order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..sl2 import SemiInvariant
from ..transvect import semitransvectant_direct


class ConstructionError(ValueError):
    pass


class ZeroConstruction(ConstructionError):
    """The expression evaluates to the zero semi-invariant."""


@dataclass(frozen=True)
class Name:
    name: str

    def text(self) -> str:
        return self.name

    def names(self) -> set[str]:
        return {self.name}


@dataclass(frozen=True)
class Product:
    factors: tuple  # of (node, power)

    def text(self) -> str:
        parts = []
        for node, e in self.factors:
            s = node.text()
            if isinstance(node, Product):
                s = f"({s})"
            parts.append(s if e == 1 else f"{s}^{e}")
        return "*".join(parts)

    def names(self) -> set[str]:
        out = set()
        for node, _ in self.factors:
            out |= node.names()
        return out


@dataclass(frozen=True)
class Transvect:
    left: object
    right: object
    level: int | None

    def text(self) -> str:
        s = f"[{self.left.text()},{self.right.text()}]"
        return s if self.level is None else f"{s}^{self.level}"

    def names(self) -> set[str]:
        return self.left.names() | self.right.names()


_TOK = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>[\[\],^*()]))")


def _tokens(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOK.match(text, pos)
        if not m or m.end() == pos:
            raise ConstructionError(f"cannot parse construction {text!r} at {pos}")
        pos = m.end()
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
    return out


def parse(text: str):
    toks = _tokens(text)
    pos = 0

    def peek(val=None):
        if pos < len(toks) and (val is None or toks[pos][1] == val):
            return toks[pos]
        return None

    def take(val=None):
        nonlocal pos
        tok = peek(val)
        if tok is None:
            want = val or "token"
            raise ConstructionError(f"expected {want} in {text!r}")
        pos += 1
        return tok

    def expr():
        factors = [factor()]
        while peek("*"):
            take("*")
            factors.append(factor())
        if len(factors) == 1 and factors[0][1] == 1:
            return factors[0][0]
        return Product(tuple(factors))

    def integer():
        kind, val = take()
        if kind != "int":
            raise ConstructionError(f"expected an integer in {text!r}")
        return int(val)

    def factor():
        if peek("["):
            take("[")
            left = expr()
            take(",")
            right = expr()
            take("]")
            level = None
            if peek("^"):
                take("^")
                level = integer()
            return (Transvect(left, right, level), 1)
        if peek("("):
            take("(")
            node = expr()
            take(")")
        else:
            kind, val = take()
            if kind != "name":
                raise ConstructionError(f"unexpected {val!r} in {text!r}")
            node = Name(val)
        e = 1
        if peek("^"):
            take("^")
            e = integer()
            if e < 1:
                raise ConstructionError("powers must be positive")
        return (node, e)

    node = expr()
    if pos != len(toks):
        raise ConstructionError(f"trailing input in {text!r}")
    _check_levels(node, top=True)
    return node


def _check_levels(node, top: bool) -> None:
    if isinstance(node, Transvect):
        if node.level is None and not top:
            raise ConstructionError("only the outermost bracket may omit its level")
        _check_levels(node.left, False)
        _check_levels(node.right, False)
    elif isinstance(node, Product):
        for n, _ in node.factors:
            _check_levels(n, False)


def infer_level(order_left: int, order_right: int, target_order: int) -> int:
    """r with ord(f) + ord(g) - 2r = target, or raise."""
    diff = order_left + order_right - target_order
    if diff < 0 or diff % 2:
        raise ConstructionError(f"no integer level gives order {target_order} from orders {order_left}, {order_right}")
    r = diff // 2
    if r > min(order_left, order_right):
        raise ConstructionError(f"inferred level {r} exceeds the smaller order")
    return r


def evaluate(node, env: dict, ctx=None, target_order: int | None = None):
    """Evaluate to a SemiInvariant; returns (value, resolved node).

    ``env`` maps names to SemiInvariants; ``t`` defaults to the base form.
    """
    if isinstance(node, str):
        node = parse(node)
    if ctx is None:
        ctx = next(iter(env.values())).ctx
    if isinstance(node, Name):
        if node.name in env:
            return env[node.name], node
        if node.name == "t":
            return SemiInvariant.base(ctx), node
        raise ConstructionError(f"unknown generator {node.name!r}")
    if isinstance(node, Product):
        value = None
        for sub, e in node.factors:
            v, _ = evaluate(sub, env, ctx)
            v = v ** e if e != 1 else v
            value = v if value is None else value * v
        return value, node
    if isinstance(node, Transvect):
        f, _ = evaluate(node.left, env, ctx)
        g, _ = evaluate(node.right, env, ctx)
        level = node.level
        if level is None:
            if target_order is None:
                raise ConstructionError(f"level missing in {node.text()} and no order to infer it from")
            level = infer_level(f.order, g.order, target_order)
            node = Transvect(node.left, node.right, level)
        if level > min(f.order, g.order):
            raise ConstructionError(f"level {level} out of range in {node.text()}")
        out = semitransvectant_direct(ctx, f, g, level)
        if out is None:
            raise ZeroConstruction(f"{node.text()} vanishes")
        return out, node
    raise TypeError(f"not a construction node: {node!r}")
