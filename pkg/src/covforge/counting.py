"""Cayley-Sylvester dimensions and product-monomial counts."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class SeriesPoly:
    """Integer power series in T truncated after ``T**bound``."""

    __slots__ = ("coeffs", "bound")

    def __init__(self, coeffs: Sequence[int], bound: int):
        c = list(coeffs[: bound + 1])
        c += [0] * (bound + 1 - len(c))
        self.coeffs = c
        self.bound = bound

    @classmethod
    def one(cls, bound: int) -> "SeriesPoly":
        return cls([1], bound)

    def __getitem__(self, k: int) -> int:
        if k < 0 or k > self.bound:
            raise IndexError(f"coefficient {k} outside truncation 0..{self.bound}")
        return self.coeffs[k]

    def times_one_minus(self, k: int) -> "SeriesPoly":
        """Multiply by (1 - T^k)."""
        c = self.coeffs[:]
        for n in range(self.bound, k - 1, -1):
            c[n] -= c[n - k]
        return SeriesPoly(c, self.bound)

    def over_one_minus(self, k: int) -> "SeriesPoly":
        """Divide by (1 - T^k), i.e. multiply by the geometric series."""
        c = self.coeffs[:]
        for n in range(k, self.bound + 1):
            c[n] += c[n - k]
        return SeriesPoly(c, self.bound)

    def __mul__(self, other: "SeriesPoly") -> "SeriesPoly":
        b = min(self.bound, other.bound)
        out = [0] * (b + 1)
        for i, a in enumerate(self.coeffs[: b + 1]):
            if a:
                for j, c in enumerate(other.coeffs[: b + 1 - i]):
                    out[i + j] += a * c
        return SeriesPoly(out, b)

    def __eq__(self, other) -> bool:
        return isinstance(other, SeriesPoly) and self.bound == other.bound and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"SeriesPoly({self.coeffs}, bound={self.bound})"


@lru_cache(maxsize=None)
def _cs_series(d: int, i: int, bound: int) -> SeriesPoly:
    s = SeriesPoly.one(bound)
    for k in range(1, i + 1):
        s = s.times_one_minus(d + k)
    for k in range(2, i + 1):
        s = s.over_one_minus(k)
    return s


def cs_dim(d: int, i: int, j: int) -> int:
    """Dimension of the covariants of degree i and order j (Cayley-Sylvester)."""
    if d < 1 or i < 1 or j < 0:
        raise ValueError("need d, i >= 1 and j >= 0")
    n = d * i - j
    if n < 0 or n % 2:
        return 0
    w = n // 2
    # the series is symmetric-ish; cache by a bound that covers every order of this degree
    return _cs_series(d, i, d * i // 2)[w]


def partition_count(d: int, i: int, w: int) -> int:
    """Multisets of size i from {0..d} with sum w (brute-force oracle helper)."""
    if w < 0:
        return 0

    @lru_cache(maxsize=None)
    def go(size: int, top: int, rest: int) -> int:
        if size == 0:
            return 1 if rest == 0 else 0
        if rest > size * top:
            return 0
        return sum(go(size - 1, v, rest - v) for v in range(min(top, rest) + 1))

    return go(i, d, w)


# products of generators ----------------------------------------------------

def _cells(registry) -> list[tuple[int, int]]:
    gens = getattr(registry, "generators", None)
    items = gens() if callable(gens) else registry
    out = []
    for g in items:
        if g.degree < 1:
            raise ValueError("generators must have positive degree")
        out.append((g.degree, g.order))
    return out


def _payloads(registry) -> list:
    gens = getattr(registry, "generators", None)
    items = gens() if callable(gens) else registry
    return [getattr(g, "semi", g) for g in items]


def _check_complete(registry, i: int) -> None:
    check = getattr(registry, "require_complete_below", None)
    if check is not None:
        check(i)


def count_monomials(cells: Sequence[tuple[int, int]], i: int, j: int) -> int:
    """Multisets of generators (any size) with total degree i and order j."""
    table = [[0] * (j + 1) for _ in range(i + 1)]
    table[0][0] = 1
    for dg, og in cells:
        if dg > i or og > j:
            continue
        for a in range(dg, i + 1):
            row, src = table[a], table[a - dg]
            for b in range(og, j + 1):
                if src[b - og]:
                    row[b] += src[b - og]
    return table[i][j]


def sigma_count(registry, i: int, j: int) -> int:
    """Monomials with at least two factors at (degree i, order j).

    ``registry`` is anything iterable over objects with ``degree``/``order``
    (or exposing ``generators()``); registries that know their own
    completeness are asked to confirm every degree below i is done.
    """
    if i < 1 or j < 0:
        return 0
    _check_complete(registry, i)
    cells = _cells(registry)
    total = count_monomials(cells, i, j)
    return total - sum(1 for c in cells if c == (i, j))


def exponent_vectors(cells: Sequence[tuple[int, int]], i: int, j: int, min_factors: int = 2) -> Iterator[tuple[tuple[int, int], ...]]:
    """Sparse exponent vectors ``((index, power), ...)`` in lexicographic order."""
    n = len(cells)
    # reach[k]: cells (a, b) attainable from generators k.. within the target box
    reach: list[set] = [set() for _ in range(n + 1)]
    reach[n] = {(0, 0)}
    for k in range(n - 1, -1, -1):
        dg, og = cells[k]
        cur = set(reach[k + 1])
        if dg <= i and og <= j:
            frontier = list(cur)
            while frontier:
                nxt = []
                for a, b in frontier:
                    c = (a + dg, b + og)
                    if c[0] <= i and c[1] <= j and c not in cur:
                        cur.add(c)
                        nxt.append(c)
                frontier = nxt
        reach[k] = cur

    def go(k: int, a: int, b: int, acc: list):
        if (a, b) not in reach[k]:
            return
        if k == n:
            yield tuple(acc)
            return
        dg, og = cells[k]
        e = 0
        while e * dg <= a and e * og <= b:
            if e:
                acc.append((k, e))
            yield from go(k + 1, a - e * dg, b - e * og, acc)
            if e:
                acc.pop()
            e += 1

    for vec in go(0, i, j, []):
        if sum(e for _, e in vec) >= min_factors:
            yield vec


class ProductCache:
    """Memoized generator products keyed by sparse exponent vector."""

    def __init__(self, payloads: Sequence):
        self.payloads = list(payloads)
        self._cache: dict = {}

    def product(self, vec):
        if not vec:
            raise ValueError("empty product")
        hit = self._cache.get(vec)
        if hit is not None:
            return hit
        if len(vec) == 1:
            k, e = vec[0]
            g = self.payloads[k]
            out = g if e == 1 else self.product(((k, e - 1),)) * g
        else:
            out = self.product(vec[:-1]) * self.product(vec[-1:])
        self._cache[vec] = out
        return out

    def extend(self, payloads: Sequence) -> None:
        self.payloads.extend(payloads)


def enumerate_products(registry, i: int, j: int, cache: ProductCache | None = None) -> list:
    """Product semi-invariants counted by :func:`sigma_count`, deterministic order."""
    _check_complete(registry, i)
    cells = _cells(registry)
    if cache is None:
        cache = ProductCache(_payloads(registry))
    elif len(cache.payloads) < len(cells):
        cache.extend(_payloads(registry)[len(cache.payloads):])
    return [cache.product(v) for v in exponent_vectors(cells, i, j)]


def product_vectors(registry, i: int, j: int) -> list[tuple[tuple[int, int], ...]]:
    return list(exponent_vectors(_cells(registry), i, j))
