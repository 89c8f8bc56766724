"""Exact rank, syzygy dimensions and span membership for polynomial rows.

Three rank engines share one interface:

* ``bareiss`` -- fraction-free elimination over the integers; the oracle.
* ``exact`` (default) -- a certified multi-modular method.  A mod-p
  echelon gives a lower bound r together with r independent pivot rows I
  and pivot columns J.  The upper bound comes from verifying the integer
  identity ``det(A) * M[k] = Y[k] @ M[I]`` for every other row k, where
  ``A = M[I, J]`` and ``Y = det(A) * M[K, J] @ A^-1`` is the Cramer
  solution.  The identity is checked modulo enough small primes that their
  product exceeds twice a Hadamard-type bound on both sides, so it holds
  over the integers and every row lies in the span of the pivot rows.
* ``modular`` -- rank modulo two random primes >= 2**31, accepted when they
  agree and recomputed with ``exact`` otherwise.
"""

from __future__ import annotations

import logging
import math
import random
from fractions import Fraction
from typing import Sequence

import gmpy2
import numpy as np

from .poly import Poly

log = logging.getLogger(__name__)

MEMBER = "member"

# p*p must fit in int64 for the echelon kernels
BIG_PRIME_RANGE = (2 ** 31, 3_030_000_000)
# r * q * q < 2**53 keeps float64 dot products exact
SMALL_PRIME_RANGE = (2 ** 19, 2 ** 20)


def random_prime(rng: random.Random, lo: int, hi: int) -> int:
    while True:
        n = int(gmpy2.next_prime(rng.randrange(lo, hi)))
        if n < hi:
            return n


class PrimeStream:
    """Deterministic sequence of distinct primes inside a range."""

    def __init__(self, lo: int, hi: int, start: int | None = None):
        self.lo, self.hi = lo, hi
        self._cur = gmpy2.mpz(start if start is not None else lo)

    def __iter__(self):
        return self

    def __next__(self) -> int:
        self._cur = gmpy2.next_prime(self._cur)
        if self._cur >= self.hi:
            raise StopIteration
        return int(self._cur)


class CoeffMatrix:
    """Integer coefficient matrix of a list of polynomials.

    Rows with rational coefficients are scaled by the lcm of their
    denominators (this does not change the rank).  Columns follow the
    monomial order of :mod:`poly`, greatest first.
    """

    def __init__(self, rows: Sequence, columns: Sequence[int] | None = None):
        polys = [getattr(r, "core", r) for r in rows]
        for p in polys:
            if not isinstance(p, Poly):
                raise TypeError("rows must be polynomials or semi-invariants")
        self.polys = polys
        if columns is None:
            keys = set()
            for p in polys:
                keys.update(k for k, _ in p.items())
            if polys:
                R = polys[0].ring
                columns = sorted(keys, key=R.sort_key, reverse=True)
            else:
                columns = []
        self.columns = list(columns)
        self.col_index = {k: n for n, k in enumerate(self.columns)}
        self.rows: list[dict[int, int]] = []
        for p in polys:
            den = 1
            for _, c in p.items():
                if type(c) is Fraction:
                    den = math.lcm(den, c.denominator)
            row = {}
            for k, c in p.items():
                if k not in self.col_index:
                    raise ValueError("row has a monomial outside the column set")
                row[self.col_index[k]] = int(c * den) if den != 1 else c
            self.rows.append(row)
        self._limbs = None

    @classmethod
    def from_integers(cls, data) -> "CoeffMatrix":
        m = object.__new__(cls)
        data = [list(map(int, r)) for r in data]
        ncols = len(data[0]) if data else 0
        m.polys = []
        m.columns = list(range(ncols))
        m.col_index = {k: k for k in m.columns}
        m.rows = [{j: v for j, v in enumerate(r) if v} for r in data]
        m._limbs = None
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.columns))

    def dense(self) -> list[list[int]]:
        n = len(self.columns)
        out = []
        for r in self.rows:
            row = [0] * n
            for j, v in r.items():
                row[j] = v
            out.append(row)
        return out

    def max_bits(self) -> int:
        return max((abs(v).bit_length() for r in self.rows for v in r.values()), default=0)

    def limbs(self, bits: int = 20):
        """Signed base-2^bits limb planes: M = sum_l L[l] * 2^(bits*l)."""
        if self._limbs is None or self._limbs[0] != bits:
            nl = max(1, -(-self.max_bits() // bits))
            n, m = self.shape
            L = np.zeros((nl, n, m), dtype=np.int64)
            mask = (1 << bits) - 1
            for i, r in enumerate(self.rows):
                for j, v in r.items():
                    s = -1 if v < 0 else 1
                    a = abs(v)
                    l = 0
                    while a:
                        L[l, i, j] = s * (a & mask)
                        a >>= bits
                        l += 1
            self._limbs = (bits, L)
        return self._limbs[1]

    def mod(self, p: int, rows=None) -> np.ndarray:
        """Residues in [0, p) as int64 (p < 2**32)."""
        L = self.limbs(20)
        if rows is not None:
            L = L[:, rows, :]
        out = np.zeros(L.shape[1:], dtype=np.int64)
        f = 1
        for l in range(L.shape[0]):
            out = (out + (L[l] % p) * f) % p
            f = (f << 20) % p
        return out


# mod-p elimination -----------------------------------------------------------

def _mulmod_matrix(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """(A @ B) mod p for residues below p < 2**32, without int64 overflow."""
    k = A.shape[1]
    if k == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    lo = A & 0xFFFF
    hi = A >> 16
    # each partial product < 2**48; chunk the inner dimension to stay below 2**63
    step = 1 << 14
    for s in range(0, k, step):
        Bs = B[s:s + step]
        h = (hi[:, s:s + step] @ Bs) % p
        l = (lo[:, s:s + step] @ Bs) % p
        out = (out + (h * 65536) % p + l) % p
    return out


class ModEchelon:
    """Incremental row echelon basis over GF(p), kept fully reduced.

    Rows are added in order; a row is kept iff it is independent of the
    rows kept before it, so the kept rows are the first maximal
    independent subset.
    """

    def __init__(self, ncols: int, p: int):
        if p >= BIG_PRIME_RANGE[1]:
            raise ValueError("prime too large for int64 kernels")
        self.p = p
        self.ncols = ncols
        self.basis = np.zeros((0, ncols), dtype=np.int64)
        self.pivots: list[int] = []
        self.kept: list[int] = []
        self._seen = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, rows: np.ndarray) -> np.ndarray:
        rows = np.asarray(rows, dtype=np.int64) % self.p
        if not self.pivots:
            return rows
        coeff = rows[:, self.pivots]
        return (rows - _mulmod_matrix(coeff, self.basis, self.p)) % self.p

    def add_rows(self, rows: np.ndarray) -> list[bool]:
        """Add a block of rows; returns which of them were independent."""
        p = self.p
        rows = self.reduce(rows)
        start = len(self.pivots)
        flags = []
        for n in range(rows.shape[0]):
            v = rows[n]
            new = self.pivots[start:]
            if new:
                c = v[new]
                if c.any():
                    v = (v - _mulmod_matrix(c[None, :], self.basis[start:], p)[0]) % p
            nz = np.flatnonzero(v)
            self._seen += 1
            if nz.size == 0:
                flags.append(False)
                continue
            c = int(nz[0])
            v = v * pow(int(v[c]), -1, p) % p
            if self.basis.shape[0]:
                col = self.basis[:, c].copy()
                if col.any():
                    self.basis = (self.basis - (col[:, None] * v[None, :]) % p) % p
            self.basis = np.vstack([self.basis, v[None, :]])
            self.pivots.append(c)
            self.kept.append(self._seen - 1)
            flags.append(True)
        return flags

    def contains(self, row: np.ndarray) -> bool:
        return not self.reduce(np.asarray(row)[None, :])[0].any()


def rank_mod(M: CoeffMatrix | np.ndarray, p: int) -> tuple[int, list[int], list[int]]:
    """(rank, kept row indices, pivot columns) of M over GF(p)."""
    A = M.mod(p) if isinstance(M, CoeffMatrix) else np.asarray(M, dtype=np.int64) % p
    E = ModEchelon(A.shape[1], p)
    E.add_rows(A)
    return E.rank, list(E.kept), list(E.pivots)


# exact engines ----------------------------------------------------------------

def bareiss_rank(M) -> int:
    """Fraction-free Gaussian elimination over the integers."""
    A = M.dense() if isinstance(M, CoeffMatrix) else [list(r) for r in M]
    A = [[gmpy2.mpz(v) for v in r] for r in A]
    n = len(A)
    m = len(A[0]) if n else 0
    rank = 0
    prev = gmpy2.mpz(1)
    for c in range(m):
        piv = next((i for i in range(rank, n) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        pr = A[rank]
        pv = pr[c]
        for i in range(rank + 1, n):
            row = A[i]
            a = row[c]
            if a:
                for j in range(c + 1, m):
                    row[j] = (pv * row[j] - a * pr[j]) // prev
            else:
                for j in range(c + 1, m):
                    row[j] = (pv * row[j]) // prev
            row[c] = 0
        prev = pv
        rank += 1
        if rank == n:
            break
    return rank


def _norm_bits(values) -> int:
    """Upper bound on log2 of the Euclidean norm of an integer vector."""
    s = sum(int(v) * int(v) for v in values)
    return (math.isqrt(s) + 1).bit_length()


def _solve_mod(A: np.ndarray, B: np.ndarray, q: int):
    """(det A mod q, det(A) * B @ A^-1 mod q) or None if A is singular mod q."""
    r = A.shape[0]
    # work on the transposed system A^T X^T = B^T with Gauss-Jordan
    aug = np.concatenate([A.T % q, B.T % q], axis=1).astype(np.int64)
    det = 1
    for c in range(r):
        nz = np.flatnonzero(aug[c:, c])
        if nz.size == 0:
            return None
        k = c + int(nz[0])
        if k != c:
            aug[[c, k]] = aug[[k, c]]
            det = -det
        pv = int(aug[c, c])
        det = det * pv % q
        aug[c] = aug[c] * pow(pv, -1, q) % q
        col = aug[:, c].copy()
        col[c] = 0
        aug = (aug - (col[:, None] * aug[c][None, :]) % q) % q
    X = aug[:, r:].T  # B @ A^-1
    return det % q, (X * det) % q


def certified_rank(M: CoeffMatrix, seed: int = 0, tries: int = 4, upper_bound: int | None = None) -> int:
    """Exact rank over Q via mod-p echelon plus a multi-modular certificate.

    ``upper_bound`` is a known bound on the rank (e.g. the dimension of the
    ambient space); reaching it mod p makes the certificate unnecessary.
    """
    n, m = M.shape
    if n == 0 or m == 0 or not any(M.rows):
        return 0
    rng = random.Random(seed)
    for attempt in range(tries):
        p = random_prime(rng, *BIG_PRIME_RANGE)
        r, I, J = rank_mod(M, p)
        if r == n or r == m or r == upper_bound:
            return r  # r independent rows mod p are independent over Q
        if _certify(M, I, J, rng):
            return r
        log.info("certificate failed for prime %d (attempt %d); retrying", p, attempt)
    log.warning("falling back to Bareiss elimination on a %dx%d matrix", n, m)
    return bareiss_rank(M)


def rational_reconstruct(a: int, m: int):
    """Fraction n/d with n/d = a mod m and |n|, d <= sqrt(m/2), or None."""
    a %= m
    bound = math.isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    if math.gcd(r1, s1) != 1:
        return None
    return Fraction(r1, s1)


def _certify(M: CoeffMatrix, I: list[int], J: list[int], rng: random.Random) -> bool:
    """Prove every row outside I is a rational combination of the rows in I.

    The coefficients X (with X @ M[I, J] = M[K, J]) are recovered by CRT and
    rational reconstruction from solves on the pivot columns only; the full
    identity den * M[K] = N @ M[I] is then checked modulo enough primes to
    exceed twice the bound implied by the reconstructed N and den.
    """
    n, m = M.shape
    Iset = set(I)
    K = [k for k in range(n) if k not in Iset]
    r = len(I)
    if not K:
        return True
    if r == 0:
        return not any(M.rows[k] for k in K)
    if r * SMALL_PRIME_RANGE[1] ** 2 >= 2 ** 53:
        raise ValueError("matrix too tall for the float64 certificate kernel")
    rows = M.rows
    a_bits = [_norm_bits(rows[i].get(j, 0) for j in J) for i in I]
    kj_bits = max(_norm_bits(rows[k].get(j, 0) for j in J) for k in K)
    det_bits = sum(a_bits)
    # Cramer: numerators and the common denominator det(A) are bounded by this
    hadamard_bits = max(det_bits - min(a_bits) + kj_bits, det_bits) + 1
    mbits = M.max_bits()
    sub = CoeffMatrix.from_integers([[rows[i].get(j, 0) for j in J] for i in I + K])
    start = rng.randrange(*SMALL_PRIME_RANGE)
    primes = PrimeStream(SMALL_PRIME_RANGE[0], SMALL_PRIME_RANGE[1], start=start)
    used: list[int] = []
    residues = None
    modulus = 1
    next_try = 1
    X = None
    while True:
        try:
            q = next(primes)
        except StopIteration:
            primes = PrimeStream(SMALL_PRIME_RANGE[0], start)
            continue
        Sq = sub.mod(q)
        sol = _solve_mod(Sq[:r], Sq[r:], q)
        if sol is None:
            continue
        det, Y = sol
        Xq = Y * pow(int(det), -1, q) % q
        if residues is None:
            residues = [int(v) for v in Xq.ravel()]
        else:
            inv = pow(modulus, -1, q)
            flat = Xq.ravel()
            residues = [a + modulus * ((int(b) - a) * inv % q) for a, b in zip(residues, flat)]
        modulus *= q
        used.append(q)
        if len(used) < next_try and modulus.bit_length() <= 2 * hadamard_bits + 2:
            continue
        next_try = len(used) * 2
        fr = [rational_reconstruct(v, modulus) for v in residues]
        if any(f is None for f in fr):
            if modulus.bit_length() > 2 * hadamard_bits + 2:
                return False
            continue
        cand = np.array(fr, dtype=object).reshape(len(K), r)
        if X is not None and (cand == X).all() or modulus.bit_length() > 2 * hadamard_bits + 2:
            if _verify_combination(M, I, K, cand, mbits, rng):
                return True
            if modulus.bit_length() > 2 * hadamard_bits + 2:
                return False
        X = cand


def _verify_combination(M: CoeffMatrix, I, K, X, mbits: int, rng: random.Random) -> bool:
    """Check M[K] == X @ M[I] exactly, via enough small primes."""
    den = 1
    for f in X.ravel():
        den = math.lcm(den, f.denominator)
    N = [[int(f * den) for f in row] for row in X]
    nbits = max((abs(v).bit_length() for row in N for v in row), default=0)
    r = len(I)
    bound_bits = max(den.bit_length() + mbits, nbits + mbits + r.bit_length()) + 2
    covered = 0
    primes = PrimeStream(SMALL_PRIME_RANGE[0], SMALL_PRIME_RANGE[1], start=rng.randrange(*SMALL_PRIME_RANGE))
    while covered <= bound_bits:
        try:
            q = next(primes)
        except StopIteration:
            primes = PrimeStream(*SMALL_PRIME_RANGE)
            continue
        Mq = M.mod(q)
        Nq = np.array([[v % q for v in row] for row in N], dtype=np.float64)
        lhs = (Mq[K] * (den % q)) % q
        rhs = np.fmod(Nq @ Mq[I].astype(np.float64), q).astype(np.int64)
        if not np.array_equal(lhs, rhs):
            return False
        covered += q.bit_length() - 1
    return True


def rank(M, method: str = "exact", seed: int = 0) -> int:
    """Rank over Q of a CoeffMatrix, a list of polynomials, or integer rows."""
    if not isinstance(M, CoeffMatrix):
        M = _as_matrix(M)
    if method == "bareiss":
        return bareiss_rank(M)
    if method == "exact":
        return certified_rank(M, seed=seed)
    if method == "modular":
        return modular_rank(M, seed=seed)
    raise ValueError(f"unknown rank method {method!r}")


def modular_rank(M: CoeffMatrix, seed: int = 0) -> int:
    rng = random.Random(seed)
    p1 = random_prime(rng, *BIG_PRIME_RANGE)
    p2 = random_prime(rng, *BIG_PRIME_RANGE)
    while p2 == p1:
        p2 = random_prime(rng, *BIG_PRIME_RANGE)
    r1 = rank_mod(M, p1)[0]
    r2 = rank_mod(M, p2)[0]
    log.info("modular rank with primes %d, %d: %d, %d", p1, p2, r1, r2)
    if r1 == r2:
        return r1
    log.info("modular ranks disagree; recomputing exactly")
    return certified_rank(M, seed=seed)


def _as_matrix(rows) -> CoeffMatrix:
    rows = list(rows)
    if rows and not isinstance(getattr(rows[0], "core", rows[0]), Poly):
        return CoeffMatrix.from_integers(rows)
    return CoeffMatrix(rows)


def _cell_of(x):
    return (getattr(x, "degree", None), getattr(x, "order", None))


def syzygy_dim(products: Sequence, method: str = "exact", seed: int = 0) -> int:
    """len(products) - rank of their coefficient matrix."""
    products = list(products)
    if not products:
        return 0
    cells = {_cell_of(p) for p in products}
    if len(cells) > 1:
        raise ValueError(f"products of mixed (degree, order): {sorted(cells, key=str)}")
    return len(products) - rank(CoeffMatrix(products), method=method, seed=seed)


def reduce_against(basis: Sequence, candidate, method: str = "exact", seed: int = 0):
    """``MEMBER`` if candidate lies in the rational span of basis, else candidate."""
    cells = {_cell_of(b) for b in basis}
    if cells and cells != {_cell_of(candidate)}:
        raise ValueError("basis and candidate have different (degree, order)")
    if getattr(candidate, "core", candidate).is_zero:
        return MEMBER
    if not basis:
        return candidate
    M = CoeffMatrix(list(basis) + [candidate])
    r_all = rank(M, method=method, seed=seed)
    r_basis = rank(CoeffMatrix(list(basis), columns=M.columns), method=method, seed=seed)
    return MEMBER if r_all == r_basis else candidate


# evaluation ranks ------------------------------------------------------------

class PointSet:
    """Random evaluation points mod p for the core variables t, x2..xd.

    Each variable draws from its own stream, so growing the set with
    :meth:`ensure` keeps earlier points (and cached values) unchanged.
    """

    def __init__(self, ctx, npoints: int, p: int | None = None, seed: int = 0):
        rng = random.Random(seed)
        self.p = p if p is not None else random_prime(rng, *BIG_PRIME_RANGE)
        self.ctx = ctx
        self.seed = seed
        self.npoints = 0
        self.values = {v: np.zeros(0, dtype=np.int64) for v in ["t"] + [f"x{i}" for i in range(2, ctx.d + 1)]}
        self._cache: dict = {}
        self.ensure(npoints)

    def _draw(self, var: int, lo: int, n: int) -> np.ndarray:
        gen = np.random.default_rng([self.seed, self.p, var])
        return gen.integers(lo, self.p, size=n, dtype=np.int64)

    def ensure(self, npoints: int) -> None:
        """Grow to at least ``npoints`` points."""
        if npoints <= self.npoints:
            return
        for k, v in enumerate(self.values):
            self.values[v] = self._draw(k, 1 if v == "t" else 0, npoints)
        old = self.npoints
        self.npoints = npoints
        for key, (semi, vals) in list(self._cache.items()):
            extra = self._eval(semi, slice(old, npoints))
            self._cache[key] = (semi, np.concatenate([vals, extra]))

    def _eval(self, semi, sl=slice(None)) -> np.ndarray:
        from .poly import evaluate_mod

        core = getattr(semi, "core", semi)
        used = {v: a[sl] for v, a in self.values.items() if core.uses(v)} or {"t": self.values["t"][sl]}
        return evaluate_mod(core, used, self.p)

    def evaluate(self, semi) -> np.ndarray:
        """Values of a semi-invariant's core; cached per object."""
        key = id(semi)
        hit = self._cache.get(key)
        if hit is not None and hit[0] is semi:
            return hit[1]
        vals = self._eval(semi)
        self._cache[key] = (semi, vals)
        return vals

    def product_values(self, payloads: Sequence, vec) -> np.ndarray:
        p = self.p
        out = np.ones(self.npoints, dtype=np.int64)
        for k, e in vec:
            v = self.evaluate(payloads[k])
            for _ in range(e):
                out = out * v % p
        return out
