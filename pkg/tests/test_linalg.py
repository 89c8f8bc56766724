from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covforge import linalg
from covforge.linalg import (
    MEMBER,
    CoeffMatrix,
    ModEchelon,
    PointSet,
    bareiss_rank,
    certified_rank,
    rank,
    rank_mod,
    rational_reconstruct,
    reduce_against,
    syzygy_dim,
)


def _low_rank(rng, n, m, r, bits):
    A = [[rng.randint(-2 ** bits, 2 ** bits) for _ in range(r)] for _ in range(n)]
    B = [[rng.randint(-2 ** bits, 2 ** bits) for _ in range(m)] for _ in range(r)]
    return [[sum(A[i][k] * B[k][j] for k in range(r)) for j in range(m)] for i in range(n)]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9), st.integers(1, 9), st.integers(0, 9), st.integers(1, 70), st.integers(0, 10 ** 6))
def test_certified_rank_matches_bareiss(n, m, r, bits, seed):
    rng = random.Random(seed)
    rows = _low_rank(rng, n, m, min(r, n, m), bits)
    M = CoeffMatrix.from_integers(rows)
    assert certified_rank(M, seed=seed) == bareiss_rank(M)


def test_rank_methods_agree():
    rng = random.Random(5)
    rows = _low_rank(rng, 30, 40, 17, 60)
    M = CoeffMatrix.from_integers(rows)
    assert rank(M, "exact") == rank(M, "bareiss") == rank(M, "modular") == 17


def test_unlucky_prime_is_caught(monkeypatch):
    # det = p, so the first prime sees rank 1; the certificate must fail and retry
    p = 2_147_483_659
    rows = [[1, 0], [0, p]]
    primes = iter([p, 2_147_483_693, 2_147_483_713])
    monkeypatch.setattr(linalg, "random_prime", lambda rng, lo, hi: next(primes))
    assert rank_mod(CoeffMatrix.from_integers(rows), p)[0] == 1
    assert certified_rank(CoeffMatrix.from_integers(rows + [[2, 3 * p]])) == 2


def test_dependent_rows_with_big_entries():
    big = 2 ** 200 + 7
    rows = [[big, 3, 5], [2 * big, 6, 10], [1, 1, 1]]
    assert certified_rank(CoeffMatrix.from_integers(rows)) == 2


def test_rational_reconstruct():
    m = 1_000_000_007 * 998_244_353
    for f in [Fraction(3, 7), Fraction(-22, 9), Fraction(0), Fraction(12345, 678)]:
        a = f.numerator * pow(f.denominator, -1, m) % m
        assert rational_reconstruct(a, m) == f


def test_mod_echelon_incremental():
    p = 2_147_483_659
    E = ModEchelon(4, p)
    flags = E.add_rows(np.array([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 0, 1]]))
    assert flags == [True, False, True] and E.rank == 2
    assert E.contains(np.array([1, 3, 3, 5]))
    assert not E.contains(np.array([0, 0, 1, 0]))


def test_syzygy_and_membership(reg13):
    from covforge.counting import enumerate_products

    prods = enumerate_products(reg13, 14, 2)
    assert syzygy_dim(prods) == 6
    _, kept, _ = rank_mod(CoeffMatrix(prods), 2_147_483_659)
    dropped = [k for k in range(len(prods)) if k not in kept]
    basis = [prods[k] for k in kept]
    assert len(dropped) == 6
    assert reduce_against(basis, prods[dropped[0]]) == MEMBER
    assert reduce_against(enumerate_products(reg13, 6, 2), reg13["sh4"].semi) is reg13["sh4"].semi


def test_reduce_against_rejects_mixed_cells(reg13):
    with pytest.raises(ValueError):
        reduce_against([reg13["dv1"].semi], reg13["dv2"].semi)


def test_point_set_growth_is_stable(ctx7):
    from covforge.sl2 import SemiInvariant

    t = SemiInvariant.base(ctx7)
    a = PointSet(ctx7, 5, seed=11)
    first = a.evaluate(t * t).copy()
    a.ensure(12)
    b = PointSet(ctx7, 12, seed=11)
    assert np.array_equal(a.evaluate(t * t)[:5], first)
    assert np.array_equal(a.evaluate(t * t), b.evaluate(t * t))
