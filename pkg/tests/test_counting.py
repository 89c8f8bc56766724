from __future__ import annotations

import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covforge.counting import (
    count_monomials,
    cs_dim,
    enumerate_products,
    exponent_vectors,
    partition_count,
    sigma_count,
)
from covforge.discover import paperdata


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_cs_dim_matches_partition_oracle(d):
    for i in range(1, 9):
        for j in range(0, d * i + 3):
            w2 = d * i - j
            if w2 < 0 or w2 % 2:
                expect = 0
            else:
                w = w2 // 2
                expect = partition_count(d, i, w) - partition_count(d, i, w - 1)
            assert cs_dim(d, i, j) == expect, (d, i, j)


def test_cs_ledger_exact_and_fast():
    t0 = time.perf_counter()
    got = {c: cs_dim(7, *c) for c in paperdata.CS_LEDGER}
    assert time.perf_counter() - t0 < 1.0
    assert got == paperdata.CS_LEDGER


def test_cs_domain():
    with pytest.raises(ValueError):
        cs_dim(7, 0, 1)
    with pytest.raises(ValueError):
        cs_dim(7, 2, -1)


def test_cs_small_facts():
    assert cs_dim(7, 2, 15) == 0
    assert cs_dim(7, 1, 7) == 1
    assert cs_dim(2, 2, 0) == 1
    assert cs_dim(4, 3, 0) == 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 4), st.integers(0, 6)), min_size=1, max_size=6),
       st.integers(1, 9), st.integers(0, 14))
def test_vector_enumeration_matches_count(cells, i, j):
    vecs = list(exponent_vectors(cells, i, j, min_factors=1))
    assert len(vecs) == count_monomials(cells, i, j)
    assert len(set(vecs)) == len(vecs)
    for v in vecs:
        assert sum(cells[k][0] * e for k, e in v) == i
        assert sum(cells[k][1] * e for k, e in v) == j


def test_sigma_ledger_low_degrees(replayed):
    reg, _ = replayed
    for (i, j), (sigma, _) in paperdata.SIGMA_LEDGER.items():
        assert sigma_count(reg.truncated(i - 1), i, j) == sigma, (i, j)


def test_sigma_requires_complete_registry(reg13):
    from covforge.discover import RegistryGap

    with pytest.raises(RegistryGap):
        sigma_count(reg13, 16, 2)


def test_products_have_the_right_cell(reg13):
    prods = enumerate_products(reg13, 6, 4)
    assert len(prods) == sigma_count(reg13, 6, 4)
    assert all((p.degree, p.order) == (6, 4) for p in prods)
