"""One test per acceptance criterion; each prints a PASS/FAIL line.

Criteria that cannot hold as stated are still checked literally and are
allowed to fail; the reasons are recorded in the decisions ledger.
"""
from __future__ import annotations

import random
import time
from math import comb

import conftest
from covforge.counting import cs_dim, enumerate_products, partition_count, sigma_count
from covforge.discover import (
    DistributionTable,
    delta,
    expected_table,
    paperdata,
    run_pipeline,
)
from covforge.linalg import syzygy_dim
from covforge.poly import parse
from covforge.sl2 import D_apply, SemiInvariant, kappa_inverse, order, to_z
from covforge.transvect import semitransvectant, semitransvectant_direct


def record(n, ok, detail):
    conftest.ACCEPTANCE[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_1_cayley_sylvester_ledger():
    t0 = time.perf_counter()
    got = {c: cs_dim(7, *c) for c in paperdata.CS_LEDGER}
    dt = time.perf_counter() - t0
    bad = {c: (got[c], v) for c, v in paperdata.CS_LEDGER.items() if got[c] != v}
    record(1, not bad and dt < 1.0, f"{len(got)} cells, mismatches {bad}, {dt:.3f}s (limit 1s)")


def test_criterion_2_sigma_and_syzygies(replayed):
    reg, _ = replayed
    bad, low, total = {}, 0.0, 0.0
    for (i, j), (sigma, S) in sorted(paperdata.SIGMA_LEDGER.items()):
        t0 = time.perf_counter()
        below = reg.truncated(i - 1)
        got = (sigma_count(below, i, j), syzygy_dim(enumerate_products(below, i, j)))
        dt = time.perf_counter() - t0
        total += dt
        if i <= 16:
            low += dt
        if got != (sigma, S):
            bad[(i, j)] = (got, (sigma, S))
    ok = not bad and low < 120 and total < 1800
    record(2, ok, f"{len(paperdata.SIGMA_LEDGER)} cells, mismatches {bad}, "
                  f"<=16 subset {low:.1f}s (limit 120s), all {total:.1f}s (limit 1800s)")


def test_criterion_3_delta(replayed):
    reg, _ = replayed
    got = {(i, j): delta(7, reg.truncated(i - 1), i, j) for (i, j) in paperdata.DELTA_LEDGER}
    bad = {c: (got[c], v) for c, v in paperdata.DELTA_LEDGER.items() if got[c] != v}
    record(3, not bad, f"{len(got)} cells, mismatches {bad}")


def test_criterion_4_explicit_polynomials(ctx7):
    R = ctx7.R
    t = SemiInvariant.base(ctx7)
    expect = {
        2: "x2*t - x1^2",
        4: "x4*t - 4*x1*x3 + 3*x2^2",
        6: "x6*t - 6*x1*x5 + 15*x2*x4 - 10*x3^2",
    }
    bad = [r for r, text in expect.items()
           if semitransvectant_direct(ctx7, t, t, r).poly != parse(text, R)
           or semitransvectant(ctx7, t, t, r).poly != parse(text, R)]
    form = R.zero()
    for k in range(8):
        xk = R.var("t") if k == 0 else R.var(f"x{k}")
        form = form + comb(7, k) * xk * R.var("Y1", 7 - k) * R.var("Y2", k)
    kappa_ok = kappa_inverse(ctx7, R.var("t")) == form
    record(4, not bad and kappa_ok, f"[t,t]^r wrong at r={bad}, kappa^-1(t) binomial form {kappa_ok}")


def test_criterion_5_replay_audit(replayed):
    reg, report = replayed
    section3 = [e for e in report if e["degree"] <= 13]
    # label typos are on the allowed list; anything else needing repair is not
    off_list = [e["name"] for e in section3
                if any(not n.startswith("printed label") for n in e["notes"])]
    cards = {i: sum(1 for r in reg if r.degree == i) for i in range(2, 14)}
    cards_ok = cards == paperdata.SECTION3_CARDINALITIES
    sigma_13 = sum(1 for r in reg if r.degree <= 13)
    ok = not off_list and cards_ok and sigma_13 == 124
    record(5, ok, f"{len(section3)} trees replayed, outside the typo list {off_list}; "
                  f"cardinalities match {cards_ok}; sum through 13 = {sigma_13} (claimed 124)")


def test_criterion_6_small_degrees():
    got, times = {}, {}
    for d in (1, 2, 3, 4, 5):
        t0 = time.perf_counter()
        _, table = run_pipeline(d, paperdata.DEGREE_BOUNDS[d])
        times[d] = time.perf_counter() - t0
        got[d] = table.total()
    want = {d: paperdata.SMALL_TOTALS[d] for d in got}
    fast = all(times[d] < 60 for d in (1, 2, 3, 4)) and times[5] < 900
    detail = ", ".join(f"c{d}={got[d]} (claimed {want[d]}, {times[d]:.1f}s)" for d in got)
    record(6, got == want and fast, detail)


def test_criterion_7_discovery_through_16():
    t0 = time.perf_counter()
    reg, table = run_pipeline(7, 16)
    dt = time.perf_counter() - t0
    short = [(r.degree, r.order, len(r.found), r.delta) for r in table.reports if len(r.found) != r.delta]
    diff = table.diff(expected_table().truncated(16))
    ok = not short and not diff and reg.complete_through() == 16
    record(7, ok, f"{len(reg)} generators, cells short of delta {short}, table diff {diff}, "
                  f"{dt:.1f}s; degrees 17-30 checked by counting in criteria 1-3")


def test_criterion_8_property_suites(replayed, ctx7):
    reg, _ = replayed
    rng = random.Random(8)
    small = [r for r in reg.records if r.semi is not None and r.degree <= 4]
    failures = []
    # direct path against kappa o transvectant o kappa^-1, with the order rule
    pairs = 0
    while pairs < 60:
        f, g = rng.choice(small), rng.choice(small)
        r = rng.randint(0, min(f.order, g.order))
        a = semitransvectant_direct(ctx7, f.semi, g.semi, r)
        b = semitransvectant(ctx7, f.semi, g.semi, r)
        if (a is None) != (b is None) or (a is not None and a.core != b.core):
            failures.append(("paths", f.name, g.name, r))
        if a is not None and not a.order == f.order + g.order - 2 * r == order(ctx7, a.poly):
            failures.append(("order", f.name, g.name, r))
        pairs += 1
    # invariant factors out of [t, f g]^i
    t = SemiInvariant.base(ctx7)
    inv = reg["ch1"].semi
    for gname in ("dv1", "tr3", "pt4"):
        g = reg[gname].semi
        for i in range(min(7, g.order) + 1):
            lhs = semitransvectant_direct(ctx7, t, inv * g, i)
            rhs = semitransvectant_direct(ctx7, t, g, i)
            same = lhs is None if rhs is None else lhs.core == SemiInvariant(ctx7, inv.core * rhs.core).core
            if not same:
                failures.append(("factor", gname, i))
    # Cayley-Sylvester against the partition-difference oracle
    for d in range(1, 6):
        for i in range(1, 9):
            for j in range(d * i + 1):
                w2 = d * i - j
                want = 0 if w2 % 2 else partition_count(d, i, w2 // 2) - partition_count(d, i, w2 // 2 - 1)
                if cs_dim(d, i, j) != want:
                    failures.append(("cs", d, i, j))
    # z-chart operator is the conjugate of D
    for k in range(2, 8):
        if to_z(ctx7, D_apply(ctx7, ctx7.z_in_x[k])) != ctx7.chart_D[ctx7.R.index[f"z{k}"]]:
            failures.append(("D", k))
    record(8, not failures, f"{pairs} random pairs, failures {failures[:5]}")


def test_criterion_9_distribution(replayed):
    reg, _ = replayed
    table = DistributionTable.from_registry(reg)
    totals = {i: table.degree_total(i) for i in range(14, 31)}
    ok = table == expected_table() and table.total() == paperdata.C7 and totals == paperdata.DEGREE_TOTALS
    record(9, ok, f"replayed registry: {table.total()} generators (claimed {paperdata.C7}), "
                  f"degree totals 14-30 match {totals == paperdata.DEGREE_TOTALS}, "
                  f"diff from expected {table.diff(expected_table())}")
