"""Acceptance suite: one test per criterion, each printing a PASS line.

Expected values tagged as derived below were computed with the independent
oracles in ``oracles.py`` (naive enumerator, full subset enumeration,
quantifier-literal checks) before being frozen here.
"""

import random
import time

from bergeturan import (
    FormulaParams,
    SearchOptions,
    Status,
    berge_common_neighbours,
    block_construction,
    exact_turan,
    extremal_construction,
    berge_kpl_turan,
    find_berge_embedding,
    good_order,
    parse_pattern,
    verify_certificate,
    verify_lemma,
)
from bergeturan.errors import ParamsOutOfRange
from bergeturan.formulas import LEMMAS
from oracles import brute_bcn, is_good_pair, naive_contains, naive_turan, random_hypergraph


def report(criterion, ok, detail=""):
    line = f"[acceptance] {criterion}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, criterion


def test_criterion_1_construction_formula_identity():
    started = time.perf_counter()
    cells = 0
    for r in (3, 4, 5):
        for k in (1, 2, 3):
            for ell in range(r, 2 * r + 5):
                lp = (ell + 1) // 2
                for n in range(k * lp + r, k * lp + r + 13):
                    try:
                        p = FormulaParams(n=n, r=r, ell=ell, k=k)
                        h, _ = extremal_construction(p)
                    except ParamsOutOfRange:
                        continue
                    cells += 1
                    assert h.m == berge_kpl_turan(p).value, (n, r, ell, k)
    elapsed = time.perf_counter() - started
    report("construction-formula identity",
           cells > 500 and elapsed < 5.0,
           f"{cells} cells, {elapsed:.2f}s")


def test_criterion_2_construction_freeness():
    results = []
    for ell, forbidden in ((5, "2P5"), (6, "2P6")):
        h, _ = extremal_construction(FormulaParams(n=13, r=3, ell=ell, k=2))
        started = time.perf_counter()
        res = find_berge_embedding(h, parse_pattern(forbidden), budget=0)
        elapsed = time.perf_counter() - started
        results.append((forbidden, res.status, elapsed))
        assert res.status is Status.NOT_FOUND, forbidden
        assert elapsed < 600.0, forbidden
        t0 = time.perf_counter()
        control = find_berge_embedding(h, parse_pattern("P5"))
        control_t = time.perf_counter() - t0
        assert control.status is Status.FOUND
        assert verify_certificate(h, control.certificate)
        assert control_t < 1.0
    detail = "; ".join(f"{f}: free in {t:.1f}s" for f, _, t in results)
    report("construction freeness at n=13", True, detail)


def test_criterion_3_single_path_sharpness():
    started = time.perf_counter()
    small = exact_turan(4, 3, parse_pattern("P4"))
    assert small.max_edges == 4 and small.exact
    block = block_construction(8, 4, 3)
    assert find_berge_embedding(block, parse_pattern("P4")).status is Status.NOT_FOUND
    res = exact_turan(8, 3, parse_pattern("P4"), SearchOptions(initial_witness=block))
    elapsed = time.perf_counter() - started
    assert res.max_edges >= 8 == block.m
    if res.exact:
        assert res.max_edges == 8
    report("single-path sharpness", elapsed < 60.0,
           f"ex(4)={small.max_edges}, ex(8)={res.max_edges} ({'exact' if res.exact else 'bound'}), {elapsed:.1f}s")


def test_criterion_4_subset_enumeration_equivalence():
    started = time.perf_counter()
    patterns = {expr: parse_pattern(expr) for expr in ("P2", "P3", "M2", "2P2")}
    checked = 0
    for n in (3, 4, 5, 6):
        for expr, pat in patterns.items():
            got = exact_turan(n, 3, pat).max_edges
            want = naive_turan(n, 3, pat)
            assert got == want, (n, expr, got, want)
            checked += 1
    assert exact_turan(4, 3, patterns["P2"]).max_edges == 1
    assert exact_turan(6, 3, patterns["P2"]).max_edges == 2
    assert exact_turan(4, 3, patterns["P3"]).max_edges == 2
    elapsed = time.perf_counter() - started
    report("subset-enumeration equivalence",
           checked == 16 and elapsed < 300.0,
           f"{checked} instances, {elapsed:.1f}s")


def test_criterion_5_inequality_suite():
    started = time.perf_counter()
    details = []
    for lemma_id in sorted(LEMMAS):
        rep = verify_lemma(lemma_id)
        assert rep.violations == (), lemma_id
        assert rep.margin_min > 0, lemma_id
        details.append(f"{lemma_id}:{rep.margin_min}")
    elapsed = time.perf_counter() - started
    report("inequality suite", elapsed < 10.0,
           f"min slacks {', '.join(details)}, {elapsed:.2f}s")


def test_criterion_6_good_order_property():
    rng = random.Random(60606)
    hosts = 0
    while hosts < 500:
        r = rng.choice([3, 4, 5])
        n = rng.randint(r + 1, 10)
        h = random_hypergraph(rng, n, r, rng.randint(2, 8))
        if h.m < 2:
            continue
        hosts += 1
        covered = h.covered_vertices()
        for first in covered:
            order = good_order(h, first)
            assert order.ordering[0] == first
            assert sorted(order.ordering) == list(covered)
            for a, b in zip(order.ordering, order.ordering[1:]):
                assert is_good_pair(h, a, b), (h.edges, order.ordering)
    report("good-order property", hosts == 500, f"{hosts} hosts, every start vertex")


def test_criterion_7_certificate_soundness_fuzz():
    rng = random.Random(70707)
    small = ["P1", "P2", "P3", "C3", "S2", "M2", "M3", "2P2", "P2+M1", "P4", "C4", "S3"]
    large = ["P5", "2P3", "C5", "S4", "M4", "P3+P2"]
    patterns = {e: parse_pattern(e) for e in small + large}
    checked_naive = 0
    found = 0
    for _ in range(10_000):
        n = rng.randint(3, 8)
        r = min(rng.choice([2, 3, 3, 3, 4]), n)
        h = random_hypergraph(rng, n, r, rng.randint(1, 8))
        expr = rng.choice(small if rng.random() < 0.75 else large)
        pat = patterns[expr]
        res = find_berge_embedding(h, pat)
        assert res.status in (Status.FOUND, Status.NOT_FOUND)
        if res.certificate is not None:
            found += 1
            assert verify_certificate(h, res.certificate), (h.edges, expr)
        if pat.num_edges <= 4:
            checked_naive += 1
            assert (res.status is Status.FOUND) == naive_contains(h, pat), (h.edges, expr)
    report("certificate soundness fuzz", True,
           f"10000 instances, {found} certificates, {checked_naive} naive cross-checks")


def test_criterion_8_common_neighbour_agreement():
    rng = random.Random(80808)
    checked = 0
    for _ in range(400):
        n = rng.randint(4, 8)
        h = random_hypergraph(rng, n, rng.choice([2, 3, 3, 4]), rng.randint(2, 8))
        base = rng.sample(range(1, n + 1), rng.randint(2, min(4, n)))
        assert berge_common_neighbours(h, base) == brute_bcn(h, base)
        checked += 1
    report("common-neighbour agreement", checked == 400, f"{checked} instances")
