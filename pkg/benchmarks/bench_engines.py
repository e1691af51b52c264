#!/usr/bin/env python3
"""Compare the compiled embedding kernel against the pure-Python fallback.

Runs the same deterministic workloads through both kernels, asserts the
results are identical, and reports node throughput.

Usage: python benchmarks/bench_engines.py [--quick]
"""

import argparse
import random
import time

from bergeturan import FormulaParams, extremal_construction, parse_pattern
from bergeturan import _engine_py
from bergeturan.berge import _host_prep, _pattern_plan

try:
    from bergeturan import _engine_cy
except ImportError:
    _engine_cy = None


def workload_freeness(budget):
    """Absence proof on the core construction (the dominant real workload)."""
    h, _ = extremal_construction(FormulaParams(n=12, r=3, ell=5, k=2))
    masks, host_order = _host_prep(h)
    edges0, order = _pattern_plan(parse_pattern("2P5"))
    return [(h.n, masks, edges0, order, host_order, budget, False, -1, -1)]


def workload_fuzz(count):
    """Many small mixed queries, the shape seen inside the exhaustive search."""
    rng = random.Random(4242)
    pats = [parse_pattern(e) for e in ["P2", "P3", "P4", "C3", "C4", "S3", "M2", "2P2"]]
    calls = []
    for _ in range(count):
        n = rng.randint(4, 9)
        r = min(rng.choice([2, 3, 3, 4]), n)
        edges = sorted({tuple(sorted(rng.sample(range(1, n + 1), r))) for _ in range(rng.randint(2, 10))})
        masks = [sum(1 << (v - 1) for v in e) for e in edges]
        deg = [0] * n
        for em in masks:
            t = em
            while t:
                v = (t & -t).bit_length() - 1
                deg[v] += 1
                t &= t - 1
        host_order = sorted((v for v in range(n) if deg[v]), key=lambda v: (deg[v], v))
        pat = rng.choice(pats)
        edges0, order = _pattern_plan(pat)
        calls.append((n, masks, edges0, order, host_order, 0, pat.kind_tag == "cycle", -1, -1))
    return calls


def run(engine, calls):
    t0 = time.perf_counter()
    results = []
    nodes = 0
    for call in calls:
        res = engine.solve(*call)
        results.append(res)
        nodes += res[3]
    return results, nodes, time.perf_counter() - t0


def bench(name, calls):
    pure_res, nodes, pure_t = run(_engine_py, calls)
    print(f"{name}: pure-python  {pure_t:8.3f} s   ({nodes / max(pure_t, 1e-9) / 1e6:6.2f} M nodes/s)")
    if _engine_cy is None:
        print(f"{name}: compiled kernel not built; skipping comparison")
        return
    cy_res, nodes_cy, cy_t = run(_engine_cy, calls)
    assert pure_res == cy_res, "kernels disagree"
    assert nodes == nodes_cy
    print(f"{name}: compiled     {cy_t:8.3f} s   ({nodes / max(cy_t, 1e-9) / 1e6:6.2f} M nodes/s)"
          f"   speedup x{pure_t / max(cy_t, 1e-9):.1f}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args()
    freeness_budget = 300_000 if args.quick else 3_000_000
    fuzz_count = 500 if args.quick else 5_000
    bench(f"freeness proof (budget {freeness_budget})", workload_freeness(freeness_budget))
    bench(f"mixed fuzz ({fuzz_count} queries)", workload_fuzz(fuzz_count))


if __name__ == "__main__":
    main()
