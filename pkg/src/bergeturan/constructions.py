"""Extremal constructions with exact edge-class accounting.

The main construction splits the vertices into a core A of size k*ell'-1
(ell' = floor((ell+1)/2)) and the remaining outer set B, and takes every
r-set inside A (class 1), every r-set meeting B in exactly one vertex
(class 2), and, when ell is even, every r-set meeting B in exactly the two
fixed special vertices u, v (class 3).  Its edge count is

    C(k*ell'-1, r-1)*(n-k*ell'+1) + C(k*ell'-1, r) + [ell even]*C(k*ell'-1, r-2)

and it contains no k vertex-disjoint Berge paths of length ell.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .core import FormulaParams, Hypergraph
from .errors import BlockTooSmall, DoesNotDivide, ParamsOutOfRange


@dataclass(frozen=True)
class ConstructionLayout:
    """Vertex split and per-class edge counts of the core construction."""

    core_A: tuple[int, ...]
    outer_B: tuple[int, ...]
    special_pair: tuple[int, int] | None
    edge_classes: dict[str, int]
    theorem_hypothesis_holds: bool
    k1_extrapolation: bool

    def to_json_dict(self) -> dict:
        return {
            "A": list(self.core_A),
            "B": list(self.outer_B),
            "special_pair": list(self.special_pair) if self.special_pair else None,
            "class_counts": dict(self.edge_classes),
            "theorem_hypothesis_holds": self.theorem_hypothesis_holds,
            "k1_extrapolation": self.k1_extrapolation,
        }


@dataclass(frozen=True)
class AuditReport:
    class_results: dict[str, tuple[int, int, bool]]  # name -> (expected, recounted, ok)
    unexpected_edges: int
    passed: bool


def extremal_construction(p: FormulaParams) -> tuple[Hypergraph, ConstructionLayout]:
    """Build the core construction for (n, r, ell, k).

    A = {1 .. k*ell'-1}, B = {k*ell' .. n}; when ell is even the special
    pair is the two smallest B vertices.  Requires k*ell'-1 >= r-1 and
    n >= k*ell'-1+r; the theorem-range hypotheses (k >= 2, r >= 3,
    ell' >= r, 2*ell' >= r+7) are reported, not enforced, and k = 1 is an
    explicitly flagged extrapolation.
    """
    a_size = p.core_size
    if a_size < p.r - 1:
        raise ParamsOutOfRange(f"core size {a_size} below r-1={p.r - 1}")
    if p.n < a_size + p.r:
        raise ParamsOutOfRange(f"need n >= {a_size + p.r} to reach outer vertices, got {p.n}")
    core = tuple(range(1, a_size + 1))
    outer = tuple(range(a_size + 1, p.n + 1))
    even = p.parity_indicator == 1
    if even and len(outer) < 2:
        raise ParamsOutOfRange("even path length needs at least two outer vertices")
    inside = [c for c in combinations(core, p.r)]
    one_out = [c + (b,) for c in combinations(core, p.r - 1) for b in outer]
    special = None
    two_out = []
    if even:
        special = (outer[0], outer[1])
        two_out = [c + special for c in combinations(core, p.r - 2)]
    edges = sorted(inside + one_out + two_out)
    h = Hypergraph(n=p.n, r=p.r, edges=tuple(edges))
    layout = ConstructionLayout(
        core_A=core,
        outer_B=outer,
        special_pair=special,
        edge_classes={
            "inside_core": len(inside),
            "one_outer": len(one_out),
            "special_pair": len(two_out),
        },
        theorem_hypothesis_holds=(
            p.k >= 2 and p.r >= 3 and p.ell_prime >= p.r and 2 * p.ell_prime >= p.r + 7
        ),
        k1_extrapolation=p.k == 1,
    )
    return h, layout


def block_construction(n: int, block: int, r: int) -> Hypergraph:
    """Disjoint union of n/block complete r-graphs on `block` vertices each.

    Contains no Berge path with `block` edges: such a path needs block+1
    defining vertices inside one component.
    """
    if block < r:
        raise BlockTooSmall(f"block size {block} below uniformity {r}")
    if n % block != 0:
        raise DoesNotDivide(f"{block} does not divide {n}")
    edges = []
    for start in range(1, n + 1, block):
        edges.extend(combinations(range(start, start + block), r))
    return Hypergraph(n=n, r=r, edges=tuple(sorted(edges)))


def construction_audit(h: Hypergraph, layout: ConstructionLayout) -> AuditReport:
    """Recount the construction's edge classes from scratch.

    Classifies every edge by its intersection with the outer set and
    compares against both the layout's recorded counts and the closed-form
    class sizes.
    """
    a_size = len(layout.core_A)
    outer = set(layout.outer_B)
    special = set(layout.special_pair) if layout.special_pair else None
    counts = {"inside_core": 0, "one_outer": 0, "special_pair": 0}
    unexpected = 0
    for e in h.edges:
        meet = outer.intersection(e)
        if not meet:
            counts["inside_core"] += 1
        elif len(meet) == 1:
            counts["one_outer"] += 1
        elif special is not None and meet == special:
            counts["special_pair"] += 1
        else:
            unexpected += 1
    expected = {
        "inside_core": comb(a_size, h.r),
        "one_outer": comb(a_size, h.r - 1) * len(layout.outer_B),
        "special_pair": comb(a_size, h.r - 2) if special else 0,
    }
    results = {
        name: (expected[name], counts[name], expected[name] == counts[name] == layout.edge_classes[name])
        for name in counts
    }
    passed = unexpected == 0 and all(ok for _, _, ok in results.values())
    return AuditReport(class_results=results, unexpected_edges=unexpected, passed=passed)
