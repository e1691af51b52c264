"""Berge containment with certificates, good orders, and neighbourhood tools.

A host r-graph contains a Berge copy of a pattern graph F when there are an
injective map of V(F) into the host's vertices (the defining vertices) and
a bijection from E(F) onto distinct hyperedges (the defining hyperedges)
such that each hyperedge contains the images of its pattern edge's
endpoints.  Finders here return explicit certificates; absence answers are
exact unless a node budget cut the search short, which is reported as an
explicit indeterminate status, never as "not found".
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb

from . import engine
from .core import Hypergraph, PatternGraph, cycle_pattern, parse_pattern, path_pattern, star_pattern
from .errors import (
    BadParameters,
    EmptyHypergraph,
    FormatError,
    IndexOutOfRange,
    InvalidCycleLength,
    TooFewEdges,
    V0TooSmall,
    VertexNotInHost,
    VertexOutOfRange,
)


class Status(Enum):
    FOUND = "found"
    NOT_FOUND = "not-found"
    INDETERMINATE = "indeterminate"


_STATUS_FROM_ENGINE = {
    engine.NOT_FOUND: Status.NOT_FOUND,
    engine.FOUND: Status.FOUND,
    engine.INDETERMINATE: Status.INDETERMINATE,
}


@dataclass(frozen=True)
class BergeCertificate:
    """Witness of a Berge copy: defining vertices and the edge bijection.

    ``defining_vertices[i]`` is the host vertex hosting pattern vertex i+1;
    ``edge_assignment[j]`` is the host edge index assigned to
    ``pattern.edges[j]``.
    """

    pattern: PatternGraph
    defining_vertices: tuple[int, ...]
    edge_assignment: tuple[int, ...]

    def to_json(self) -> str:
        doc = {
            "pattern": self.pattern.expr,
            "defining_vertices": list(self.defining_vertices),
            "edge_assignment": [
                [u, v, h] for (u, v), h in zip(self.pattern.edges, self.edge_assignment)
            ],
        }
        return json.dumps(doc, indent=2) + "\n"

    @staticmethod
    def from_json(text: str) -> "BergeCertificate":
        doc = json.loads(text)
        pattern = parse_pattern(doc["pattern"])
        triples = doc["edge_assignment"]
        by_pair = {}
        for u, v, h in triples:
            by_pair[(min(u, v), max(u, v))] = h
        try:
            assignment = tuple(by_pair[(min(u, v), max(u, v))] for u, v in pattern.edges)
        except KeyError as exc:
            raise FormatError(f"edge_assignment misses pattern edge {exc}", 1) from exc
        return BergeCertificate(pattern, tuple(doc["defining_vertices"]), assignment)


@dataclass(frozen=True)
class EmbeddingResult:
    status: Status
    certificate: BergeCertificate | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


@dataclass(frozen=True)
class PathSearchResult:
    length: int
    certificate: BergeCertificate
    exact: bool
    nodes: int


@dataclass(frozen=True)
class GoodOrder:
    ordering: tuple[int, ...]


@dataclass(frozen=True)
class StarResult:
    exists: bool
    certificate: BergeCertificate | None
    degree: int
    degree_threshold: int
    degree_condition_holds: bool


@lru_cache(maxsize=512)
def _pattern_plan(pattern: PatternGraph):
    """Deterministic assignment order: repeatedly take the unplaced pattern
    vertex with the most placed neighbours, breaking ties by higher degree
    then lower index (0-based output)."""
    p = pattern.num_vertices
    edges0 = tuple((u - 1, v - 1) for u, v in pattern.edges)
    deg = [0] * p
    adj = [[] for _ in range(p)]
    for a, b in edges0:
        deg[a] += 1
        deg[b] += 1
        adj[a].append(b)
        adj[b].append(a)
    placed = [False] * p
    placed_nbrs = [0] * p
    order = []
    for _ in range(p):
        best = None
        key = None
        for v in range(p):
            if placed[v]:
                continue
            k = (-placed_nbrs[v], -deg[v], v)
            if key is None or k < key:
                key = k
                best = v
        order.append(best)
        placed[best] = True
        for w in adj[best]:
            placed_nbrs[w] += 1
    return edges0, tuple(order)


def _host_prep(h: Hypergraph):
    masks = h.edge_vertex_masks()
    deg = [0] * h.n
    for em in masks:
        t = em
        while t:
            v = (t & -t).bit_length() - 1
            deg[v] += 1
            t &= t - 1
    host_order = sorted((v for v in range(h.n) if deg[v] > 0), key=lambda v: (deg[v], v))
    return masks, host_order


def solve_raw(n, edge_masks, pattern, host_order, budget=0, cycle_sym=False, pinned=None):
    """Low-level search over raw edge masks; used by the exhaustive search."""
    edges0, order = _pattern_plan(pattern)
    pinned_pe, pinned_he = pinned if pinned else (-1, -1)
    return engine.solve(n, edge_masks, edges0, order, host_order, budget,
                        cycle_sym, pinned_pe, pinned_he)


def _result_from_engine(pattern, raw):
    status, images, assignment, nodes = raw
    cert = None
    if status == engine.FOUND:
        cert = BergeCertificate(
            pattern=pattern,
            defining_vertices=tuple(v + 1 for v in images),
            edge_assignment=tuple(assignment),
        )
    return EmbeddingResult(_STATUS_FROM_ENGINE[status], cert, nodes)


def find_berge_embedding(h: Hypergraph, pattern: PatternGraph, budget: int = 0,
                         cycle_sym: bool = False) -> EmbeddingResult:
    """Search for a Berge copy of ``pattern`` in ``h``.

    budget 0 means unlimited, in which case "not found" is a proof of
    absence.  A positive budget caps vertex-assignment attempts and an
    exhausted budget yields an indeterminate status.
    """
    masks, host_order = _host_prep(h)
    raw = solve_raw(h.n, masks, pattern, host_order, budget, cycle_sym)
    return _result_from_engine(pattern, raw)


def verify_certificate(h: Hypergraph, cert: BergeCertificate) -> bool:
    """Check a certificate against the host: injective defining vertices,
    injective edge assignment, and per-edge endpoint containment."""
    pattern = cert.pattern
    if len(cert.defining_vertices) != pattern.num_vertices:
        raise IndexOutOfRange("defining_vertices length differs from pattern order")
    if len(cert.edge_assignment) != pattern.num_edges:
        raise IndexOutOfRange("edge_assignment length differs from pattern size")
    for v in cert.defining_vertices:
        if not 1 <= v <= h.n:
            raise IndexOutOfRange(f"host vertex {v} outside 1..{h.n}")
    for j in cert.edge_assignment:
        if not 0 <= j < h.m:
            raise IndexOutOfRange(f"hyperedge index {j} outside 0..{h.m - 1}")
    if len(set(cert.defining_vertices)) != pattern.num_vertices:
        return False
    if len(set(cert.edge_assignment)) != pattern.num_edges:
        return False
    for (u, v), j in zip(pattern.edges, cert.edge_assignment):
        edge = h.edges[j]
        if cert.defining_vertices[u - 1] not in edge or cert.defining_vertices[v - 1] not in edge:
            return False
    return True


def longest_berge_path(h: Hypergraph, budget: int = 0) -> PathSearchResult:
    """Longest ell with a Berge path of ell edges in ``h``, with a witness.

    Scans upward from ell = 1; containment is monotone decreasing in ell,
    so the first absence proof pins the maximum.  With a budget, an
    indeterminate query stops the scan and the result is marked inexact.
    """
    if h.m == 0:
        raise EmptyHypergraph("host has no hyperedges")
    masks, host_order = _host_prep(h)
    upper = min(h.m, len(host_order) - 1)
    best = None
    total_nodes = 0
    exact = True
    length = 0
    for ell in range(1, upper + 1):
        raw = solve_raw(h.n, masks, path_pattern(ell), host_order, budget)
        total_nodes += raw[3]
        result = _result_from_engine(path_pattern(ell), raw)
        if result.status is Status.FOUND:
            best = result.certificate
            length = ell
        elif result.status is Status.NOT_FOUND:
            break
        else:
            exact = False
            break
    return PathSearchResult(length, best, exact, total_nodes)


def find_berge_cycle(h: Hypergraph, length: int, budget: int = 0) -> EmbeddingResult:
    """Search for a Berge cycle of the given length (>= 3).

    Convenience wrapper over the embedding search with the rotation and
    reflection symmetry of the cycle pruned away: the first defining vertex
    is forced minimal and the traversal is oriented toward its smaller
    neighbour.
    """
    if length < 3:
        raise InvalidCycleLength(f"cycle length must be >= 3, got {length}")
    return find_berge_embedding(h, cycle_pattern(length), budget, cycle_sym=True)


def good_order(h: Hypergraph, first: int) -> GoodOrder:
    """Order the covered vertices so every consecutive pair is a good pair
    (two distinct hyperedges covering the two vertices separately).

    Builds the order by peeling the lexicographically last edge: the
    two-edge base case interleaves the private vertices of each edge and
    appends the intersection; each peeled edge's private vertices are then
    spliced in front, alternating with the existing prefix.  The result is
    rotated to start at ``first``.
    """
    if h.m < 2:
        raise TooFewEdges(f"good orders need at least 2 edges, got {h.m}")
    e1, e2 = h.edges[0], h.edges[1]
    s1, s2 = set(e1), set(e2)
    left = sorted(s1 - s2)
    right = sorted(s2 - s1)
    ordering = []
    for a, b in zip(left, right):
        ordering.extend((a, b))
    ordering.extend(sorted(s1 & s2))
    covered = s1 | s2
    for e in h.edges[2:]:
        private = sorted(set(e) - covered)
        merged = []
        for i, v in enumerate(private):
            merged.extend((v, ordering[i]))
        merged.extend(ordering[len(private):])
        ordering = merged
        covered.update(e)
    if first not in covered:
        raise VertexNotInHost(f"vertex {first} is not covered by any hyperedge")
    i = ordering.index(first)
    return GoodOrder(tuple(ordering[i:] + ordering[:i]))


def berge_common_neighbours(h: Hypergraph, v0) -> frozenset[int]:
    """Vertices outside v0 joined to every pair of v0 through two distinct
    hyperedges: u qualifies when for all v1, v2 in v0 there are distinct
    E1, E2 with {v1, u} in E1 and {v2, u} in E2."""
    v0 = sorted(set(v0))
    if len(v0) < 2:
        raise V0TooSmall(f"need at least 2 base vertices, got {len(v0)}")
    for v in v0:
        if not 1 <= v <= h.n:
            raise VertexOutOfRange(f"vertex {v} outside 1..{h.n}")
    inc = h.incidence_masks()
    out = []
    for u in range(1, h.n + 1):
        if u in v0:
            continue
        mu = inc.get(u, 0)
        if mu == 0:
            continue
        ok = True
        for i in range(len(v0)):
            for j in range(i + 1, len(v0)):
                m1 = mu & inc.get(v0[i], 0)
                m2 = mu & inc.get(v0[j], 0)
                if m1 == 0 or m2 == 0 or (m1 | m2).bit_count() < 2:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(u)
    return frozenset(out)


def berge_star_exists(h: Hypergraph, centre: int, size: int) -> StarResult:
    """Decide whether a Berge star with the given centre and edge count
    exists, reporting alongside whether the sufficient degree condition
    d(centre) > C(size-1, r-1) holds.

    Existence reduces to a system of distinct representatives: a matching
    of ``size`` leaves to distinct hyperedges through the centre.
    """
    if not size > h.r >= 2:
        raise BadParameters(f"need size > r >= 2, got size={size}, r={h.r}")
    if not 1 <= centre <= h.n:
        raise VertexOutOfRange(f"vertex {centre} outside 1..{h.n}")
    centre_edges = [j for j, e in enumerate(h.edges) if centre in e]
    degree = len(centre_edges)
    threshold = comb(size - 1, h.r - 1)
    leaves = sorted({v for j in centre_edges for v in h.edges[j] if v != centre})
    # maximum matching leaf -> hyperedge through the centre (Kuhn, ascending)
    leaf_to_edges = {y: [j for j in centre_edges if y in h.edges[j]] for y in leaves}
    matched_edge_of_leaf: dict[int, int] = {}
    owner: dict[int, int] = {}

    def try_leaf(y, visited):
        for j in leaf_to_edges[y]:
            if j in visited:
                continue
            visited.add(j)
            if j not in owner or try_leaf(owner[j], visited):
                owner[j] = y
                matched_edge_of_leaf[y] = j
                return True
        return False

    matched = 0
    for y in leaves:
        if try_leaf(y, set()):
            matched += 1
            if matched == size:
                break
    exists = matched >= size
    cert = None
    if exists:
        chosen = sorted(matched_edge_of_leaf.items())[:size]
        pattern = star_pattern(size)
        cert = BergeCertificate(
            pattern=pattern,
            defining_vertices=(centre,) + tuple(y for y, _ in chosen),
            edge_assignment=tuple(j for _, j in chosen),
        )
    return StarResult(exists, cert, degree, threshold, degree > threshold)
