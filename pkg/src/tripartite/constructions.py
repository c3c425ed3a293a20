"""
K3(s)-free tripartite graphs with minimum degree n + Omega(delta(base)).

``construction1`` joins V1 completely to V2 and V3 and puts the projective
plane incidence graph between V2 and V3.  ``construction2`` arranges
V1, X2, Y3, Y2, X3 as a blow-up of the 5-cycle and places the incidence graph
between V1 and Y2 u Y3.  Both accept any K2(s)-free base graph through
``generalized_construction``.

Where the underlying choice is arbitrary (which vertices form X2 and X3, and
how the base graph is laid onto V1 x (Y2 u Y3)) it is driven by explicit seeds
so that every graph is reproducible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from . import bounds
from .errors import BadPartition, BaseNotFree, SizeMismatch
from .graph import (
    BipartiteGraph, FreenessReport, TripartiteGraph, bits, count_triangles, find_k2s, find_k3s,
    mask_of,
)
from .plane import build_plane, incidence_graph


def plane_graph(q: int) -> BipartiteGraph:
    return incidence_graph(build_plane(q))


@dataclass(frozen=True)
class Construction2Params:
    q: int
    x2_size: int
    partition_seed: Optional[int] = 0
    base_assignment_seed: Optional[int] = 0

    @property
    def n(self) -> int:
        return self.q * self.q + self.q + 1


def check_x2_size(n: int, x2_size: int) -> None:
    lo, hi = math.isqrt(n - 1) + 1 if n > 1 else 1, n // 2
    if not lo <= x2_size <= hi:
        raise BadPartition(f"|X2| = {x2_size} outside [{lo}, {hi}] for n = {n}")


def _split(n: int, k: int, rng: Optional[random.Random]):
    order = list(range(n))
    if rng is not None:
        rng.shuffle(order)
    return sorted(order[:k]), sorted(order[k:])


def construction1_from(base: BipartiteGraph) -> TripartiteGraph:
    n = base.nl
    full = BipartiteGraph.complete(n, n)
    return TripartiteGraph(n, full, full, base)


def construction1(q: int) -> TripartiteGraph:
    """V1 complete to V2 and V3; the PG(2,q) incidence graph between V2 (points) and V3 (lines)."""
    return construction1_from(plane_graph(q))


def construction2_from(base: BipartiteGraph, x2_size: int, partition_seed=0,
                       base_assignment_seed=0, strict: bool = True) -> TripartiteGraph:
    """C5 blow-up V1-X2-Y3-Y2-X3-V1 with ``base`` between V1 and Y2 u Y3.

    Base points go to V1 in order; base lines go to Y2 followed by Y3 (each
    sorted), permuted by ``base_assignment_seed``.  A seed of None means no
    shuffling.  ``strict=False`` skips the size check on X2, which allows the
    degenerate X2 = Y3 = {} case.
    """
    n = base.nl
    if base.nr != n:
        raise SizeMismatch("base graph must have n vertices on each side")
    if strict:
        check_x2_size(n, x2_size)
    elif not 0 <= x2_size <= n:
        raise BadPartition(f"|X2| = {x2_size} outside [0, {n}]")
    prng = None if partition_seed is None else random.Random(partition_seed)
    X2, Y2 = _split(n, x2_size, prng)
    Y3, X3 = _split(n, x2_size, prng)  # |Y3| = |X2|, |X3| = |Y2|

    targets = [(2, v) for v in Y2] + [(3, v) for v in Y3]
    if base_assignment_seed is not None:
        random.Random(base_assignment_seed).shuffle(targets)

    mX2, mY2, mX3, mY3 = (mask_of(x) for x in (X2, Y2, X3, Y3))
    r12 = [mX2] * n
    r13 = [mX3] * n
    for point, row in enumerate(base.rows):
        for line in bits(row):
            part, v = targets[line]
            if part == 2:
                r12[point] |= 1 << v
            else:
                r13[point] |= 1 << v
    r23 = [0] * n
    for v in X2:
        r23[v] = mY3
    for v in Y2:
        r23[v] = mY3 | mX3
    return TripartiteGraph(n, BipartiteGraph(n, n, tuple(r12)), BipartiteGraph(n, n, tuple(r13)),
                           BipartiteGraph(n, n, tuple(r23)))


def construction2(params: Construction2Params) -> TripartiteGraph:
    return construction2_from(plane_graph(params.q), params.x2_size, params.partition_seed,
                              params.base_assignment_seed)


def construction2_blocks(n: int, x2_size: int, partition_seed=0) -> dict[str, list[int]]:
    """The vertex blocks used by construction2 for the given size and seed."""
    prng = None if partition_seed is None else random.Random(partition_seed)
    X2, Y2 = _split(n, x2_size, prng)
    Y3, X3 = _split(n, x2_size, prng)
    return {"V1": list(range(n)), "X2": X2, "Y2": Y2, "X3": X3, "Y3": Y3}


def generalized_construction(base: BipartiteGraph, variant: int, s: int = 2, x2_size=None,
                             partition_seed=0, base_assignment_seed=0) -> TripartiteGraph:
    """Construction 1 or 2 with a user-supplied K2(s)-free base graph.

    The base is checked with the exhaustive detector first; a K2(s) in it
    raises BaseNotFree.
    """
    if base.nl != base.nr:
        raise SizeMismatch(f"base graph must be balanced, got {base.nl} x {base.nr}")
    report = find_k2s(base, s)
    if not report.free:
        raise BaseNotFree(s, report.witness)
    if variant == 1:
        return construction1_from(base)
    if variant == 2:
        if x2_size is None:
            x2_size = math.isqrt(base.nl - 1) + 1
        return construction2_from(base, x2_size, partition_seed, base_assignment_seed)
    raise ValueError(f"unknown variant {variant}")


# -- audit ---------------------------------------------------------------------

@dataclass(frozen=True)
class AuditReport:
    n: int
    s: int
    min_degree: int
    excess: int
    triangle_count: int
    freeness: FreenessReport
    bound_comparisons: dict

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "min_degree": self.min_degree,
            "excess": self.excess,
            "triangle_count": self.triangle_count,
            "freeness": self.freeness.to_dict(),
            "bound_comparisons": self.bound_comparisons,
        }


def audit(G: TripartiteGraph, s: int = 2, eps: float = 0.0, workers: int = 1) -> AuditReport:
    n = G.n
    delta = G.min_degree()
    excess = delta - n
    thm_excess = bounds.t_value(n, s, eps)
    comparisons = {
        "sqrt_n": math.sqrt(n),
        "ceil_sqrt_n": math.isqrt(n - 1) + 1,
        "excess_ge_sqrt_n": excess >= math.sqrt(n),
        "excess_ge_ceil_sqrt_n": excess >= math.isqrt(n - 1) + 1,
        "thm_excess": thm_excess,
        "excess_ge_thm_excess": excess >= thm_excess,
    }
    return AuditReport(n, s, delta, excess, count_triangles(G), find_k3s(G, s, workers),
                       comparisons)


# -- 5-cycle census ------------------------------------------------------------

def _adjacency_sets(G: TripartiteGraph) -> list[set[int]]:
    """Flatten G to a simple graph on 3n vertices (part k occupies [(k-1)n, kn))."""
    n = G.n
    adj = [set() for _ in range(3 * n)]
    for (a, b), edges in G.edges().items():
        for i, j in edges:
            u, v = (a - 1) * n + i, (b - 1) * n + j
            adj[u].add(v)
            adj[v].add(u)
    return adj


def five_cycles(G: TripartiteGraph):
    """Yield every 5-cycle once, as a vertex tuple starting at its minimum vertex."""
    adj = _adjacency_sets(G)
    for v0 in range(len(adj)):
        for v1 in adj[v0]:
            if v1 <= v0:
                continue
            for v2 in adj[v1]:
                if v2 <= v0 or v2 == v1:
                    continue
                for v3 in adj[v2]:
                    if v3 <= v0 or v3 in (v1, v2):
                        continue
                    for v4 in adj[v3] & adj[v0]:
                        # v4 > v1 fixes the traversal direction
                        if v4 <= v1 or v4 in (v2, v3):
                            continue
                        yield (v0, v1, v2, v3, v4)


def count_five_cycles(G: TripartiteGraph) -> int:
    return sum(1 for _ in five_cycles(G))


def count_block_five_cycles(G: TripartiteGraph, blocks: dict[str, list[int]]) -> int:
    """5-cycles meeting the five blocks V1, X2, Y3, Y2, X3 once each."""
    n = G.n
    label = {}
    offset = {"V1": 0, "X2": n, "Y2": n, "X3": 2 * n, "Y3": 2 * n}
    for name, verts in blocks.items():
        for v in verts:
            label[offset[name] + v] = name
    return sum(1 for cyc in five_cycles(G) if len({label[v] for v in cyc}) == 5)


def without_vertex_edges(G: TripartiteGraph, part: int, v: int) -> TripartiteGraph:
    """Copy of G with every edge at vertex v of ``part`` removed."""
    out = G
    for other in (1, 2, 3):
        if other == part:
            continue
        a, b = sorted((part, other))
        nbrs = G.neighbors(part, v)[other]
        for u in bits(nbrs):
            i, j = (v, u) if part == a else (u, v)
            out = out.with_edge(a, b, i, j, present=False)
    return out


def structural_freeness(G: TripartiteGraph, blocks: dict[str, list[int]]) -> bool:
    """Sufficient K3(2)-freeness check for construction2 output without full search.

    X2-X3 must be empty, and V1 x Y2 and V1 x Y3 must be C4-free (the two
    ways a K3(2) could avoid X2 or X3).
    """
    mX3 = mask_of(blocks["X3"])
    if any(G.l23.rows[v] & mX3 for v in blocks["X2"]):
        return False
    n = G.n
    for key, lay in (("Y2", G.l12), ("Y3", G.l13)):
        m = mask_of(blocks[key])
        sub = BipartiteGraph(n, n, tuple(r & m for r in lay.rows))
        if not find_k2s(sub, 2).free:
            return False
    return True


__all__ = [
    "Construction2Params", "AuditReport", "audit", "check_x2_size", "construction1",
    "construction1_from", "construction2", "construction2_blocks", "construction2_from",
    "count_block_five_cycles", "count_five_cycles", "five_cycles", "generalized_construction",
    "plane_graph", "structural_freeness", "without_vertex_edges",
]
