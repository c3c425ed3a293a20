"""
Constructive K3(s) extraction following the triangle-link argument.

Every vertex i of V1 has a triangle link A_i: the V2 x V3 pairs (x, y) such
that {i, x, y} is a triangle.  If s links share many pairs, the bipartite
graph on V2 x V3 formed by those shared pairs is dense enough to contain a
K2(s), and that K2(s) together with the s chosen V1 vertices is a K3(s).

The intersection step replaces the averaging argument with an exact
maximiser: a branch-and-bound over s-subsets of links.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from . import bounds
from .errors import BadQ, NotFound
from .graph import (
    BipartiteGraph, Certificate, TripartiteGraph, bits, count_triangles, find_k2s, find_k3s,
    popcount, verify_certificate,
)


@dataclass
class IntersectionInstance:
    """Sets A_1..A_p over a ground set of size N, as bitsets."""

    N: int
    sets: list[int]
    q_target: int
    w: Optional[float] = None
    alpha: Optional[float] = None

    @property
    def p(self) -> int:
        return len(self.sets)

    def total_size(self) -> int:
        return sum(popcount(a) for a in self.sets)

    def hypotheses(self) -> dict:
        """Evaluate the two premises of the intersection guarantee."""
        if self.w is None or self.alpha is None:
            return {"sum_ok": False, "density_ok": False, "alpha_ok": False, "hold": False}
        sum_ok = self.total_size() >= self.p * self.w * self.N * (1 - bounds.REL_TOL)
        density_ok = (1 - self.alpha) * self.w * self.p >= self.q_target * (1 - bounds.REL_TOL)
        alpha_ok = 0 < self.alpha < 1
        return {"sum_ok": sum_ok, "density_ok": density_ok, "alpha_ok": alpha_ok,
                "hold": sum_ok and density_ok and alpha_ok}

    def guarantee(self) -> Optional[float]:
        if self.w is None or self.alpha is None:
            return None
        return self.N * (self.alpha * self.w) ** self.q_target


@dataclass(frozen=True)
class IntersectionWitness:
    indices: tuple[int, ...]
    intersection: int = field(repr=False)
    intersection_size: int
    guarantee: Optional[float]
    guarantee_applies: bool

    @property
    def meets_guarantee(self) -> bool:
        if self.guarantee is None:
            return False
        return self.intersection_size >= math.ceil(self.guarantee - 1e-9)


def triangle_links(G: TripartiteGraph) -> IntersectionInstance:
    """Links of the V1 vertices over the ground set V2 x V3, pair (x, y) at bit x*n + y."""
    n = G.n
    r23 = G.l23.rows
    sets = []
    for i in range(n):
        n3 = G.l13.rows[i]
        link = 0
        for x in bits(G.l12.rows[i]):
            link |= (r23[x] & n3) << (x * n)
        sets.append(link)
    return IntersectionInstance(N=n * n, sets=sets, q_target=2)


def _branch(sets, q, first, best_size):
    """Best q-subset with smallest index ``first``; returns (size, indices, bits)."""
    p = len(sets)
    best = (best_size, None, 0)
    chosen = [first]

    def extend(start, common):
        nonlocal best
        if len(chosen) == q:
            size = popcount(common)
            if size > best[0]:
                best = (size, tuple(chosen), common)
            return
        for j in range(start, p - (q - len(chosen)) + 1):
            c = common & sets[j]
            # intersections only shrink; ties lose to the earlier subset
            if popcount(c) <= best[0]:
                continue
            chosen.append(j)
            extend(j + 1, c)
            chosen.pop()

    extend(first + 1, sets[first])
    return best


def _branch_task(args):
    sets, q, first = args
    return _branch(sets, q, first, -1)


def max_intersection(sets: list[int], q: int, workers: int = 1):
    """(indices, bitset) of the q-subset with largest intersection, lexicographic tie-break."""
    p = len(sets)
    if q < 1 or q > p:
        raise BadQ(f"q={q} outside [1, {p}]")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_branch_task, [(sets, q, f) for f in range(p - q + 1)]))
        top = max(r[0] for r in results)
        _, idx, common = min((r for r in results if r[0] == top), key=lambda r: r[1])
        return idx, common
    best = (-1, None, 0)
    for first in range(p - q + 1):
        if popcount(sets[first]) <= best[0]:
            continue
        cand = _branch(sets, q, first, best[0])
        if cand[1] is not None and cand[0] > best[0]:
            best = cand
    return best[1], best[2]


def exhaustive_max_intersection(sets: list[int], q: int):
    """Reference maximiser over all q-subsets (first maximum in lexicographic order)."""
    best_idx, best_size = None, -1
    for combo in combinations(range(len(sets)), q):
        common = sets[combo[0]]
        for j in combo[1:]:
            common &= sets[j]
        size = popcount(common)
        if size > best_size:
            best_idx, best_size = combo, size
    return best_idx, best_size


def large_intersection(inst: IntersectionInstance, workers: int = 1) -> IntersectionWitness:
    idx, common = max_intersection(inst.sets, inst.q_target, workers)
    return IntersectionWitness(idx, common, popcount(common), inst.guarantee(),
                               inst.hypotheses()["hold"])


@dataclass
class FinderTrace:
    n: int
    s: int
    eps: float
    min_degree: int
    required_degree: float
    degree_margin: float
    triangles: int
    w: float
    alpha: float
    hypotheses_hold: bool
    indices: Optional[tuple[int, ...]]
    intersection_size: int
    guarantee: Optional[float]
    kst_bound: Optional[float]
    eqB: Optional[bool]
    consistency_checked: bool
    fallback: bool
    certificate: Optional[Certificate]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "eps": self.eps,
            "min_degree": self.min_degree,
            "required_degree": self.required_degree,
            "degree_margin": self.degree_margin,
            "triangles": self.triangles,
            "w": self.w,
            "alpha": self.alpha,
            "hypotheses_hold": self.hypotheses_hold,
            "indices": None if self.indices is None else list(self.indices),
            "intersection_size": self.intersection_size,
            "guarantee": self.guarantee,
            "kst_bound": self.kst_bound,
            "eqB": self.eqB,
            "consistency_checked": self.consistency_checked,
            "fallback": self.fallback,
            "found": self.certificate is not None,
            "certificate": None if self.certificate is None
            else json.loads(self.certificate.to_json()),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def run_pipeline(G: TripartiteGraph, s: int = 2, eps: float = 1.0, workers: int = 1) -> FinderTrace:
    """Run the link-intersection pipeline and return its full trace.

    Never raises NotFound; ``trace.certificate`` is None when G is K3(s)-free.
    """
    n = G.n
    if s < 2 or s > n:
        raise BadQ(f"s={s} outside [2, {n}]")
    delta = G.min_degree()
    required = bounds.thm_threshold(n, s, eps)

    T = count_triangles(G)
    inst = triangle_links(G)
    inst.q_target = s
    inst.w = T / n**3
    inst.alpha = 1 / (1 + eps)
    wit = large_intersection(inst, workers)

    kst = bounds.kst_bound(n, s)
    eqB = bounds.eqB_check(n, s, eps) if eps > 0 else None
    # Whenever all premises hold, the intersection graph must beat the KST
    # bound, so the K2(s) step cannot fail.
    premises = delta >= required and eqB is True and wit.guarantee_applies and wit.meets_guarantee
    if premises:
        assert wit.intersection_size > kst, "intersection does not exceed the KST bound"

    rows = []
    mask = (1 << n) - 1
    for x in range(n):
        rows.append((wit.intersection >> (x * n)) & mask)
    B = BipartiteGraph(n, n, tuple(rows))
    rep = find_k2s(B, s)

    fallback = False
    cert = None
    if rep.witness is not None:
        S2, S3 = rep.witness.parts
        cert = Certificate("K3s", s, (tuple(wit.indices), S2, S3))
    else:
        full = find_k3s(G, s, workers)
        if full.witness is not None:
            fallback = True
            cert = Certificate("K3s", s, full.witness.parts, fallback=True)
    if cert is not None and not verify_certificate(G, cert):
        raise AssertionError(f"pipeline produced an invalid certificate {cert.to_json()}")

    return FinderTrace(
        n=n, s=s, eps=eps, min_degree=delta, required_degree=required,
        degree_margin=delta - required, triangles=T, w=inst.w, alpha=inst.alpha,
        hypotheses_hold=wit.guarantee_applies, indices=wit.indices,
        intersection_size=wit.intersection_size, guarantee=wit.guarantee, kst_bound=kst,
        eqB=eqB, consistency_checked=premises, fallback=fallback, certificate=cert,
    )


def extract_k3s(G: TripartiteGraph, s: int = 2, eps: float = 1.0, workers: int = 1) -> Certificate:
    """Certificate for a K3(s) in G, raising NotFound when G is K3(s)-free."""
    trace = run_pipeline(G, s, eps, workers)
    if trace.certificate is None:
        raise NotFound(f"graph contains no K3({s})")
    return trace.certificate
