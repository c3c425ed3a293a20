"""
Small-scale extremal oracles.

* ``brute_force_zarankiewicz`` - exact z(n, s) by branch-and-bound over the
  rows of the biadjacency matrix.
* ``extremal_min_degree`` - the largest minimum degree of a K3(s)-free
  G_3(n), by exhaustive edge-by-edge search for each candidate degree.
* ``local_search_lower_bound`` - seeded hill climbing for larger n; gives a
  lower bound only.

Both exhaustive searches break symmetry with a lex-leader condition: rows of
the relevant biadjacency matrix are nonincreasing and, within a block,
columns are nondecreasing.  Every isomorphism class has a representative
satisfying this, so the pruning never loses an optimum.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .constructions import construction1, construction1_from
from .errors import BadArgs, NotPrimePower, TooLarge
from .formats import encode
from .gf import prime_power
from .graph import (
    BipartiteGraph, TripartiteGraph, _k3s_through, find_k2s, find_k3s, k3s_through_edge, popcount,
)

ZARANKIEWICZ_MAX_N = 8
EXTREMAL_MAX_N = 3


@dataclass
class ExtremalResult:
    n: int
    s: int
    optimum: int
    witness: Union[BipartiteGraph, TripartiteGraph]
    exhaustive: bool
    nodes: int

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "optimum": self.optimum,
            "exhaustive": self.exhaustive,
            "nodes": self.nodes,
            "witness_tg3_or_bg2": encode(self.witness),
        }


def append_result(path, result: ExtremalResult) -> None:
    """Append one JSON line to a results file (never rewrites earlier lines)."""
    with Path(path).open("a", newline="\n") as fh:
        fh.write(json.dumps(result.to_record(), separators=(",", ":")) + "\n")


# -- Zarankiewicz numbers --------------------------------------------------------

def brute_force_zarankiewicz(n: int, s: int = 2, force: bool = False) -> ExtremalResult:
    """Exact z(n, s): the most edges in a K2(s)-free bipartite graph with n + n vertices."""
    if s < 2 or n < 1:
        raise BadArgs("need n >= 1 and s >= 2")
    if n > ZARANKIEWICZ_MAX_N and not force:
        raise TooLarge(f"n={n} exceeds the exhaustive limit {ZARANKIEWICZ_MAX_N}")
    if n < s:
        return ExtremalResult(n, s, n * n, BipartiteGraph.complete(n, n), True, 1)

    # Each s-set of columns lies in at most s-1 rows, so rows of degrees d_i
    # satisfy sum C(d_i, s) <= (s-1) C(n, s).
    capacity = (s - 1) * math.comb(n, s)

    @lru_cache(maxsize=None)
    def best_fill(k: int, budget: int) -> int:
        if k == 0:
            return 0
        return max(d + best_fill(k - 1, budget - math.comb(d, s))
                   for d in range(n + 1) if math.comb(d, s) <= budget)

    # candidate rows in decreasing order, with their degree
    all_rows = [(r, popcount(r)) for r in range((1 << n) - 1, -1, -1)]
    pair_shift = ((1 << n) - 1) >> 1  # mask of columns j < n-1

    rows: list[int] = []
    best = {"edges": -1, "rows": None}
    nodes = [0]

    def fits(r: int) -> bool:
        if s == 2:
            return all(popcount(r & prev) < 2 for prev in rows)
        for group in combinations(rows, s - 1):
            common = r
            for g in group:
                common &= g
            if popcount(common) >= s:
                return False
        return True

    def extend(edges: int, used: int, tied: int, prev: int):
        nodes[0] += 1
        k = n - len(rows)
        if k == 0:
            if edges > best["edges"]:
                best["edges"], best["rows"] = edges, list(rows)
            return
        if edges + best_fill(k, capacity - used) <= best["edges"]:
            return
        for r, d in all_rows:
            if r > prev:
                continue
            # columns j, j+1 still tied must not become ordered col_j > col_{j+1}
            if tied & r & ~(r >> 1) & pair_shift:
                continue
            if not fits(r):
                continue
            rows.append(r)
            extend(edges + d, used + math.comb(d, s), tied & ~(r ^ (r >> 1)), r)
            rows.pop()

    extend(0, 0, pair_shift, (1 << n) - 1)
    witness = BipartiteGraph(n, n, tuple(best["rows"]))
    return ExtremalResult(n, s, best["edges"], witness, True, nodes[0])


# -- extremal minimum degree -------------------------------------------------------

class _MinDegreeSearch:
    """Does a K3(s)-free G_3(n) with minimum degree >= d exist?

    Edges are decided in the order layer (1,2), (1,3), (2,3), row-major,
    trying "present" before "absent".
    """

    def __init__(self, n: int, s: int):
        self.n, self.s = n, s
        self.order = [(lay, i, j) for lay in range(3) for i in range(n) for j in range(n)]
        self.nodes = 0

    def run(self, d: int) -> Optional[TripartiteGraph]:
        n = self.n
        self.d = d
        self.rows = [[0] * n for _ in range(3)]  # l12, l13, l23
        self.cols = [[0] * n for _ in range(3)]
        self.possible = [2 * n] * (3 * n)
        self.found = None
        if 2 * n >= d:
            self._dfs(0)
        return self.found

    def _endpoints(self, lay, i, j):
        n = self.n
        return {0: (i, n + j), 1: (i, 2 * n + j), 2: (n + i, 2 * n + j)}[lay]

    def _creates_k3s(self, lay, i, j) -> bool:
        r, c = self.rows, self.cols
        if lay == 0:
            hit = _k3s_through(r[0], r[1], r[2], self.n, i, j, self.s)
        elif lay == 1:
            hit = _k3s_through(r[1], r[0], c[2], self.n, i, j, self.s)
        else:
            hit = _k3s_through(r[2], c[0], c[1], self.n, i, j, self.s)
        return hit is not None

    def _canonical(self, k: int) -> bool:
        lay, i, j = self.order[k]
        n = self.n
        if j != n - 1 or lay == 2:
            return True
        r12, r13 = self.rows[0], self.rows[1]
        if i > 0:
            if lay == 0 and r12[i] > r12[i - 1]:
                return False
            if lay == 1 and r12[i] == r12[i - 1] and r13[i] > r13[i - 1]:
                return False
        if i == n - 1:
            # whole block done: columns nondecreasing, read top row first
            rows = self.rows[lay]
            colval = [sum((rows[x] >> col & 1) << (n - 1 - x) for x in range(n))
                      for col in range(n)]
            if any(colval[col + 1] < colval[col] for col in range(n - 1)):
                return False
        return True

    def _dfs(self, k: int) -> bool:
        self.nodes += 1
        if k == len(self.order):
            rows = self.rows
            self.found = TripartiteGraph(
                self.n, BipartiteGraph(self.n, self.n, tuple(rows[0])),
                BipartiteGraph(self.n, self.n, tuple(rows[1])),
                BipartiteGraph(self.n, self.n, tuple(rows[2])))
            return True
        lay, i, j = self.order[k]
        u, v = self._endpoints(lay, i, j)
        self.rows[lay][i] |= 1 << j
        self.cols[lay][j] |= 1 << i
        if not self._creates_k3s(lay, i, j) and self._canonical(k) and self._dfs(k + 1):
            return True
        self.rows[lay][i] &= ~(1 << j)
        self.cols[lay][j] &= ~(1 << i)
        self.possible[u] -= 1
        self.possible[v] -= 1
        if (self.possible[u] >= self.d and self.possible[v] >= self.d
                and self._canonical(k) and self._dfs(k + 1)):
            return True
        self.possible[u] += 1
        self.possible[v] += 1
        return False


def extremal_min_degree(n: int, s: int = 2, force: bool = False) -> ExtremalResult:
    """Largest minimum degree over K3(s)-free G_3(n), with a witness attaining it."""
    if s < 2 or n < 1:
        raise BadArgs("need n >= 1 and s >= 2")
    if n > EXTREMAL_MAX_N and not force:
        raise TooLarge(f"n={n} exceeds the exhaustive limit {EXTREMAL_MAX_N}")
    search = _MinDegreeSearch(n, s)
    for d in range(2 * n, -1, -1):
        G = search.run(d)
        if G is not None:
            return ExtremalResult(n, s, G.min_degree(), G, True, search.nodes)
    raise AssertionError("the empty graph always qualifies")  # unreachable


def random_crosscheck(n: int, s: int, optimum: int, samples: int, seed: int = 0,
                      chunk: int = 100_000) -> dict:
    """Sample random G_3(n) and look for a K3(s)-free one beating ``optimum``.

    Edge densities are drawn per sample from [0.5, 1) so that high minimum
    degrees actually occur.  Only graphs with min degree above the optimum
    are passed to the exact detector.
    """
    rng = np.random.default_rng(seed)
    n2 = n * n
    checked = violations = 0
    degree_hist = np.zeros(2 * n + 1, dtype=np.int64)
    done = 0
    while done < samples:
        m = min(chunk, samples - done)
        dens = rng.uniform(0.5, 1.0, size=(m, 1))
        E = rng.random((m, 3 * n2)) < dens
        l12 = E[:, :n2].reshape(m, n, n)
        l13 = E[:, n2:2 * n2].reshape(m, n, n)
        l23 = E[:, 2 * n2:].reshape(m, n, n)
        deg = np.concatenate([
            l12.sum(2) + l13.sum(2),
            l12.sum(1) + l23.sum(2),
            l13.sum(1) + l23.sum(1),
        ], axis=1)
        delta = deg.min(axis=1)
        degree_hist += np.bincount(delta, minlength=2 * n + 1)
        for idx in np.nonzero(delta > optimum)[0]:
            checked += 1
            G = TripartiteGraph.from_edges(
                n,
                zip(*np.nonzero(l12[idx])), zip(*np.nonzero(l13[idx])), zip(*np.nonzero(l23[idx])),
            )
            if find_k3s(G, s).free:
                violations += 1
        done += m
    return {"samples": samples, "checked": checked, "violations": violations,
            "min_degree_histogram": degree_hist.tolist()}


# -- local search ----------------------------------------------------------------

def _score(G: TripartiteGraph):
    degs = [d for part in G.degrees().values() for d in part]
    delta = min(degs)
    return (delta, -degs.count(delta), G.num_edges)


def _plane_order(n: int) -> Optional[int]:
    q = 2
    while q * q + q + 1 <= n:
        if q * q + q + 1 == n:
            try:
                prime_power(q)
                return q
            except NotPrimePower:
                return None
        q += 1
    return None


def _cross_edges(cert):
    S1, S2, S3 = cert.parts
    return ([(1, 2, a, b) for a in S1 for b in S2] + [(1, 3, a, c) for a in S1 for c in S3]
            + [(2, 3, b, c) for b in S2 for c in S3])


def _greedy_free_start(n: int, s: int, rng: random.Random) -> TripartiteGraph:
    """Construction 1 over a random maximal K2(s)-free base containing a perfect matching."""
    base = BipartiteGraph.from_edges(n, n, [(i, i) for i in range(n)])
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    rng.shuffle(cells)
    for i, j in cells:
        trial = base.with_edge(i, j)
        if find_k2s(trial, s).free:
            base = trial
    return construction1_from(base)


def _repair(G: TripartiteGraph, edge, s: int, nodes: list) -> TripartiteGraph:
    """Remove edges other than ``edge`` until no K3(s) passes through it."""
    a, b, i, j = edge
    while True:
        nodes[0] += 1
        wit = k3s_through_edge(G, a, b, i, j, s)
        if wit is None:
            return G
        options = [e for e in _cross_edges(wit) if e != edge]
        G = max((G.with_edge(*e, present=False) for e in options), key=_score)


def local_search_lower_bound(n: int, s: int = 2, seed: int = 0, budget: int = 2000) -> ExtremalResult:
    """Best K3(s)-free G_3(n) found by seeded hill climbing within ``budget`` nodes.

    Starts from Construction 1 when n = q^2+q+1 for a prime power q, otherwise
    from Construction 1 over a greedily grown K2(s)-free base, so the start
    already has minimum degree at least n + 1.  A node is one candidate
    evaluation (or one repair step); restarts perturb the incumbent.
    """
    if s < 2 or n < 1:
        raise BadArgs("need n >= 1 and s >= 2")
    rng = random.Random(seed)
    q = _plane_order(n) if s == 2 else None
    G = construction1(q) if q is not None else _greedy_free_start(n, s, rng)
    best = G
    nodes = [0]
    while nodes[0] < budget:
        current = _score(G)
        absent = [(a, b, i, j) for (a, b) in ((1, 2), (1, 3), (2, 3))
                  for i in range(n) for j in range(n) if not G.layer(a, b).has_edge(i, j)]
        rng.shuffle(absent)
        move, move_score = None, current
        for edge in absent:
            if nodes[0] >= budget:
                break
            nodes[0] += 1
            H = _repair(G.with_edge(*edge), edge, s, nodes)
            sc = _score(H)
            if sc > move_score:
                move, move_score = H, sc
        if move is not None:
            G = move
            if _score(G) > _score(best):
                best = G
            continue
        # stagnation: perturb the incumbent and climb again
        present = [(a, b, i, j) for (a, b), es in best.edges().items() for i, j in es]
        G = best
        for e in rng.sample(present, min(len(present), max(1, n // 2))):
            G = G.with_edge(*e, present=False)
        nodes[0] += 1
    if not find_k3s(best, s).free:
        raise AssertionError("local search produced a graph containing K3(s)")
    return ExtremalResult(n, s, best.min_degree(), best, False, nodes[0])


__all__ = [
    "ExtremalResult", "append_result", "brute_force_zarankiewicz", "extremal_min_degree",
    "local_search_lower_bound", "random_crosscheck", "ZARANKIEWICZ_MAX_N", "EXTREMAL_MAX_N",
]
