import random
from itertools import combinations

import pytest

from tripartite.graph import BipartiteGraph, TripartiteGraph


def random_tripartite(n, p, seed):
    rng = random.Random(seed)
    layers = [[(i, j) for i in range(n) for j in range(n) if rng.random() < p] for _ in range(3)]
    return TripartiteGraph.from_edges(n, *layers)


def random_bipartite(nl, nr, p, seed):
    rng = random.Random(seed)
    return BipartiteGraph.from_edges(nl, nr, [(i, j) for i in range(nl) for j in range(nr)
                                              if rng.random() < p])


def naive_triangles(G):
    n = G.n
    return sum(1 for a in range(n) for b in range(n) for c in range(n)
               if G.l12.has_edge(a, b) and G.l13.has_edge(a, c) and G.l23.has_edge(b, c))


def naive_k2s(B, s):
    """Smallest (L, R) K2(s) by brute force over all subset pairs."""
    for L in combinations(range(B.nl), s):
        for R in combinations(range(B.nr), s):
            if all(B.has_edge(i, j) for i in L for j in R):
                return L, R
    return None


@pytest.fixture
def fano():
    from tripartite.plane import build_plane, incidence_graph

    return incidence_graph(build_plane(2))


def random_intersection_instance(rng, p_max=14, N_max=64):
    """Random IntersectionInstance satisfying both premises of the guarantee."""
    from tripartite.finder import IntersectionInstance

    while True:
        p = rng.randint(2, p_max)
        N = rng.randint(1, N_max)
        q = rng.randint(1, min(p, 4))
        dens = rng.uniform(0.2, 1.0)
        sets = [sum(1 << x for x in range(N) if rng.random() < dens) for _ in range(p)]
        total = sum(bin(a).count("1") for a in sets)
        w = total / (p * N) * rng.uniform(0.6, 1.0)
        if w * p <= q or 1 - q / (w * p) <= 0.01:
            continue
        alpha = rng.uniform(0.01, 1 - q / (w * p))
        return IntersectionInstance(N=N, sets=sets, q_target=q, w=w, alpha=alpha)
