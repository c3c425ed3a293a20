import math
from itertools import product

import pytest

from tripartite.constructions import (
    Construction2Params, audit, check_x2_size, construction1, construction1_from, construction2,
    construction2_blocks, construction2_from, count_block_five_cycles, count_five_cycles,
    five_cycles, generalized_construction, plane_graph, structural_freeness, without_vertex_edges,
)
from tripartite.errors import BadPartition, BaseNotFree, NotPrimePower, SizeMismatch
from tripartite.graph import BipartiteGraph, TripartiteGraph, count_triangles, find_k3s

from conftest import random_tripartite


def _x2_choices(n):
    lo, hi = math.isqrt(n - 1) + 1, n // 2
    return sorted({lo, (lo + hi) // 2, hi})


@pytest.mark.parametrize("q,n,edges,delta", [(2, 7, 119, 10), (3, 13, 390, 17)])
def test_construction1_counts(q, n, edges, delta):
    G = construction1(q)
    assert G.n == n
    assert G.num_edges == edges == 2 * n * n + n * (q + 1)
    assert G.min_degree() == delta == n + q + 1


@pytest.mark.parametrize("q", [2, 3, 4])
def test_construction1_is_k32_free(q):
    assert find_k3s(construction1(q), 2).free


def test_construction1_not_prime_power():
    with pytest.raises(NotPrimePower):
        construction1(6)


def test_construction2_blocks_and_degrees():
    params = Construction2Params(2, 3)
    G = construction2(params)
    blocks = construction2_blocks(7, 3, params.partition_seed)
    assert [len(blocks[k]) for k in ("X2", "Y2", "X3", "Y3")] == [3, 4, 4, 3]
    deg = G.degrees()
    for v in blocks["X3"]:
        assert deg[3][v] == 7 + 4
    for v in blocks["X2"]:
        assert deg[2][v] == 7 + 3
    assert G.min_degree() == 10
    assert find_k3s(G, 2).free


def test_construction2_has_no_x2_x3_edges():
    G = construction2(Construction2Params(3, 5, 4, 9))
    blocks = construction2_blocks(13, 5, 4)
    for a, b in product(blocks["X2"], blocks["X3"]):
        assert not G.l23.has_edge(a, b)


def test_construction2_bad_partition():
    with pytest.raises(BadPartition):
        construction2(Construction2Params(2, 2))
    with pytest.raises(BadPartition):
        construction2(Construction2Params(2, 4))
    check_x2_size(7, 3)


def test_construction2_seeds_are_reproducible():
    a = construction2(Construction2Params(3, 5, 11, 12))
    b = construction2(Construction2Params(3, 5, 11, 12))
    c = construction2(Construction2Params(3, 5, 13, 12))
    assert a == b
    assert a != c


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_construction2_family_audits(q):
    n = q * q + q + 1
    for x2 in _x2_choices(n):
        G = construction2(Construction2Params(q, x2, partition_seed=x2, base_assignment_seed=q))
        rep = audit(G, 2)
        assert rep.excess >= math.isqrt(n - 1) + 1
        assert rep.freeness.free
        assert structural_freeness(G, construction2_blocks(n, x2, x2))


def test_degenerate_construction2_is_construction1():
    for q in (2, 3):
        base = plane_graph(q)
        G2 = construction2_from(base, 0, None, None, strict=False)
        # part 3 of the blow-up plays the role of V1 in Construction 1
        assert G2.relabel_parts((3, 1, 2)) == construction1(q)


def test_generalized_construction_examples(fano):
    assert generalized_construction(fano, 1, 2) == construction1(2)
    matching = BipartiteGraph.from_edges(5, 5, [(i, i) for i in range(5)])
    G = generalized_construction(matching, 1, 2)
    assert G.min_degree() == 6
    assert find_k3s(G, 2).free
    with pytest.raises(BaseNotFree):
        generalized_construction(BipartiteGraph.complete(3, 3), 1, 2)
    with pytest.raises(SizeMismatch):
        generalized_construction(BipartiteGraph.complete(2, 3), 1, 2)


def test_generalized_construction_variant2_s3():
    # the PG(2,2) graph is K2(2)-free, hence K2(3)-free; K3(3)-freeness follows
    G = generalized_construction(plane_graph(2), 2, 3, x2_size=3)
    assert find_k3s(G, 3).free
    assert G.min_degree() >= 7 + 3


def test_audit_examples():
    rep = audit(construction1(2), 2)
    assert rep.excess == 3 and rep.excess >= math.sqrt(7)
    assert rep.freeness.free
    assert rep.triangle_count == 147
    assert rep.bound_comparisons["excess_ge_sqrt_n"]
    rep = audit(TripartiteGraph.complete(2), 2)
    assert rep.excess == 2 and not rep.freeness.free
    assert rep.freeness.witness is not None
    rep = audit(TripartiteGraph.empty(3), 2)
    assert rep.excess == -3 and rep.freeness.free


def _brute_force_five_cycles(G):
    # independent count: closed walks on 5 distinct vertices / (2 * 5)
    n = G.n
    adj = [[False] * (3 * n) for _ in range(3 * n)]
    for (a, b), edges in G.edges().items():
        for i, j in edges:
            u, v = (a - 1) * n + i, (b - 1) * n + j
            adj[u][v] = adj[v][u] = True
    N = 3 * n
    walks = 0
    for v0 in range(N):
        for v1 in range(N):
            if not adj[v0][v1]:
                continue
            for v2 in range(N):
                if not adj[v1][v2] or v2 == v0:
                    continue
                for v3 in range(N):
                    if not adj[v2][v3] or v3 in (v0, v1):
                        continue
                    for v4 in range(N):
                        if adj[v3][v4] and adj[v4][v0] and v4 not in (v0, v1, v2):
                            walks += 1
    return walks // 10


@pytest.mark.parametrize("seed", range(4))
def test_five_cycle_count_matches_brute_force(seed):
    G = random_tripartite(3, 0.6, seed)
    assert count_five_cycles(G) == _brute_force_five_cycles(G)


def test_five_cycles_after_removing_sparse_base():
    # Deleting the o(n^2) base edges leaves Construction 1 bipartite but keeps
    # the full C5 blow-up of Construction 2.
    empty = BipartiteGraph.empty(7, 7)
    assert count_five_cycles(construction1_from(empty)) == 0
    skeleton = construction2_from(empty, 3)
    assert count_five_cycles(skeleton) == 7 * 3 * 3 * 4 * 4


def test_construction2_block_cycles_survive_vertex_deletion():
    G = construction2(Construction2Params(2, 3))
    blocks = construction2_blocks(7, 3, 0)
    assert count_block_five_cycles(G, blocks) == 7 * 3 * 3 * 4 * 4
    for part, v in product((1, 2, 3), range(7)):
        H = without_vertex_edges(G, part, v)
        assert count_block_five_cycles(H, blocks) > 0
    # Construction 1 has only three blocks, so no 5-cycle meets five of them
    G1 = construction1(2)
    assert all(len({u // 7 for u in cyc}) <= 3 for cyc in five_cycles(G1))


def test_without_vertex_edges():
    G = TripartiteGraph.complete(3)
    H = without_vertex_edges(G, 2, 1)
    assert H.degrees()[2][1] == 0
    assert H.num_edges == G.num_edges - 6
    assert count_triangles(H) == 27 - 9
