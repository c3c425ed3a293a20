import json
from itertools import product

import pytest

from tripartite.bounds import kst_bound
from tripartite.constructions import construction1_from
from tripartite.errors import TooLarge
from tripartite.formats import decode
from tripartite.graph import BipartiteGraph, TripartiteGraph, find_k2s, find_k3s, naive_k3s
from tripartite.plane import build_plane, incidence_graph
from tripartite.search import (
    append_result, brute_force_zarankiewicz, extremal_min_degree, local_search_lower_bound,
    random_crosscheck,
)

# frozen from the exhaustive search (n = 1, 2, 3; s = 2)
EXTREMAL_GOLDEN = {1: 2, 2: 3, 3: 5}
# z(n, 2) for n = 1..8
ZARANKIEWICZ_GOLDEN = [1, 3, 6, 9, 12, 16, 21, 24]


def _z_by_enumeration(n):
    best = 0
    for mask in range(1 << (n * n)):
        rows = tuple((mask >> (i * n)) & ((1 << n) - 1) for i in range(n))
        B = BipartiteGraph(n, n, rows)
        e = B.num_edges
        if e > best and (n < 2 or find_k2s(B, 2).free):
            best = e
    return best


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_zarankiewicz_matches_enumeration(n):
    assert brute_force_zarankiewicz(n, 2).optimum == _z_by_enumeration(n)


def test_zarankiewicz_examples():
    assert brute_force_zarankiewicz(2, 2).optimum == 3
    r3 = brute_force_zarankiewicz(3, 2)
    assert r3.optimum == 6
    # the 6-edge witness is a 6-cycle: 2-regular and connected
    assert set(r3.witness.left_degrees()) == set(r3.witness.right_degrees()) == {2}
    r7 = brute_force_zarankiewicz(7, 2)
    assert r7.optimum == 21 == incidence_graph(build_plane(2)).num_edges
    assert r7.optimum <= kst_bound(7, 2)


def test_zarankiewicz_sequence():
    values = [brute_force_zarankiewicz(n, 2).optimum for n in range(1, 9)]
    assert values == ZARANKIEWICZ_GOLDEN
    assert values == sorted(values)
    for n, z in enumerate(values, start=1):
        if n >= 2:
            assert z <= kst_bound(n, 2)


@pytest.mark.parametrize("n", range(2, 8))
def test_zarankiewicz_witness_is_free(n):
    r = brute_force_zarankiewicz(n, 2)
    assert r.exhaustive
    assert r.witness.num_edges == r.optimum
    assert find_k2s(r.witness, 2).free


def test_zarankiewicz_s3():
    r = brute_force_zarankiewicz(4, 3)
    assert find_k2s(r.witness, 3).free
    # K_{4,4} minus a perfect matching is K2(3)-free with 12 edges
    assert r.optimum >= 12
    assert r.optimum <= kst_bound(4, 3)


def test_zarankiewicz_limits():
    with pytest.raises(TooLarge):
        brute_force_zarankiewicz(9, 2)


def test_extremal_n1():
    r = extremal_min_degree(1, 2)
    assert r.optimum == 2
    assert r.witness == TripartiteGraph.complete(1)


def test_extremal_n2_matches_enumeration():
    best = 0
    cells = [(k, i, j) for k in range(3) for i in range(2) for j in range(2)]
    for mask in range(1 << 12):
        layers = [[], [], []]
        for b, (k, i, j) in enumerate(cells):
            if mask >> b & 1:
                layers[k].append((i, j))
        G = TripartiteGraph.from_edges(2, *layers)
        if G.min_degree() > best and naive_k3s(G, 2) is None:
            best = G.min_degree()
    assert extremal_min_degree(2, 2).optimum == best == EXTREMAL_GOLDEN[2]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_extremal_golden_and_witness(n):
    r = extremal_min_degree(n, 2)
    assert r.exhaustive
    assert r.optimum == EXTREMAL_GOLDEN[n]
    assert r.witness.min_degree() == r.optimum
    assert find_k3s(r.witness, 2).free if n >= 2 else True


@pytest.mark.parametrize("n", [2, 3, 4])
def test_extremal_feasible_point(n):
    # V1 complete to V2, V3 and a perfect matching between V2 and V3
    matching = BipartiteGraph.from_edges(n, n, [(i, i) for i in range(n)])
    G = construction1_from(matching)
    assert G.min_degree() == n + 1
    assert find_k3s(G, 2).free
    if n <= 3:
        assert extremal_min_degree(n, 2).optimum >= n + 1


def test_extremal_limits():
    with pytest.raises(TooLarge):
        extremal_min_degree(4, 2)


def test_random_crosscheck_small():
    rep = random_crosscheck(2, 2, EXTREMAL_GOLDEN[2], 20_000, seed=1)
    assert rep["violations"] == 0
    assert rep["checked"] > 0
    # and it does flag an optimum that is set too low
    assert random_crosscheck(2, 2, 2, 20_000, seed=1)["violations"] > 0


def test_local_search_from_construction():
    r = local_search_lower_bound(7, 2, seed=0, budget=300)
    assert not r.exhaustive
    assert r.optimum >= 10
    assert find_k3s(r.witness, 2).free


def test_local_search_random_start():
    r = local_search_lower_bound(5, 2, seed=0, budget=1500)
    assert find_k3s(r.witness, 2).free
    assert r.optimum == r.witness.min_degree()
    assert r.optimum >= 5 + 1  # never below the matching-based start


def test_local_search_zero_budget_returns_start():
    from tripartite.constructions import construction1

    r = local_search_lower_bound(7, 2, seed=3, budget=0)
    assert r.witness == construction1(2)
    assert r.nodes == 0


def test_local_search_is_seeded():
    a = local_search_lower_bound(5, 2, seed=4, budget=400)
    b = local_search_lower_bound(5, 2, seed=4, budget=400)
    assert a.witness == b.witness and a.nodes == b.nodes


def test_results_file_is_append_only(tmp_path):
    path = tmp_path / "results.jsonl"
    append_result(path, brute_force_zarankiewicz(3, 2))
    append_result(path, extremal_min_degree(2, 2))
    lines = path.read_text().splitlines()
    assert len(lines) == 2
    rec = json.loads(lines[0])
    assert list(rec) == ["n", "s", "optimum", "exhaustive", "nodes", "witness_tg3_or_bg2"]
    assert decode(rec["witness_tg3_or_bg2"]).num_edges == 6
    assert decode(json.loads(lines[1])["witness_tg3_or_bg2"]).min_degree() == 3
