import random

import pytest

from tripartite.bounds import kst_bound
from tripartite.constructions import Construction2Params, construction1, construction2
from tripartite.errors import BadQ, NotFound
from tripartite.finder import (
    IntersectionInstance, exhaustive_max_intersection, extract_k3s, large_intersection,
    max_intersection, run_pipeline, triangle_links,
)
from tripartite.graph import TripartiteGraph, count_triangles, verify_certificate

from conftest import random_intersection_instance, random_tripartite


def test_triangle_links_examples():
    inst = triangle_links(TripartiteGraph.complete(2))
    assert inst.N == 4 and inst.sets == [0b1111, 0b1111]
    assert triangle_links(TripartiteGraph.empty(3)).sets == [0, 0, 0]
    G = construction1(2)
    inst = triangle_links(G)
    g0 = {x * 7 + y for x, y in G.l23.edges()}
    for link in inst.sets:
        assert {b for b in range(49) if link >> b & 1} == g0


@pytest.mark.parametrize("seed", range(20))
def test_links_sum_to_triangle_count(seed):
    G = random_tripartite(2 + seed % 7, 0.5, seed)
    assert triangle_links(G).total_size() == count_triangles(G)


def test_large_intersection_examples():
    inst = IntersectionInstance(N=4, sets=[0b1111] * 3, q_target=2, w=1.0, alpha=0.5)
    wit = large_intersection(inst)
    assert wit.intersection_size == 4
    assert wit.guarantee == pytest.approx(1.0)
    assert wit.meets_guarantee
    # A_1={1,2}, A_2={2,3}, A_3={2} over X={1,2,3}; bit x-1 encodes element x
    inst = IntersectionInstance(N=3, sets=[0b011, 0b110, 0b010], q_target=2)
    wit = large_intersection(inst)
    assert wit.indices == (0, 1) and wit.intersection_size == 1
    assert wit.guarantee is None and not wit.guarantee_applies
    with pytest.raises(BadQ):
        max_intersection([1, 2], 3)


def test_branch_and_bound_matches_exhaustive():
    rng = random.Random(5)
    for _ in range(300):
        p = rng.randint(1, 12)
        q = rng.randint(1, p)
        N = rng.randint(1, 40)
        sets = [rng.getrandbits(N) for _ in range(p)]
        idx, common = max_intersection(sets, q)
        ex_idx, ex_size = exhaustive_max_intersection(sets, q)
        assert idx == ex_idx
        assert bin(common).count("1") == ex_size


def test_parallel_branch_and_bound_agrees():
    rng = random.Random(8)
    for _ in range(5):
        sets = [rng.getrandbits(30) for _ in range(9)]
        assert max_intersection(sets, 3, workers=2) == max_intersection(sets, 3)


def test_guarantee_on_random_instances():
    rng = random.Random(11)
    for _ in range(200):
        inst = random_intersection_instance(rng, p_max=12)
        assert inst.hypotheses()["hold"]
        wit = large_intersection(inst)
        assert wit.guarantee_applies
        assert wit.meets_guarantee


def test_extract_complete_graph():
    G = TripartiteGraph.complete(3)
    trace = run_pipeline(G, 2, 1.0)
    assert not trace.fallback
    assert verify_certificate(G, trace.certificate)


@pytest.mark.parametrize("G", [construction1(2), construction2(Construction2Params(2, 3))],
                         ids=["construction1", "construction2"])
def test_extract_on_free_constructions(G):
    with pytest.raises(NotFound):
        extract_k3s(G, 2, 1.0)


def test_extract_dense_random():
    G = random_tripartite(40, 0.95, 2024)
    cert = extract_k3s(G, 2, 1.0)
    assert verify_certificate(G, cert)


def _fallback_graph():
    # V1 vertices 0,1 share a C8 link on {2..5} x {2..5} (the largest
    # intersection, but C4-free); V1 vertices 2,3 share a K2(2) link on {0,1} x {0,1}.
    c8 = [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4), (4, 5), (5, 5), (5, 2)]
    big = [(i, j) for i in (0, 1) for j in range(2, 6)]
    small = [(i, j) for i in (2, 3) for j in (0, 1)]
    return TripartiteGraph.from_edges(6, big + small, big + small,
                                      c8 + [(0, 0), (0, 1), (1, 0), (1, 1)])


def test_fallback_is_tagged():
    G = _fallback_graph()
    trace = run_pipeline(G, 2, 1.0)
    assert trace.indices == (0, 1) and trace.intersection_size == 8
    assert trace.fallback
    assert trace.certificate.parts == ((2, 3), (0, 1), (0, 1))
    assert trace.certificate.fallback
    assert trace.certificate.to_json().endswith(',"fallback":true}')
    assert verify_certificate(G, trace.certificate)


def test_no_fallback_when_best_links_hold_k22():
    G = _fallback_graph().with_edge(2, 3, 2, 4)  # adds a C4 to the C8 link
    trace = run_pipeline(G, 2, 1.0)
    assert not trace.fallback
    assert trace.certificate.parts[0] == (0, 1)


def test_trace_json_keys():
    trace = run_pipeline(construction1(2), 2, 1.0)
    d = trace.to_dict()
    for key in ("degree_margin", "triangles", "indices", "intersection_size", "guarantee",
                "kst_bound", "fallback"):
        assert key in d
    assert d["kst_bound"] == pytest.approx(kst_bound(7, 2))
    assert d["found"] is False
