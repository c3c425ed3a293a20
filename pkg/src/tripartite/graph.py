"""
Bipartite and tripartite graphs on bitset adjacency.

Adjacency rows are Python ints used as bitsets: bit ``j`` of ``rows[i]`` is
set when left vertex ``i`` is joined to right vertex ``j``.  Neighbourhood
intersections are single ``&`` operations, which is what the subgraph
detectors and the triangle counter are built on.

A tripartite graph ``G_3(n)`` stores the three layers (1,2), (1,3), (2,3) as
bipartite graphs whose left side is the lower-numbered part.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterator, Optional

from .errors import BadS

LAYERS = ((1, 2), (1, 3), (2, 3))


def popcount(x: int) -> int:
    return x.bit_count()


def bits(x: int) -> Iterator[int]:
    """Indices of set bits in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def lowest_bits(x: int, k: int) -> list[int]:
    out = []
    for b in bits(x):
        if len(out) == k:
            break
        out.append(b)
    return out


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class BipartiteGraph:
    nl: int
    nr: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.nl:
            raise ValueError("need one adjacency row per left vertex")
        full = (1 << self.nr) - 1
        if any(r & ~full for r in self.rows):
            raise ValueError("adjacency row refers to a right vertex out of range")

    @classmethod
    def from_edges(cls, nl: int, nr: int, edges) -> "BipartiteGraph":
        rows = [0] * nl
        for i, j in edges:
            i, j = int(i), int(j)
            if not (0 <= i < nl and 0 <= j < nr):
                raise ValueError(f"edge ({i}, {j}) out of range")
            rows[i] |= 1 << j
        return cls(nl, nr, tuple(rows))

    @classmethod
    def complete(cls, nl: int, nr: int) -> "BipartiteGraph":
        return cls(nl, nr, ((1 << nr) - 1,) * nl)

    @classmethod
    def empty(cls, nl: int, nr: int) -> "BipartiteGraph":
        return cls(nl, nr, (0,) * nl)

    @cached_property
    def cols(self) -> tuple[int, ...]:
        cols = [0] * self.nr
        for i, r in enumerate(self.rows):
            for j in bits(r):
                cols[j] |= 1 << i
        return tuple(cols)

    def transpose(self) -> "BipartiteGraph":
        return BipartiteGraph(self.nr, self.nl, self.cols)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, r in enumerate(self.rows) for j in bits(r)]

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.rows)

    def left_degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def right_degrees(self) -> list[int]:
        return [popcount(c) for c in self.cols]

    def min_degree(self) -> int:
        return min(self.left_degrees() + self.right_degrees())

    def with_edge(self, i: int, j: int, present: bool = True) -> "BipartiteGraph":
        rows = list(self.rows)
        if present:
            rows[i] |= 1 << j
        else:
            rows[i] &= ~(1 << j)
        return BipartiteGraph(self.nl, self.nr, tuple(rows))

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.nl, self.nr, self.rows) == (other.nl, other.nr, other.rows)

    def __hash__(self):
        return hash((self.nl, self.nr, self.rows))

    def __repr__(self):
        return f"BipartiteGraph(nl={self.nl}, nr={self.nr}, edges={self.num_edges})"


@dataclass(frozen=True)
class TripartiteGraph:
    n: int
    l12: BipartiteGraph
    l13: BipartiteGraph
    l23: BipartiteGraph

    def __post_init__(self):
        for lay in (self.l12, self.l13, self.l23):
            if lay.nl != self.n or lay.nr != self.n:
                raise ValueError("every layer must be n x n")

    @classmethod
    def from_edges(cls, n: int, e12=(), e13=(), e23=()) -> "TripartiteGraph":
        return cls(n, BipartiteGraph.from_edges(n, n, e12),
                   BipartiteGraph.from_edges(n, n, e13),
                   BipartiteGraph.from_edges(n, n, e23))

    @classmethod
    def complete(cls, n: int) -> "TripartiteGraph":
        k = BipartiteGraph.complete(n, n)
        return cls(n, k, k, k)

    @classmethod
    def empty(cls, n: int) -> "TripartiteGraph":
        e = BipartiteGraph.empty(n, n)
        return cls(n, e, e, e)

    def layer(self, a: int, b: int) -> BipartiteGraph:
        """Layer between parts a and b; transposed when a > b."""
        if (a, b) == (1, 2):
            return self.l12
        if (a, b) == (1, 3):
            return self.l13
        if (a, b) == (2, 3):
            return self.l23
        if (b, a) in LAYERS:
            return self.layer(b, a).transpose()
        raise ValueError(f"no layer between parts {a} and {b}")

    def neighbors(self, part: int, v: int) -> dict[int, int]:
        """Neighbourhood bitsets of vertex v of ``part``, keyed by other part."""
        if part == 1:
            return {2: self.l12.rows[v], 3: self.l13.rows[v]}
        if part == 2:
            return {1: self.l12.cols[v], 3: self.l23.rows[v]}
        if part == 3:
            return {1: self.l13.cols[v], 2: self.l23.cols[v]}
        raise ValueError(f"bad part {part}")

    def degrees(self) -> dict[int, list[int]]:
        d12l, d12r = self.l12.left_degrees(), self.l12.right_degrees()
        d13l, d13r = self.l13.left_degrees(), self.l13.right_degrees()
        d23l, d23r = self.l23.left_degrees(), self.l23.right_degrees()
        return {
            1: [a + b for a, b in zip(d12l, d13l)],
            2: [a + b for a, b in zip(d12r, d23l)],
            3: [a + b for a, b in zip(d13r, d23r)],
        }

    def min_degree(self) -> int:
        return min(min(d) for d in self.degrees().values())

    @property
    def num_edges(self) -> int:
        return self.l12.num_edges + self.l13.num_edges + self.l23.num_edges

    def edges(self) -> dict[tuple[int, int], list[tuple[int, int]]]:
        return {(1, 2): self.l12.edges(), (1, 3): self.l13.edges(), (2, 3): self.l23.edges()}

    def with_edge(self, a: int, b: int, i: int, j: int, present: bool = True) -> "TripartiteGraph":
        """Copy with edge (i in part a, j in part b) added or removed; a < b."""
        layers = {(1, 2): self.l12, (1, 3): self.l13, (2, 3): self.l23}
        layers[(a, b)] = layers[(a, b)].with_edge(i, j, present)
        return TripartiteGraph(self.n, layers[(1, 2)], layers[(1, 3)], layers[(2, 3)])

    def relabel_parts(self, order: tuple[int, int, int]) -> "TripartiteGraph":
        """Graph whose part k is this graph's part ``order[k-1]``."""
        a, b, c = order
        return TripartiteGraph(self.n, self.layer(a, b), self.layer(a, c), self.layer(b, c))

    def __repr__(self):
        return f"TripartiteGraph(n={self.n}, edges={self.num_edges})"


def min_degree(G: TripartiteGraph) -> int:
    return G.min_degree()


def count_triangles(G: TripartiteGraph) -> int:
    """Exact number of triangles, iterating over the sparsest layer's edges."""
    sizes = {(1, 2): G.l12.num_edges, (1, 3): G.l13.num_edges, (2, 3): G.l23.num_edges}
    layer = min(LAYERS, key=lambda k: sizes[k])
    total = 0
    if layer == (1, 2):
        for a, row in enumerate(G.l12.rows):
            n3 = G.l13.rows[a]
            for b in bits(row):
                total += popcount(n3 & G.l23.rows[b])
    elif layer == (1, 3):
        cols23 = G.l23.cols
        for a, row in enumerate(G.l13.rows):
            n2 = G.l12.rows[a]
            for c in bits(row):
                total += popcount(n2 & cols23[c])
    else:
        cols12, cols13 = G.l12.cols, G.l13.cols
        for b, row in enumerate(G.l23.rows):
            n1 = cols12[b]
            for c in bits(row):
                total += popcount(n1 & cols13[c])
    return total


# -- certificates ------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """Embedding witness: ``parts`` holds s vertex indices per part."""

    kind: str  # "K2s" or "K3s"
    s: int
    parts: tuple[tuple[int, ...], ...]
    fallback: bool = False

    def to_json(self) -> str:
        rec = {"kind": self.kind, "s": self.s, "parts": [list(p) for p in self.parts]}
        if self.fallback:
            rec["fallback"] = True
        return json.dumps(rec, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        rec = json.loads(text)
        return cls(rec["kind"], int(rec["s"]), tuple(tuple(int(v) for v in p) for p in rec["parts"]),
                   bool(rec.get("fallback", False)))


@dataclass(frozen=True)
class FreenessReport:
    kind: str
    s: int
    exhaustive: bool = True
    witness: Optional[Certificate] = None
    nodes: int = field(default=0, compare=False)

    @property
    def free(self) -> bool:
        return self.exhaustive and self.witness is None

    def to_dict(self) -> dict:
        return {
            "target": {"kind": self.kind, "s": self.s},
            "exhaustive": self.exhaustive,
            "free": self.free,
            "witness": None if self.witness is None else json.loads(self.witness.to_json()),
        }


def verify_certificate(G, cert: Certificate) -> bool:
    """True iff the certificate is well-formed and every cross pair is an edge of G."""
    try:
        if isinstance(G, TripartiteGraph):
            if cert.kind != "K3s" or len(cert.parts) != 3:
                return False
            sizes = (G.n, G.n, G.n)
        elif isinstance(G, BipartiteGraph):
            if cert.kind != "K2s" or len(cert.parts) != 2:
                return False
            sizes = (G.nl, G.nr)
        else:
            return False
        for part, size in zip(cert.parts, sizes):
            if len(part) != cert.s or cert.s < 1:
                return False
            if any(not isinstance(v, int) or not 0 <= v < size for v in part):
                return False
            if any(a >= b for a, b in zip(part, part[1:])):
                return False
        if isinstance(G, BipartiteGraph):
            pairs = [(G, cert.parts[0], cert.parts[1])]
        else:
            p1, p2, p3 = cert.parts
            pairs = [(G.l12, p1, p2), (G.l13, p1, p3), (G.l23, p2, p3)]
        for lay, left, right in pairs:
            need = mask_of(right)
            if any(lay.rows[u] & need != need for u in left):
                return False
        return True
    except (TypeError, IndexError):
        return False


# -- K2(s) detection -----------------------------------------------------------

def _first_left_set(rows, left_mask: int, right_mask: int, s: int, counter=None):
    """Lexicographically first s-subset L of left_mask with |common(L) & right_mask| >= s.

    Returns (L, common) or None.  Subsets are extended in increasing order and
    a prefix is abandoned as soon as its common neighbourhood has < s vertices.
    """
    cand = [v for v in bits(left_mask) if popcount(rows[v] & right_mask) >= s]
    if len(cand) < s:
        return None
    chosen: list[int] = []

    def extend(start: int, common: int):
        need = s - len(chosen)
        if need == 0:
            return common
        for idx in range(start, len(cand) - need + 1):
            if counter is not None:
                counter[0] += 1
            v = cand[idx]
            c = common & rows[v]
            if popcount(c) >= s:
                chosen.append(v)
                found = extend(idx + 1, c)
                if found is not None:
                    return found
                chosen.pop()
        return None

    common = extend(0, right_mask)
    if common is None:
        return None
    return tuple(chosen), common


def _k2s_in(rows, cols, left_mask: int, right_mask: int, s: int, counter=None):
    """Smallest (L, R) K2(s) inside the masked sub-bigraph, ordered by L then R.

    Enumerates s-subsets of the smaller masked side.
    """
    if popcount(left_mask) <= popcount(right_mask):
        hit = _first_left_set(rows, left_mask, right_mask, s, counter)
        if hit is None:
            return None
        left, common = hit
        return left, tuple(lowest_bits(common, s))
    # Enumerate right subsets; each one with a large enough common left
    # neighbourhood proposes its s smallest common left vertices.
    best = None
    cand = [v for v in bits(right_mask) if popcount(cols[v] & left_mask) >= s]
    for combo in _subsets_with_common(cols, cand, left_mask, s, counter):
        left = tuple(lowest_bits(combo, s))
        if best is None or left < best:
            best = left
    if best is None:
        return None
    common = right_mask
    for u in best:
        common &= rows[u]
    return best, tuple(lowest_bits(common, s))


def _subsets_with_common(vecs, cand, start_mask, s, counter):
    """Yield common(T) for every s-subset T of cand with |common(T)| >= s."""
    stack = [(0, start_mask, 0)]
    while stack:
        start, common, depth = stack.pop()
        if depth == s:
            yield common
            continue
        for idx in range(len(cand) - (s - depth), start - 1, -1):
            if counter is not None:
                counter[0] += 1
            c = common & vecs[cand[idx]]
            if popcount(c) >= s:
                stack.append((idx + 1, c, depth + 1))


def find_k2s(B: BipartiteGraph, s: int) -> FreenessReport:
    """Exhaustive K2(s) search; the witness is the smallest by left set, then right set."""
    if s < 2 or s > min(B.nl, B.nr):
        raise BadS(f"s={s} outside [2, {min(B.nl, B.nr)}]")
    counter = [0]
    hit = _k2s_in(B.rows, B.cols, (1 << B.nl) - 1, (1 << B.nr) - 1, s, counter)
    witness = None if hit is None else Certificate("K2s", s, hit)
    return FreenessReport("K2s", s, True, witness, counter[0])


# -- K3(s) detection -----------------------------------------------------------

def _k3s_search(G: TripartiteGraph, s: int, first: Optional[int] = None, counter=None):
    """Smallest (S1, S2, S3) K3(s); restricted to S1[0] == first when given."""
    n = G.n
    r12, r13 = G.l12.rows, G.l13.rows
    r23, c23 = G.l23.rows, G.l23.cols
    cand = [v for v in range(n) if popcount(r12[v]) >= s and popcount(r13[v]) >= s]
    chosen: list[int] = []

    def extend(start: int, n2: int, n3: int):
        need = s - len(chosen)
        if need == 0:
            hit = _k2s_in(r23, c23, n2, n3, s, counter)
            if hit is None:
                return None
            return (tuple(chosen),) + hit
        stop = len(cand) - need + 1
        if first is not None and not chosen:
            indices = [cand.index(first)] if first in cand else []
        else:
            indices = range(start, stop)
        for idx in indices:
            if idx >= stop:
                break
            if counter is not None:
                counter[0] += 1
            v = cand[idx]
            a, b = n2 & r12[v], n3 & r13[v]
            if popcount(a) >= s and popcount(b) >= s:
                chosen.append(v)
                found = extend(idx + 1, a, b)
                if found is not None:
                    return found
                chosen.pop()
        return None

    full = (1 << n) - 1
    return extend(0, full, full)


def _k3s_branch(args):
    G, s, first = args
    counter = [0]
    return _k3s_search(G, s, first, counter), counter[0]


def find_k3s(G: TripartiteGraph, s: int, workers: int = 1) -> FreenessReport:
    """Exhaustive K3(s) search with a deterministic (lexicographically first) witness.

    With ``workers > 1`` the first vertex of S1 is farmed out to processes and
    the smallest branch that produced a witness wins, so the answer does not
    depend on the worker count.
    """
    if s < 2 or s > G.n:
        raise BadS(f"s={s} outside [2, {G.n}]")
    if workers <= 1:
        counter = [0]
        hit = _k3s_search(G, s, None, counter)
        nodes = counter[0]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_k3s_branch, [(G, s, v) for v in range(G.n)]))
        found = [r for r, _ in results if r is not None]
        hit = min(found) if found else None
        nodes = sum(c for _, c in results)
    witness = None if hit is None else Certificate("K3s", s, hit)
    return FreenessReport("K3s", s, True, witness, nodes)


def _k3s_through(rPQ, rPR, rQR, nP, u, v, s):
    """K3(s) using vertex u of part P and v of part Q, given u ~ v.

    rPQ[x] is the Q-neighbourhood of x in P, and so on.  Returns the vertex
    sets (SP, SQ, SR) or None.
    """
    col_v = [x for x in range(nP) if x != u and rPQ[x] >> v & 1]
    for rest in combinations(col_v, s - 1):
        SP = tuple(sorted((u,) + rest))
        nq, nr = -1, -1
        for x in SP:
            nq &= rPQ[x]
            nr &= rPR[x]
        if popcount(nr) < s:
            continue
        others_q = [y for y in bits(nq) if y != v]
        for restq in combinations(others_q, s - 1):
            SQ = tuple(sorted((v,) + restq))
            common = nr
            for y in SQ:
                common &= rQR[y]
            if popcount(common) >= s:
                return SP, SQ, tuple(lowest_bits(common, s))
    return None


def k3s_through_edge(G: TripartiteGraph, a: int, b: int, i: int, j: int, s: int):
    """A K3(s) of G containing the edge (i in part a, j in part b), or None."""
    if not G.layer(a, b).has_edge(i, j):
        return None
    c = 6 - a - b
    hit = _k3s_through(G.layer(a, b).rows, G.layer(a, c).rows, G.layer(b, c).rows, G.n, i, j, s)
    if hit is None:
        return None
    parts = {a: hit[0], b: hit[1], c: hit[2]}
    return Certificate("K3s", s, (parts[1], parts[2], parts[3]))


def naive_k3s(G: TripartiteGraph, s: int):
    """Reference enumeration over all (C(n,s))^3 triples of vertex sets."""
    subsets = list(combinations(range(G.n), s))
    for S1 in subsets:
        for S2 in subsets:
            for S3 in subsets:
                cert = Certificate("K3s", s, (S1, S2, S3))
                if verify_certificate(G, cert):
                    return cert
    return None
