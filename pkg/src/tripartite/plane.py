"""Desarguesian projective planes PG(2, q) and their point-line incidence graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .gf import FiniteField, FieldElem, field_of_order
from .graph import BipartiteGraph


def _normalized_triples(field: FiniteField):
    one, zero = field.one, field.zero
    els = field.elements()
    triples = [(one, b, c) for b in els for c in els]
    triples += [(zero, one, c) for c in els]
    triples.append((zero, zero, one))
    return sorted(triples, key=lambda t: tuple(e.coeffs for e in t))


def _dot(field: FiniteField, u, v) -> FieldElem:
    acc = field.zero
    for a, b in zip(u, v):
        acc = field.add(acc, field.mul(a, b))
    return acc


@dataclass(frozen=True)
class ProjectivePlane:
    q: int
    field: FiniteField
    points: tuple
    lines: tuple
    incidence: tuple  # incidence[j] = sorted point indices on line j

    @property
    def size(self) -> int:
        return len(self.points)

    def lines_through(self) -> list[list[int]]:
        """Dual incidence: for each point, the sorted indices of lines through it."""
        out = [[] for _ in self.points]
        for j, pts in enumerate(self.incidence):
            for i in pts:
                out[i].append(j)
        return out

    def dual(self) -> "ProjectivePlane":
        return ProjectivePlane(self.q, self.field, self.lines, self.points,
                               tuple(tuple(x) for x in self.lines_through()))


def build_plane(q: int) -> ProjectivePlane:
    """PG(2, q) with canonically ordered homogeneous coordinates.

    Points and lines are the nonzero triples over GF(q) whose first nonzero
    coordinate is 1, sorted by coefficient vectors; a point lies on a line
    iff their dot product vanishes.
    """
    field = field_of_order(q)
    triples = _normalized_triples(field)
    incidence = tuple(
        tuple(i for i, pt in enumerate(triples) if not _dot(field, pt, ln))
        for ln in triples
    )
    return ProjectivePlane(q, field, tuple(triples), tuple(triples), incidence)


def check_plane_axioms(plane: ProjectivePlane) -> list[str]:
    """Exhaustively test the plane axioms; returns a list of violations."""
    q = plane.q
    n = q * q + q + 1
    problems = []
    if len(plane.points) != n or len(plane.lines) != n:
        problems.append(f"expected {n} points and lines")
    for j, pts in enumerate(plane.incidence):
        if len(pts) != q + 1:
            problems.append(f"line {j} has {len(pts)} points")
    for i, lns in enumerate(plane.lines_through()):
        if len(lns) != q + 1:
            problems.append(f"point {i} lies on {len(lns)} lines")
    point_sets = [frozenset(pts) for pts in plane.incidence]
    line_sets = [frozenset(lns) for lns in plane.lines_through()]
    for a, b in combinations(range(len(line_sets)), 2):
        common = len(line_sets[a] & line_sets[b])
        if common != 1:
            problems.append(f"points {a},{b} share {common} lines")
    for a, b in combinations(range(len(point_sets)), 2):
        common = len(point_sets[a] & point_sets[b])
        if common != 1:
            problems.append(f"lines {a},{b} share {common} points")
    return problems


def incidence_graph(plane: ProjectivePlane) -> BipartiteGraph:
    """Points on the left, lines on the right; C4-free and (q+1)-regular."""
    n = plane.size
    rows = [0] * n
    for j, pts in enumerate(plane.incidence):
        for i in pts:
            rows[i] |= 1 << j
    return BipartiteGraph(n, n, tuple(rows))
