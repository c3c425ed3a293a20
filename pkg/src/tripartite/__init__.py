"""Constructions, detectors and bounds for K3(s) in tripartite graphs G_3(n)."""

from .errors import (
    BadArgs, BadPartition, BadQ, BadS, BaseNotFree, DivisionByZero, NotFound, NotPrime,
    NotPrimePower, ParseError, SizeMismatch, TooLarge, TripartiteError,
)
from .gf import FieldElem, FiniteField, field_make, field_of_order
from .graph import (
    BipartiteGraph, Certificate, FreenessReport, TripartiteGraph, count_triangles, find_k2s,
    find_k3s, min_degree, verify_certificate,
)
from .plane import ProjectivePlane, build_plane, incidence_graph
from . import bounds
from .constructions import (
    Construction2Params, audit, construction1, construction2, generalized_construction,
)
from .finder import extract_k3s, run_pipeline
from .formats import read_graph, write_graph
from .search import (
    brute_force_zarankiewicz, extremal_min_degree, local_search_lower_bound, random_crosscheck,
)

__version__ = "0.1.0"
