"""
Closed-form bounds and minimum-degree thresholds for K3(s) in G_3(n).

All real powers are evaluated in double precision.  Comparisons between two
thresholds treat values within a relative tolerance of ``REL_TOL`` as ties and
report them as indeterminate (``None``) rather than guessing a side.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass
from typing import Optional

from .errors import BadArgs

REL_TOL = 1e-12


def _check_ns(n, s, n_min=1):
    if s < 2 or n < n_min:
        raise BadArgs(f"need s >= 2 and n >= {n_min}, got n={n}, s={s}")


def compare(a: float, b: float, rel_tol: float = REL_TOL) -> Optional[int]:
    """Sign of a - b, or None when the two agree to within ``rel_tol``."""
    if math.isclose(a, b, rel_tol=rel_tol, abs_tol=0.0):
        return None
    return 1 if a > b else -1


def kst_bound(n: int, s: int) -> float:
    """Kovari-Sos-Turan upper bound on the Zarankiewicz number z(n, s)."""
    _check_ns(n, s, n_min=s)
    return (s - 1) ** (1 / s) * (n - s + 1) * n ** (1 - 1 / s) + (s - 1) * n


def t_value(n: float, s: int, eps: float) -> float:
    """The additive excess (1+eps)(s-1)^{1/(3s^2)} n^{1-1/(3s^2)} over n."""
    if eps < 0:
        raise BadArgs("eps must be nonnegative")
    _check_ns(n, s)
    e = 1 / (3 * s * s)
    return (1 + eps) * (s - 1) ** e * n ** (1 - e)


def thm_threshold(n: float, s: int, eps: float = 0.0) -> float:
    """Minimum degree that forces K3(s) for large n."""
    return n + t_value(n, s, eps)


def prop2_threshold(n: float, s: int) -> float:
    """The slightly stronger threshold n + (3n)^{1-1/(3s^2)} from the hypergraph argument."""
    _check_ns(n, s)
    return n + (3 * n) ** (1 - 1 / (3 * s * s))


def lower_bound(n: float) -> float:
    """n + sqrt(n): the minimum degree achieved by the K3(2)-free constructions."""
    if n < 1:
        raise BadArgs("n must be positive")
    return n + math.sqrt(n)


def erdos_edge_threshold(n_vertices: float, r: int, s: int) -> float:
    """Edge count n^{r - s^{1-r}} above which an r-graph contains K^r_r(s)."""
    if r < 2 or s < 2 or n_vertices < 1:
        raise BadArgs(f"need r, s >= 2 and n >= 1, got r={r}, s={s}, n={n_vertices}")
    return n_vertices ** (r - s ** (1 - r))


def eqB_lhs_floor(n: float, s: int, eps: float) -> float:
    """Guaranteed size n^2 (t^3 / ((1+eps) n^3))^s of the s-fold link intersection."""
    t = t_value(n, s, eps)
    return n * n * (t**3 / ((1 + eps) * n**3)) ** s


def eqB_sides(n: float, s: int, eps: float) -> tuple[float, float]:
    lhs = (1 + eps) ** s * (s - 1) ** (1 / s) * n ** (2 - 1 / s)
    rhs = (s - 1) ** (1 / s) * n ** (2 - 1 / s) + (s - 1) * n
    return lhs, rhs


def eqB_check(n: float, s: int, eps: float) -> Optional[bool]:
    """Whether (1+eps)^s (s-1)^{1/s} n^{2-1/s} >= (s-1)^{1/s} n^{2-1/s} + (s-1) n.

    This is the last inequality needed before the KST bound applies to the
    intersection graph.  Returns None when both sides tie within tolerance.
    """
    if eps <= 0:
        raise BadArgs("eps must be positive")
    _check_ns(n, s)
    c = compare(*eqB_sides(n, s, eps))
    return None if c is None else c > 0


def eqB_min_n(s: int, eps: float, n_max: int = 1 << 62) -> Optional[int]:
    """Smallest integer n >= 1 with eqB_check true (binary search, monotone in n)."""
    if eqB_check(n_max, s, eps) is not True:
        return None
    lo, hi = 1, n_max
    if eqB_check(lo, s, eps) is True:
        return lo
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if eqB_check(mid, s, eps) is True:
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class ThresholdReport:
    n: int
    s: int
    eps: float
    kst: Optional[float]
    thm_threshold: float
    prop2_threshold: float
    erdos_edges: float
    lower_bound: float
    t_value: float
    eqB_lhs_floor: float

    def to_dict(self) -> dict:
        return asdict(self)


def threshold_report(n: int, s: int, eps: float = 0.0) -> ThresholdReport:
    """Evaluate every bound at (n, s, eps); ``kst`` is None when n < s."""
    return ThresholdReport(
        n=n, s=s, eps=eps,
        kst=kst_bound(n, s) if n >= s else None,
        thm_threshold=thm_threshold(n, s, eps),
        prop2_threshold=prop2_threshold(n, s),
        # triangles of G_3(n) form a 3-graph on 3n vertices
        erdos_edges=erdos_edge_threshold(3 * n, 3, s),
        lower_bound=lower_bound(n),
        t_value=t_value(n, s, eps),
        eqB_lhs_floor=eqB_lhs_floor(n, s, eps),
    )


CSV_COLUMNS = ("n", "s", "eps", "lower", "thm", "prop2", "kst", "erdos")


def bounds_csv(ns, s: int, eps: float) -> str:
    """One CSV row per n with columns n,s,eps,lower,thm,prop2,kst,erdos."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for n in ns:
        rep = threshold_report(n, s, eps)
        w.writerow([n, s, repr(float(eps)), repr(rep.lower_bound), repr(rep.thm_threshold),
                    repr(rep.prop2_threshold), "" if rep.kst is None else repr(rep.kst),
                    repr(rep.erdos_edges)])
    return buf.getvalue()
