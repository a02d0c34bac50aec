"""Degree- and distance-based topological indices.

Distance-based indices are exact integers; Randić-type quantities are
doubles accumulated left to right over the canonically sorted edge
list, so repeated runs produce bit-identical values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DiameterNotTwoError, InvalidParameterError, NoEdgesError
from .graph import DistanceMatrix, Graph, all_pairs_distances

__all__ = [
    "IndexReport",
    "RandicBounds",
    "wiener",
    "first_zagreb",
    "randic",
    "degree_distance",
    "distance2_degree_sum",
    "dd_mycielskian_closed",
    "randic_bounds",
    "index_report",
]

# Integer sums are accumulated in int64. The largest index handled here is
# the degree distance, bounded by n^4, and 55000^4 < 2^63, so anything at
# or below this order stays exact.
_EXACT_ORDER_LIMIT = 55_000


def _check_order(n: int) -> None:
    if n > _EXACT_ORDER_LIMIT:
        raise InvalidParameterError(
            f"n={n} exceeds the exact int64 limit of {_EXACT_ORDER_LIMIT}"
        )


def _pair_weight(g: Graph) -> np.ndarray:
    deg = np.asarray(g.degrees, dtype=np.int64)
    return deg[:, None] + deg[None, :]


def _wiener(dm: DistanceMatrix) -> int:
    return int(dm.d.sum(dtype=np.int64)) // 2


def _degree_distance(g: Graph, dm: DistanceMatrix) -> int:
    return int((dm.d * _pair_weight(g)).sum(dtype=np.int64)) // 2


def _distance2_degree_sum(g: Graph, dm: DistanceMatrix) -> int:
    return int(_pair_weight(g)[dm.d == 2].sum(dtype=np.int64)) // 2


def wiener(g: Graph) -> int:
    """Sum of hop distances over all unordered vertex pairs."""
    _check_order(g.n)
    return _wiener(all_pairs_distances(g))


def first_zagreb(g: Graph) -> int:
    """Sum over edges of endpoint degrees, equal to the degree-square sum.

    Both forms are computed and cross-checked on every call.
    """
    edge_form = sum(g.degree(u) + g.degree(v) for u, v in g.edges)
    square_form = sum(d * d for d in g.degrees)
    assert edge_form == square_form, "Zagreb edge form diverged from degree squares"
    return edge_form


def randic(g: Graph) -> float:
    """Sum over edges of ``1 / sqrt(deg(u) * deg(v))``."""
    if g.m == 0:
        raise NoEdgesError("Randic index needs at least one edge")
    total = 0.0
    for u, v in g.edges:
        total += 1.0 / math.sqrt(g.degree(u) * g.degree(v))
    return total


def degree_distance(g: Graph) -> int:
    """Sum over unordered pairs of ``d(u, v) * (deg(u) + deg(v))``."""
    _check_order(g.n)
    return _degree_distance(g, all_pairs_distances(g))


def distance2_degree_sum(g: Graph) -> int:
    """Sum of endpoint degrees over unordered pairs at distance exactly 2.

    On diameter-2 graphs this equals ``2(n-1)m - M1``: a vertex of degree d
    has exactly ``n - 1 - d`` vertices at distance two.
    """
    _check_order(g.n)
    return _distance2_degree_sum(g, all_pairs_distances(g))


def dd_mycielskian_closed(g: Graph, *, check_diameter: bool = True) -> int:
    """Degree distance of the Mycielskian via the closed form
    ``4*DD(G) - M1(G) + (7n-1)n + (8n+12)m``.

    The identity is proved for diameter-2 graphs only, and by default any
    other diameter raises DiameterNotTwoError carrying the actual value.
    ``check_diameter=False`` evaluates the same polynomial regardless, for
    exploratory comparison outside the proven range; nothing is guaranteed
    about the result there.
    """
    _check_order(g.n)
    dm = all_pairs_distances(g)
    if check_diameter and dm.max() != 2:
        raise DiameterNotTwoError(dm.max())
    n, m = g.n, g.m
    return 4 * _degree_distance(g, dm) - first_zagreb(g) + (7 * n - 1) * n + (8 * n + 12) * m


@dataclass(frozen=True)
class RandicBounds:
    """Sandwich bounds for the Randić index of the Mycielskian.

    ``lower == upper`` exactly when the base graph is regular, and then
    both equal the Mycielskian's Randić index.
    """

    lower: float
    upper: float
    is_regular: bool


def randic_bounds(g: Graph) -> RandicBounds:
    """Bounds ``R(G)/2 + (sqrt(2) m + sqrt(n D)) / sqrt(D^2 + D)`` with D the
    maximum degree (lower) or minimum degree (upper)."""
    if g.m == 0:
        raise NoEdgesError("Randic bounds need at least one edge")
    n, m = g.n, g.m
    half_r = randic(g) / 2.0
    delta, big_delta = min(g.degrees), max(g.degrees)
    if delta == 0:
        # only reachable on disconnected inputs; the upper bound divides by
        # sqrt(delta^2 + delta)
        raise InvalidParameterError("bounds undefined at minimum degree 0")
    lower = half_r + (math.sqrt(2.0) * m + math.sqrt(n * big_delta)) / math.sqrt(
        big_delta * big_delta + big_delta
    )
    upper = half_r + (math.sqrt(2.0) * m + math.sqrt(n * delta)) / math.sqrt(
        delta * delta + delta
    )
    return RandicBounds(lower=lower, upper=upper, is_regular=delta == big_delta)


@dataclass(frozen=True)
class IndexReport:
    """Named bundle of the computed invariants of one connected graph."""

    n: int
    m: int
    diameter: int
    wiener: int
    zagreb_m1: int
    randic: float
    degree_distance: int

    def as_dict(self) -> dict[str, int | float]:
        return {
            "n": self.n,
            "m": self.m,
            "diameter": self.diameter,
            "wiener": self.wiener,
            "zagreb_m1": self.zagreb_m1,
            "randic": self.randic,
            "degree_distance": self.degree_distance,
        }


def index_report(g: Graph) -> IndexReport:
    """Compute all indices from one shared distance matrix."""
    _check_order(g.n)
    dm = all_pairs_distances(g)
    return IndexReport(
        n=g.n,
        m=g.m,
        diameter=dm.max(),
        wiener=_wiener(dm),
        zagreb_m1=first_zagreb(g),
        randic=randic(g),
        degree_distance=_degree_distance(g, dm),
    )
