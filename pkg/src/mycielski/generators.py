"""Deterministic graph families and seeded random connected graphs.

Everything here is reproducible: named families have one canonical
labeling each, and the random generator is a fixed 64-bit splitmix
stream, so equal inputs give bit-identical edge sets on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import InvalidParameterError, TooLargeError
from .graph import Graph

__all__ = [
    "FamilySpec",
    "generate",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "petersen",
    "erdos_renyi_connected",
    "enumerate_connected",
    "CONNECTED_COUNTS",
]

# Labeled connected graphs on 2..6 vertices; re-derived by the enumeration
# test before anything relies on them.
CONNECTED_COUNTS = {2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}

ENUMERATION_CAP = 6


def path(n: int) -> Graph:
    """Path 0-1-...-(n-1), n >= 2."""
    if n < 2:
        raise InvalidParameterError(f"path needs n >= 2, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0, n >= 3."""
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """Complete graph on n >= 2 vertices."""
    if n < 2:
        raise InvalidParameterError(f"complete needs n >= 2, got {n}")
    return Graph(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves (>= 1)."""
    if leaves < 1:
        raise InvalidParameterError(f"star needs at least one leaf, got {leaves}")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Complete bipartite graph with sides 0..a-1 and a..a+b-1."""
    if a < 1 or b < 1:
        raise InvalidParameterError(f"bipartite sides must be >= 1, got {a}, {b}")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    """Petersen graph: outer cycle 0..4, inner 5..9 stepping by 2, spokes i-(i+5)."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its integer parameters."""

    kind: str
    params: tuple[int, ...] = ()


_FAMILY_BUILDERS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "petersen": (petersen, 0),
}


def generate(spec: FamilySpec) -> Graph:
    """Build the canonical representative of a family spec."""
    try:
        builder, arity = _FAMILY_BUILDERS[spec.kind]
    except KeyError:
        raise InvalidParameterError(f"unknown family kind {spec.kind!r}") from None
    if len(spec.params) != arity:
        raise InvalidParameterError(
            f"{spec.kind} takes {arity} parameter(s), got {len(spec.params)}"
        )
    return builder(*spec.params)


_MASK64 = (1 << 64) - 1


def _splitmix64(state: int) -> Iterator[int]:
    """The splitmix64 stream: a full 64-bit generator in three mixes."""
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def erdos_renyi_connected(n: int, p: float, seed: int) -> Graph:
    """Seeded G(n, p) conditioned on connectivity.

    Each of the C(n, 2) pairs is kept with probability ``p``, drawing one
    splitmix64 value per pair in lexicographic pair order (the top 53 bits
    become a uniform double). Disconnected samples are discarded and the
    whole graph is redrawn from ``seed + 1``, ``seed + 2``, and so on, so
    the result is a pure function of ``(n, p, seed)``.
    """
    if n < 2:
        raise InvalidParameterError(f"need n >= 2, got {n}")
    if not 0.0 < p <= 1.0:
        raise InvalidParameterError(f"p must lie in (0, 1], got {p}")
    attempt = seed & _MASK64
    while True:
        stream = _splitmix64(attempt)
        pairs = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if (next(stream) >> 11) * 2.0**-53 < p
        ]
        g = Graph(n, pairs)
        if g.is_connected():
            return g
        attempt = (attempt + 1) & _MASK64


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Yield every labeled connected graph on n vertices, 2 <= n <= 6.

    Edge subsets are visited in increasing bitmask order, where bit k
    toggles the k-th pair in lexicographic order; only connected subsets
    are yielded. Counts per order: 1, 4, 38, 728, 26704.
    """
    if n > ENUMERATION_CAP:
        raise TooLargeError(f"enumeration capped at n = {ENUMERATION_CAP}, got {n}")
    if n < 2:
        raise InvalidParameterError(f"need n >= 2, got {n}")
    all_pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(all_pairs)):
        adj_bits = [0] * n
        pairs = []
        k_mask = mask
        k = 0
        while k_mask:
            if k_mask & 1:
                u, v = all_pairs[k]
                adj_bits[u] |= 1 << v
                adj_bits[v] |= 1 << u
                pairs.append((u, v))
            k_mask >>= 1
            k += 1
        # bitmask BFS keeps the connectivity filter cheap across all 2^C(n,2) masks
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            v_bits = frontier
            while v_bits:
                low = v_bits & -v_bits
                reach |= adj_bits[low.bit_length() - 1]
                v_bits ^= low
            frontier = reach & ~seen
            seen |= frontier
        if seen == full:
            yield Graph(n, pairs)
