"""Simple undirected graphs with exact BFS distances.

Vertices are dense 0-based integers. Graphs are immutable after
construction and all operations here are pure functions, so shared
instances are safe to use concurrently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from .errors import (
    DisconnectedError,
    EdgeListParseError,
    InvalidParameterError,
    SelfLoopError,
    VertexOutOfRangeError,
)

__all__ = [
    "Graph",
    "DistanceMatrix",
    "from_edge_list",
    "all_pairs_distances",
    "diameter",
    "degree_extremes",
    "parse_edge_list",
    "format_edge_list",
    "read_edge_list",
    "write_edge_list",
]


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Edge input order and duplicates are normalised away: ``edges`` is a
    lexicographically sorted tuple of ``(u, v)`` pairs with ``u < v``,
    which gives every graph one canonical encoding.
    """

    __slots__ = ("n", "edges", "adjacency", "degrees")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise InvalidParameterError("a graph needs at least one vertex")
        neighbors: list[set[int]] = [set() for _ in range(n)]
        for u, v in pairs:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            neighbors[u].add(v)
            neighbors[v].add(u)
        self.n = n
        self.adjacency: tuple[frozenset[int], ...] = tuple(
            frozenset(s) for s in neighbors
        )
        self.edges: tuple[tuple[int, int], ...] = tuple(
            (u, v) for u in range(n) for v in sorted(neighbors[u]) if u < v
        )
        self.degrees: tuple[int, ...] = tuple(len(s) for s in neighbors)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u] if 0 <= u < self.n else False

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DistanceMatrix:
    """Exact hop distances of a connected graph as an ``(n, n)`` int64 array."""

    n: int
    d: np.ndarray

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return int(self.d[pair])

    def max(self) -> int:
        return int(self.d.max())


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated graph; duplicate pairs collapse to one edge."""
    return Graph(n, pairs)


def _bfs_row(g: Graph, source: int, out: np.ndarray) -> None:
    out[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = out[u]
        for w in g.adjacency[u]:
            if out[w] < 0:
                out[w] = du + 1
                queue.append(w)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """All-pairs hop distances via one BFS per source.

    Raises DisconnectedError as soon as any source fails to reach every
    vertex; the matrix therefore never contains infinities.
    """
    n = g.n
    d = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        _bfs_row(g, s, d[s])
        if d[s].min() < 0:
            raise DisconnectedError(f"vertex {s} cannot reach the whole graph")
    d.setflags(write=False)
    return DistanceMatrix(n, d)


def diameter(g: Graph) -> int:
    """Largest hop distance over all vertex pairs."""
    return all_pairs_distances(g).max()


def degree_extremes(g: Graph) -> tuple[int, int]:
    """(minimum degree, maximum degree) of the degree sequence."""
    return min(g.degrees), max(g.degrees)


# Edge-list text format: first line "n m", then m lines "u v", LF endings.
# Comment lines start with '#'; readers tolerate them and trailing blanks.


def parse_edge_list(text: str) -> Graph:
    rows: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise EdgeListParseError(f"line {lineno}: non-integer field in {raw!r}") from None
    if not rows:
        raise EdgeListParseError("missing 'n m' header line")
    n, m = rows[0]
    if len(rows) - 1 != m:
        raise EdgeListParseError(f"header declares {m} edges, found {len(rows) - 1}")
    try:
        return Graph(n, rows[1:])
    except (SelfLoopError, VertexOutOfRangeError, InvalidParameterError) as exc:
        raise EdgeListParseError(str(exc)) from exc


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = [f"{g.n} {g.m}"]
    if comment is not None:
        lines.append(f"# {comment}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(source: str | TextIO) -> Graph:
    if isinstance(source, str):
        with open(source, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    return parse_edge_list(source.read())


def write_edge_list(g: Graph, target: str | TextIO, comment: str | None = None) -> None:
    text = format_edge_list(g, comment)
    if isinstance(target, str):
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        target.write(text)
