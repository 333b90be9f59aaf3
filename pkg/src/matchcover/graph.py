"""Simple undirected graphs in canonical form, with text formats and metric queries.

Vertices are the integers ``0..n-1``.  Edges are unordered pairs stored as
``(u, v)`` with ``u < v``, kept strictly sorted and duplicate-free, so two
equal graphs compare equal componentwise.  Loops and parallel edges are
rejected at construction time.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

GRAPH6_HEADER = ">>graph6<<"

# graph6 single-byte vertex counts stop at 62; longer forms are not supported.
GRAPH6_MAX_N = 62


class ParseError(ValueError):
    """Input text does not describe a valid graph."""


class Graph6ParseError(ParseError):
    """Malformed graph6 text.  ``offset`` is the 0-based byte position, if known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class EdgeListParseError(ParseError):
    """Malformed edge-list text."""


class Edge(NamedTuple):
    u: int
    v: int


def edge(u: int, v: int) -> Edge:
    """Edge with endpoints in increasing order; loops are rejected."""
    if u == v:
        raise ValueError(f"loop ({u}, {v}) is not a valid edge")
    return Edge(u, v) if u < v else Edge(v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``edges`` is normalized at construction: every pair is reordered to
    ``u < v``, the collection is sorted, and loops, duplicates, and
    out-of-range endpoints raise ``ValueError``.  The ``n = 0`` graph is
    valid (and counts as connected and bipartite).
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        normalized = tuple(sorted(edge(u, v) for u, v in self.edges))
        for i, (u, v) in enumerate(normalized):
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if i > 0 and normalized[i - 1] == (u, v):
                raise ValueError(f"duplicate edge ({u}, {v})")
        object.__setattr__(self, "edges", normalized)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists, each sorted ascending."""
        neighbors: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in neighbors)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def fingerprint(self) -> str:
        """Stable identifier of the canonical graph, used to bind matchings."""
        text = f"{self.n}:" + ";".join(f"{u},{v}" for u, v in self.edges)
        return hashlib.sha256(text.encode("ascii")).hexdigest()[:16]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def __contains__(self, e) -> bool:
        u, v = e
        return (min(u, v), max(u, v)) in self.edge_set


def _g6_pairs(n: int) -> Iterator[tuple[int, int]]:
    # Column order of the upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for v in range(1, n):
        for u in range(v):
            yield u, v


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` prefix is accepted).

    The format: byte ``n + 63`` encodes the vertex count for ``n <= 62``
    (longer forms are rejected), followed by the upper-triangle adjacency
    bits in column order, packed big-endian six bits per byte, each byte
    offset by 63; padding bits must be zero.
    """
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        s = s[base:]
    if not s:
        raise Graph6ParseError("empty graph6 text")
    first = ord(s[0])
    if not 63 <= first <= 126:
        raise Graph6ParseError(f"invalid graph6 character {s[0]!r}", base)
    if first == 126:
        raise Graph6ParseError(
            "multi-byte vertex counts (n > 62) are not supported", base
        )
    n = first - 63
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = s[1:]
    if len(body) != nbytes:
        raise Graph6ParseError(
            f"expected {nbytes} adjacency bytes for n={n}, got {len(body)}",
            base + 1 + min(len(body), nbytes),
        )
    bits: list[int] = []
    for i, ch in enumerate(body):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6ParseError(f"invalid graph6 character {ch!r}", base + 1 + i)
        value = c - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6ParseError("trailing padding bits nonzero", base + nbytes)
    edges = [pair for pair, bit in zip(_g6_pairs(n), bits) if bit]
    return Graph(n, tuple(edges))


def to_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (no header, no newline)."""
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 output supports n <= {GRAPH6_MAX_N}, got n={g.n}")
    present = g.edge_set
    bits = [1 if (u, v) in present else 0 for u, v in _g6_pairs(g.n)]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by one ``u v`` pair per line.

    Blank lines are ignored.  Loops, duplicate edges, and endpoints outside
    ``0..n-1`` are rejected.
    """
    lines = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
    lines = [(no, line) for no, line in lines if line]
    if not lines:
        raise EdgeListParseError("empty edge-list text")
    no, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise EdgeListParseError(f"line {no}: expected vertex count, got {header!r}")
    if n < 0:
        raise EdgeListParseError(f"line {no}: vertex count must be nonnegative")
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"line {no}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"line {no}: non-integer endpoint in {line!r}")
        if u == v:
            raise EdgeListParseError(f"line {no}: loop ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"line {no}: endpoint out of range for n={n}")
        e = edge(u, v)
        if e in seen:
            raise EdgeListParseError(f"line {no}: duplicate edge ({e.u}, {e.v})")
        seen.add(e)
        edges.append(e)
    return Graph(n, tuple(edges))


def to_dot(g: Graph, highlight: Iterable[tuple[int, int]] = ()) -> str:
    """Render an undirected DOT document; highlighted edges are styled distinctly.

    Every highlighted pair must be an edge of the graph.
    """
    marked: set[Edge] = set()
    for u, v in highlight:
        e = edge(u, v)
        if e not in g.edge_set:
            raise ValueError(f"highlighted pair ({e.u}, {e.v}) is not an edge")
        marked.add(e)
    lines = ["graph {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for e in g.edges:
        if e in marked:
            lines.append(f"  {e.u} -- {e.v} [color=red, penwidth=2.0];")
        else:
            lines.append(f"  {e.u} -- {e.v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def incident_edges(g: Graph, u: int) -> tuple[Edge, ...]:
    """All edges containing ``u``, sorted."""
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range for n={g.n}")
    return tuple(e for e in g.edges if u in e)


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Remove one edge; the vertex set is preserved."""
    e = edge(*e)
    if e not in g.edge_set:
        raise ValueError(f"({e.u}, {e.v}) is not an edge of the graph")
    return Graph(g.n, tuple(x for x in g.edges if x != e))


def delete_vertices(g: Graph, drop: Iterable[int]) -> Graph:
    """Remove vertices and their incident edges.

    Remaining vertices are relabeled to ``0..n-|drop|-1`` by increasing
    original index.
    """
    dropped = set(drop)
    bad = [v for v in dropped if not 0 <= v < g.n]
    if bad:
        raise ValueError(f"vertices {sorted(bad)} out of range for n={g.n}")
    relabel = {}
    for v in range(g.n):
        if v not in dropped:
            relabel[v] = len(relabel)
    edges = tuple(
        Edge(relabel[u], relabel[v])
        for u, v in g.edges
        if u not in dropped and v not in dropped
    )
    return Graph(len(relabel), edges)


def drop_isolated(g: Graph) -> Graph:
    """Remove degree-0 vertices, relabeling the rest by increasing index."""
    isolated = [v for v in range(g.n) if not g.adjacency[v]]
    return delete_vertices(g, isolated) if isolated else g


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: Graph, u: int, v: int) -> int | None:
    """Shortest-path length between ``u`` and ``v``; ``None`` when unreachable."""
    for x in (u, v):
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} out of range for n={g.n}")
    if u == v:
        return 0
    d = _bfs_distances(g, u)[v]
    return None if d < 0 else d


def distance_to_set(g: Graph, w: int, targets: Iterable[int]) -> int | None:
    """Minimum BFS distance from ``w`` to a nonempty vertex set; ``None`` if none reachable."""
    targets = set(targets)
    if not targets:
        raise ValueError("target set must be nonempty")
    bad = [v for v in targets if not 0 <= v < g.n]
    if bad:
        raise ValueError(f"vertices {sorted(bad)} out of range for n={g.n}")
    if not 0 <= w < g.n:
        raise ValueError(f"vertex {w} out of range for n={g.n}")
    if w in targets:
        return 0
    dist = _bfs_distances(g, w)
    reachable = [dist[v] for v in targets if dist[v] >= 0]
    return min(reachable) if reachable else None


def is_connected(g: Graph) -> bool:
    """True when a single component covers every vertex; the n = 0 graph counts."""
    if g.n == 0:
        return True
    return _bfs_distances(g, 0).count(-1) == 0


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A 2-coloring ``(U, W)`` with every edge crossing, or ``None`` on an odd cycle.

    The part containing the smallest-index vertex of each component is ``U``.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    u = frozenset(v for v in range(g.n) if color[v] == 0)
    w = frozenset(v for v in range(g.n) if color[v] == 1)
    return u, w
