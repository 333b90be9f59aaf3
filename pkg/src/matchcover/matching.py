"""Maximum matchings: blossom search, an exhaustive oracle, and full enumeration.

The fast path is the classic augmenting-path search with blossom contraction,
exact on general graphs (bipartite-only methods would fail on K3, K4, and the
other odd-structure graphs this library centers on).  The exhaustive
backtracking routines are deliberately simple: they serve as the independent
oracle the fast path is checked against, and as the definitional enumeration
of all maximum matchings.

Everything is deterministic: vertices and neighbors are scanned in increasing
order, so repeated runs and parallel schedules produce identical results.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Edge, Graph, edge

# Backtracking over edge subsets is exponential; fail loudly beyond desk scale.
ENUMERATION_EDGE_LIMIT = 32


class GuardExceededError(RuntimeError):
    """The graph is too large for an exhaustive routine."""


class BindingError(ValueError):
    """A matching was used with a graph it is not bound to."""


@dataclass(frozen=True, order=True)
class Matching:
    """A set of pairwise vertex-disjoint edges, bound to its graph.

    Ordering and equality compare the sorted edge tuple, so collections of
    matchings sort lexicographically.  The fingerprint ties the matching to
    the graph it was computed on; operations reject cross-graph use.
    """

    edges: tuple[Edge, ...]
    fingerprint: str = field(compare=False)

    @classmethod
    def of(cls, g: Graph, edges: Iterable[tuple[int, int]]) -> "Matching":
        normalized = tuple(sorted(edge(u, v) for u, v in edges))
        seen: set[int] = set()
        for e in normalized:
            if e not in g.edge_set:
                raise ValueError(f"({e.u}, {e.v}) is not an edge of the bound graph")
            if e.u in seen or e.v in seen:
                raise ValueError(f"edges share vertex at ({e.u}, {e.v})")
            seen.update(e)
        return cls(normalized, g.fingerprint)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, e) -> bool:
        u, v = e
        return (min(u, v), max(u, v)) in self.edges

    def covered_vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)


@dataclass(frozen=True)
class MatchingSet:
    """All maximum matchings of a graph, sorted lexicographically.

    ``nu`` is the common cardinality.  Built by exhaustive enumeration, so it
    is the definitional object the fast predicates are validated against.
    """

    graph: Graph
    matchings: tuple[Matching, ...]
    nu: int

    def __len__(self) -> int:
        return len(self.matchings)

    def __iter__(self):
        return iter(self.matchings)


def _check_binding(g: Graph, f: Matching) -> None:
    if f.fingerprint != g.fingerprint:
        raise BindingError("matching is bound to a different graph")


def _check_guard(g: Graph) -> None:
    if len(g.edges) > ENUMERATION_EDGE_LIMIT:
        raise GuardExceededError(
            f"exhaustive search limited to {ENUMERATION_EDGE_LIMIT} edges, "
            f"graph has {len(g.edges)}"
        )


# ---------------------------------------------------------------------------
# Blossom algorithm (augmenting-path search with blossom contraction)
# ---------------------------------------------------------------------------


def _blossom_base(a: int, b: int, mate: list[int], parent: list[int],
                  base: list[int]) -> int:
    # Common ancestor of a and b in the alternating forest, by base vertex.
    marked = set()
    x = a
    while True:
        x = base[x]
        marked.add(x)
        if mate[x] < 0:
            break
        x = parent[mate[x]]
    x = b
    while True:
        x = base[x]
        if x in marked:
            return x
        x = parent[mate[x]]


def _mark_blossom_path(v: int, stem: int, child: int, mate: list[int],
                       parent: list[int], base: list[int],
                       in_blossom: list[bool]) -> None:
    while base[v] != stem:
        in_blossom[base[v]] = True
        in_blossom[base[mate[v]]] = True
        parent[v] = child
        child = mate[v]
        v = parent[mate[v]]


def _augment_from(root: int, n: int, adj: Sequence[Sequence[int]],
                  mate: list[int]) -> bool:
    parent = [-1] * n
    base = list(range(n))
    seen = [False] * n
    seen[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] >= 0 and parent[mate[to]] >= 0):
                # Odd cycle through two even-level vertices: contract it.
                stem = _blossom_base(v, to, mate, parent, base)
                in_blossom = [False] * n
                _mark_blossom_path(v, stem, to, mate, parent, base, in_blossom)
                _mark_blossom_path(to, stem, v, mate, parent, base, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = stem
                        if not seen[i]:
                            seen[i] = True
                            queue.append(i)
            elif parent[to] < 0:
                parent[to] = v
                if mate[to] < 0:
                    # Augmenting path found: flip matched/unmatched edges.
                    u = to
                    while u >= 0:
                        pv = parent[u]
                        next_u = mate[pv]
                        mate[u] = pv
                        mate[pv] = u
                        u = next_u
                    return True
                seen[mate[to]] = True
                queue.append(mate[to])
    return False


def _max_matching_mates(n: int, adj: Sequence[Sequence[int]]) -> list[int]:
    mate = [-1] * n
    # Greedy seed: pair each vertex with its smallest free neighbor.
    for v in range(n):
        if mate[v] < 0:
            for to in adj[v]:
                if mate[to] < 0:
                    mate[v] = to
                    mate[to] = v
                    break
    for v in range(n):
        if mate[v] < 0:
            _augment_from(v, n, adj, mate)
    return mate


def maximum_matching(g: Graph) -> Matching:
    """One maximum-cardinality matching, deterministic for a fixed graph."""
    mate = _max_matching_mates(g.n, g.adjacency)
    edges = tuple(Edge(v, mate[v]) for v in range(g.n) if v < mate[v])
    return Matching(edges, g.fingerprint)


def matching_number(g: Graph) -> int:
    """The maximum matching cardinality, via the blossom search."""
    mate = _max_matching_mates(g.n, g.adjacency)
    return sum(1 for v in range(g.n) if mate[v] >= 0) // 2


def _matching_number_excluding(g: Graph, banned: frozenset[int]) -> int:
    # Matching number of the subgraph with `banned` vertices removed,
    # without constructing a relabeled Graph (hot path of the allowed test).
    adj = tuple(
        () if v in banned else tuple(w for w in g.adjacency[v] if w not in banned)
        for v in range(g.n)
    )
    mate = _max_matching_mates(g.n, adj)
    return sum(1 for v in range(g.n) if mate[v] >= 0) // 2


# ---------------------------------------------------------------------------
# Exhaustive oracle and enumeration
# ---------------------------------------------------------------------------


def _scan_matchings(g: Graph, collect: bool) -> tuple[int, list[tuple[Edge, ...]]]:
    # Visit every matching once, branching on the lowest undecided vertex:
    # leave it unmatched, or pair it with a free higher neighbor.
    n = g.n
    adj = g.adjacency
    used = bytearray(n)
    chosen: list[Edge] = []
    best_size = -1
    best: list[tuple[Edge, ...]] = []

    def extend(v: int) -> None:
        nonlocal best_size, best
        while v < n and used[v]:
            v += 1
        if v == n:
            size = len(chosen)
            if size > best_size:
                best_size = size
                best = [tuple(chosen)] if collect else [()]
            elif collect and size == best_size:
                best.append(tuple(chosen))
            return
        extend(v + 1)
        used[v] = 1
        for w in adj[v]:
            if w > v and not used[w]:
                used[w] = 1
                chosen.append(Edge(v, w))
                extend(v + 1)
                chosen.pop()
                used[w] = 0
        used[v] = 0

    extend(0)
    return best_size, best


def brute_force_matching_number(g: Graph) -> int:
    """Maximum matching cardinality by exhaustive backtracking (the oracle)."""
    _check_guard(g)
    size, _ = _scan_matchings(g, collect=False)
    return size


def enumerate_maximum_matchings(g: Graph) -> MatchingSet:
    """All maximum matchings, sorted; the empty matching when the graph is edgeless."""
    _check_guard(g)
    nu, raw = _scan_matchings(g, collect=True)
    matchings = tuple(sorted(Matching(edges, g.fingerprint) for edges in raw))
    return MatchingSet(g, matchings, nu)


def matchings_containing(ms: MatchingSet, e: tuple[int, int]) -> tuple[Matching, ...]:
    """The members of the set that contain ``e`` (possibly none)."""
    e = edge(*e)
    if e not in ms.graph.edge_set:
        raise ValueError(f"({e.u}, {e.v}) is not an edge of the bound graph")
    return tuple(f for f in ms.matchings if e in f)


# ---------------------------------------------------------------------------
# Matching-level predicates
# ---------------------------------------------------------------------------


def covered_and_missed(g: Graph, f: Matching) -> tuple[frozenset[int], frozenset[int]]:
    """Partition of the vertices into those covered and those missed by ``f``."""
    _check_binding(g, f)
    covered = f.covered_vertices()
    missed = frozenset(v for v in range(g.n) if v not in covered)
    return covered, missed


def is_perfect(g: Graph, f: Matching) -> bool:
    """True when ``f`` covers every vertex (vacuously true for n = 0)."""
    _check_binding(g, f)
    return 2 * len(f.edges) == g.n


def has_perfect_matching(g: Graph) -> bool:
    """True when the maximum matching covers all vertices (n even, nu = n/2)."""
    return g.n % 2 == 0 and 2 * matching_number(g) == g.n
