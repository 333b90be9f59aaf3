"""Allowed edges, the core subgraph, covered predicates, and proof-replay witnesses.

An edge is *allowed* when some maximum matching contains it.  The *core
subgraph* keeps exactly the allowed edges (vertex set unchanged); a graph is
*matching covered* when it equals its core, and *minimal matching covered*
when additionally deleting any single edge destroys that property.

Two routes compute allowed-ness and are kept deliberately independent:

* the fast path tests ``nu(G - u - v) == nu(G) - 1`` with two blossom runs,
  which scales past the enumeration guard;
* the oracle path takes the union of all enumerated maximum matchings.

The witness operations replay the constructive arguments behind the covered
predicates: a maximum matching that misses an endpoint of any given edge, a
dominated edge whose maximum matchings all contain the deleted one, and the
edge sequence whose first repetition exhibits two distinct edges with
identical maximum-matching sets.  All existential choices are resolved
lexicographically so outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graph import (
    Edge,
    Graph,
    delete_edge,
    distance_to_set,
    drop_isolated,
    edge,
    is_connected,
    to_graph6,
)
from .matching import (
    ENUMERATION_EDGE_LIMIT,
    Matching,
    MatchingSet,
    covered_and_missed,
    enumerate_maximum_matchings,
    has_perfect_matching,
    matching_number,
    matchings_containing,
    _matching_number_excluding,
)


class RefutationError(Exception):
    """A verified mathematical property failed on a concrete graph.

    Raised only after the failure is confirmed by enumeration; carries the
    offending graph in graph6 form.  Distinct from operational errors so
    callers can tell "the property is false" from "the tool was misused".
    """

    def __init__(self, claim: str, g: Graph, detail: str = ""):
        self.claim = claim
        self.graph6 = to_graph6(g)
        message = f"refutation of {claim} on graph {self.graph6}"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


@dataclass(frozen=True)
class CoverReport:
    """Full allowed-edge analysis of one graph."""

    nu: int
    allowed: tuple[Edge, ...]
    disallowed: tuple[Edge, ...]
    is_matching_covered: bool
    is_minimal_matching_covered: bool
    has_perfect_matching: bool


@dataclass(frozen=True)
class WitnessSequence:
    """Edge sequence whose first repetition yields a pair with equal matching sets.

    ``edges[repeat_i] == edges[repeat_j]`` is the first repetition, and
    ``pair == (edges[repeat_j - 1], edges[repeat_j])`` are two distinct edges
    whose sets of containing maximum matchings coincide.
    """

    edges: tuple[Edge, ...]
    repeat_i: int
    repeat_j: int
    pair: tuple[Edge, Edge]

    def __post_init__(self):
        if not 0 <= self.repeat_i < self.repeat_j < len(self.edges):
            raise ValueError("repetition indices out of order")
        if self.edges[self.repeat_i] != self.edges[self.repeat_j]:
            raise ValueError("claimed repetition indices hold different edges")
        if self.pair != (self.edges[self.repeat_j - 1], self.edges[self.repeat_j]):
            raise ValueError("pair must be the last step of the sequence")
        if self.pair[0] == self.pair[1]:
            raise ValueError("pair edges must be distinct")


class DeletionStep(NamedTuple):
    """One minimization step: the edge deleted and the vertices dropped after it.

    Vertex labels refer to the graph as it was at that step (minimization
    relabels after every drop).
    """

    edge: Edge
    dropped: tuple[int, ...]


def is_allowed(g: Graph, e: tuple[int, int]) -> bool:
    """True when some maximum matching contains ``e``.

    Computed as ``nu(G - u - v) == nu(G) - 1``; two blossom runs, no
    enumeration.
    """
    e = edge(*e)
    if e not in g.edge_set:
        raise ValueError(f"({e.u}, {e.v}) is not an edge of the graph")
    return _is_allowed(g, e, matching_number(g))


def _is_allowed(g: Graph, e: Edge, nu: int) -> bool:
    return _matching_number_excluding(g, frozenset(e)) == nu - 1


def allowed_edges(g: Graph) -> tuple[Edge, ...]:
    """All allowed edges, sorted (fast path)."""
    nu = matching_number(g)
    return tuple(e for e in g.edges if _is_allowed(g, e, nu))


def allowed_edges_enumerated(g: Graph) -> tuple[Edge, ...]:
    """All allowed edges via the enumeration oracle: the union of all
    maximum matchings."""
    union: set[Edge] = set()
    for f in enumerate_maximum_matchings(g):
        union.update(f.edges)
    return tuple(sorted(union))


def core_subgraph(g: Graph) -> Graph:
    """The graph restricted to its allowed edges; the vertex set is kept."""
    return Graph(g.n, allowed_edges(g))


def is_matching_covered(g: Graph) -> bool:
    """True when every edge is allowed; vacuously true for edgeless graphs."""
    nu = matching_number(g)
    return all(_is_allowed(g, e, nu) for e in g.edges)


def is_minimal_matching_covered(g: Graph) -> bool:
    """True when the graph is matching covered and no single edge deletion is.

    The deletion test keeps the vertex set intact: the comparison is between
    ``G - e`` and its own core as graphs on the same vertices.
    """
    return is_matching_covered(g) and _no_deletion_covered(g)


def _no_deletion_covered(g: Graph) -> bool:
    return all(not is_matching_covered(delete_edge(g, e)) for e in g.edges)


def minimize(g: Graph) -> Graph:
    """Greedily delete edges while the graph stays matching covered.

    Isolated vertices of the input are shed first, then the procedure
    repeatedly deletes the lexicographically smallest edge whose removal
    leaves a matching covered graph, dropping any vertices the deletion
    isolates, until no deletion survives.  The result is minimal matching
    covered (possibly the n = 0 graph), free of isolated vertices, and has
    a perfect matching.
    """
    result, _, _ = minimize_with_trace(g)
    return result


def minimize_with_trace(
    g: Graph,
) -> tuple[Graph, tuple[int, ...], tuple[DeletionStep, ...]]:
    """Like :func:`minimize`, also reporting the input's shed isolated
    vertices and each deletion step."""
    if not is_matching_covered(g):
        raise ValueError("minimize requires a matching covered graph")
    initial = tuple(v for v in range(g.n) if not g.adjacency[v])
    g = drop_isolated(g)
    trace: list[DeletionStep] = []
    while True:
        for e in g.edges:
            smaller = delete_edge(g, e)
            if is_matching_covered(smaller):
                isolated = tuple(
                    v for v in range(smaller.n) if not smaller.adjacency[v]
                )
                trace.append(DeletionStep(e, isolated))
                g = drop_isolated(smaller)
                break
        else:
            return g, initial, tuple(trace)


def mu(g: Graph, e: tuple[int, int], f: Matching) -> int | None:
    """Distance from the nearer endpoint of ``e`` to the vertices missed by ``f``.

    Zero exactly when ``f`` misses an endpoint of ``e``.  Undefined (an
    error) when ``f`` is perfect; ``None`` when no missed vertex is
    reachable from either endpoint.
    """
    e = edge(*e)
    if e not in g.edge_set:
        raise ValueError(f"({e.u}, {e.v}) is not an edge of the graph")
    _, missed = covered_and_missed(g, f)
    if not missed:
        raise ValueError("matching is perfect; no missed vertices to measure")
    du = distance_to_set(g, e.u, missed)
    dv = distance_to_set(g, e.v, missed)
    finite = [d for d in (du, dv) if d is not None]
    return min(finite) if finite else None


def lemma1_witness(g: Graph, e: tuple[int, int]) -> Matching:
    """A maximum matching missing an endpoint of ``e``.

    Scans the enumerated maximum matchings for the one minimizing the
    endpoint-to-missed-vertices distance (ties broken lexicographically);
    for a connected matching covered graph without a perfect matching that
    minimum is 0, i.e. the returned matching misses ``u`` or ``v``.  A
    nonzero minimum would contradict the property and raises
    :class:`RefutationError`.
    """
    e = edge(*e)
    _require(is_connected(g), "graph must be connected")
    _require(is_matching_covered(g), "graph must be matching covered")
    _require(not has_perfect_matching(g), "graph must not have a perfect matching")
    if e not in g.edge_set:
        raise ValueError(f"({e.u}, {e.v}) is not an edge of the graph")
    ms = enumerate_maximum_matchings(g)
    best: Matching | None = None
    best_mu: int | None = None
    for f in ms:
        value = mu(g, e, f)
        if value is None:
            continue
        if best_mu is None or value < best_mu:
            best, best_mu = f, value
    if best is None or best_mu != 0:
        raise RefutationError(
            "endpoint-missing property",
            g,
            f"min distance for edge ({e.u}, {e.v}) is {best_mu}, expected 0",
        )
    return best


def find_dominated_edge(g: Graph, e: tuple[int, int]) -> Edge:
    """The smallest edge that becomes disallowed when ``e`` is deleted.

    Requires a matching covered graph whose deletion ``G - e`` is no longer
    matching covered.  Every maximum matching containing the returned edge
    also contains ``e``; that inclusion is asserted by enumeration whenever
    the graph is within the enumeration guard.
    """
    e = edge(*e)
    _require(is_matching_covered(g), "graph must be matching covered")
    if e not in g.edge_set:
        raise ValueError(f"({e.u}, {e.v}) is not an edge of the graph")
    smaller = delete_edge(g, e)
    nu = matching_number(smaller)
    dominated = None
    for cand in smaller.edges:
        if not _is_allowed(smaller, cand, nu):
            dominated = cand
            break
    if dominated is None:
        raise ValueError(
            f"deleting ({e.u}, {e.v}) leaves a matching covered graph; "
            "no dominated edge need exist"
        )
    if len(g.edges) <= ENUMERATION_EDGE_LIMIT:
        ms = enumerate_maximum_matchings(g)
        inner = set(matchings_containing(ms, dominated))
        outer = set(matchings_containing(ms, e))
        if not inner <= outer:
            raise RefutationError(
                "dominated-edge inclusion",
                g,
                f"matchings through ({dominated.u}, {dominated.v}) are not "
                f"a subset of those through ({e.u}, {e.v})",
            )
    return dominated


def theorem_witness_sequence(g: Graph) -> WitnessSequence:
    """Iterate dominated edges from the smallest edge until one repeats.

    Requires a minimal matching covered graph with at least one edge.  The
    step before the first repetition gives two distinct edges whose maximum-
    matching sets coincide; the equality is asserted by enumeration and a
    violation raises :class:`RefutationError`.
    """
    _require(g.edges != (), "graph must have at least one edge")
    _require(is_minimal_matching_covered(g), "graph must be minimal matching covered")
    sequence: list[Edge] = [g.edges[0]]
    positions: dict[Edge, int] = {g.edges[0]: 0}
    # Pigeonhole: a repeat must occur within |E| + 1 entries.
    while len(sequence) <= len(g.edges) + 1:
        nxt = find_dominated_edge(g, sequence[-1])
        sequence.append(nxt)
        if nxt in positions:
            repeat_i, repeat_j = positions[nxt], len(sequence) - 1
            pair = (sequence[-2], sequence[-1])
            ms = enumerate_maximum_matchings(g)
            if matchings_containing(ms, pair[0]) != matchings_containing(ms, pair[1]):
                raise RefutationError(
                    "equal-matching-set pair",
                    g,
                    f"sets through ({pair[0].u}, {pair[0].v}) and "
                    f"({pair[1].u}, {pair[1].v}) differ",
                )
            return WitnessSequence(tuple(sequence), repeat_i, repeat_j, pair)
        positions[nxt] = len(sequence) - 1
    raise AssertionError("no repetition within the pigeonhole bound")


def shared_matching_set(g: Graph, ws: WitnessSequence) -> tuple[Matching, ...]:
    """The common set of maximum matchings through both edges of the pair."""
    ms = enumerate_maximum_matchings(g)
    return matchings_containing(ms, ws.pair[1])


def analyze(g: Graph) -> CoverReport:
    """Compute the full allowed-edge report for one graph."""
    nu = matching_number(g)
    allowed = tuple(e for e in g.edges if _is_allowed(g, e, nu))
    disallowed = tuple(e for e in g.edges if e not in set(allowed))
    covered = not disallowed
    minimal = covered and _no_deletion_covered(g)
    return CoverReport(
        nu=nu,
        allowed=allowed,
        disallowed=disallowed,
        is_matching_covered=covered,
        is_minimal_matching_covered=minimal,
        has_perfect_matching=g.n % 2 == 0 and 2 * nu == g.n,
    )


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)
