"""Graph populations and falsification sweeps over matching-cover properties.

A sweep walks a population of graphs (exhaustive over all labeled simple
graphs up to a size bound, a seeded random family, or an ingested graph6
stream), evaluates each requested property on the graphs satisfying its
hypothesis class, and tallies passes and failures.  The first counterexample
is minimal under ``(n, graph6)`` ordering no matter how the work is
scheduled, and any failure detected by the fast predicates is re-verified
against the enumeration oracle before it is reported.

Properties:

* ``theorem``    — minimal matching covered graphs (no isolated vertices, at
  least one edge) have a perfect matching;
* ``lemma1``     — in a connected matching covered graph without a perfect
  matching, every edge has a maximum matching missing one of its endpoints
  (the distance minimum over all maximum matchings is zero);
* ``lemma2``     — in the same class, distinct edges have distinct sets of
  containing maximum matchings;
* ``corollary``  — in a connected bipartite matching covered graph, if any
  vertex of a part is missed by some maximum matching then every vertex of
  that part is;
* ``oracle-nu``  — the blossom matching number equals the backtracking one;
* ``oracle-allowed`` — the two allowed-edge routes agree on every edge.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import cached_property
from multiprocessing import Pool
from typing import IO, Iterable, Iterator, Sequence

from .cover import allowed_edges, allowed_edges_enumerated, is_matching_covered, mu
from .graph import (
    Edge,
    Graph,
    ParseError,
    bipartition,
    delete_edge,
    is_connected,
    parse_graph6,
    to_graph6,
)
from .matching import (
    ENUMERATION_EDGE_LIMIT,
    MatchingSet,
    brute_force_matching_number,
    enumerate_maximum_matchings,
    matching_number,
)

PROPERTY_NAMES = (
    "theorem",
    "lemma1",
    "lemma2",
    "corollary",
    "oracle-nu",
    "oracle-allowed",
)

EXHAUSTIVE_MODE = "exhaustive-labeled"
RANDOM_MODE = "random"

# The exhaustive population is 2^(n choose 2) labeled graphs per n.
MAX_EXHAUSTIVE_N = 8


class StreamParseError(ParseError):
    """A graph6 stream line failed to parse; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class SplitMix64:
    """Portable 64-bit generator (splitmix64), part of the seeding contract.

    State advances by the golden-gamma constant 0x9E3779B97F4A7C15; outputs
    are finalized with the standard 30/27/31 xor-shift-multiply chain
    (multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB).  Identical seeds
    produce identical streams on every platform.
    """

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self._MASK

    def next_uint64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & self._MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def next_unit(self) -> float:
        # 53-bit mantissa in [0, 1).
        return (self.next_uint64() >> 11) * (2.0**-53)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Independent coin flips per vertex pair, in lexicographic pair order.

    Identical ``(n, p, seed)`` produce the identical graph on every platform.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_unit() < p:
                edges.append(Edge(u, v))
    return Graph(n, tuple(edges))


def _graph_from_mask(n: int, mask: int) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = tuple(Edge(u, v) for k, (u, v) in enumerate(pairs) if mask >> k & 1)
    return Graph(n, edges)


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All labeled simple graphs on ``0..n-1`` in edge-bitmask order.

    Bit ``k`` of the mask is the ``k``-th vertex pair in lexicographic
    order; masks ascend from 0.
    """
    if not 0 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(
            f"exhaustive enumeration supports 0 <= n <= {MAX_EXHAUSTIVE_N}, got {n}"
        )
    for mask in range(1 << (n * (n - 1) // 2)):
        yield _graph_from_mask(n, mask)


def ingest_graph6_stream(
    reader: IO[str] | Iterable[str], *, policy: str = "strict"
) -> Iterator[Graph]:
    """Lazily parse newline-delimited graph6 lines, in input order.

    Blank lines are skipped.  ``policy="strict"`` raises
    :class:`StreamParseError` naming the offending line; ``policy="skip"``
    drops malformed lines.
    """
    if policy not in ("strict", "skip"):
        raise ValueError(f"unknown policy {policy!r}")
    for line_number, line in enumerate(reader, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            yield parse_graph6(stripped)
        except ParseError as exc:
            if policy == "strict":
                raise StreamParseError(line_number, str(exc)) from exc


# ---------------------------------------------------------------------------
# Property evaluation
# ---------------------------------------------------------------------------


class _Facts:
    """Lazily computed per-graph facts shared across property checks."""

    def __init__(self, g: Graph):
        self.g = g

    @cached_property
    def nu(self) -> int:
        return matching_number(self.g)

    @cached_property
    def within_guard(self) -> bool:
        return len(self.g.edges) <= ENUMERATION_EDGE_LIMIT

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def covered(self) -> bool:
        return is_matching_covered(self.g)

    @cached_property
    def minimal_covered(self) -> bool:
        return self.covered and all(
            not is_matching_covered(delete_edge(self.g, e)) for e in self.g.edges
        )

    @cached_property
    def perfect(self) -> bool:
        return self.g.n % 2 == 0 and 2 * self.nu == self.g.n

    @cached_property
    def no_isolated(self) -> bool:
        return all(self.g.adjacency[v] for v in range(self.g.n))

    @cached_property
    def ms(self) -> MatchingSet:
        return enumerate_maximum_matchings(self.g)

    @cached_property
    def parts(self):
        return bipartition(self.g)

    @cached_property
    def missed_by_some(self) -> frozenset[int]:
        covered_everywhere = set(range(self.g.n))
        missed: set[int] = set()
        for f in self.ms:
            missing = covered_everywhere - f.covered_vertices()
            missed.update(missing)
        return frozenset(missed)


def _check_theorem(facts: _Facts) -> tuple[bool, bool]:
    in_class = bool(facts.g.edges) and facts.no_isolated and facts.minimal_covered
    if not in_class:
        return False, True
    return True, facts.perfect


def _check_lemma1(facts: _Facts) -> tuple[bool, bool]:
    in_class = facts.connected and facts.covered and not facts.perfect
    if not in_class:
        return False, True
    g = facts.g
    for e in g.edges:
        # mu values are nonnegative, so min == 0 iff some matching scores 0.
        if not any(mu(g, e, f) == 0 for f in facts.ms):
            return True, False
    return True, True


def _check_lemma2(facts: _Facts) -> tuple[bool, bool]:
    in_class = facts.connected and facts.covered and not facts.perfect
    if not in_class:
        return False, True
    seen: dict[tuple[int, ...], Edge] = {}
    for e in facts.g.edges:
        key = tuple(
            i for i, f in enumerate(facts.ms) if e in f
        )
        if key in seen:
            return True, False
        seen[key] = e
    return True, True


def _check_corollary(facts: _Facts) -> tuple[bool, bool]:
    in_class = facts.connected and facts.covered and facts.parts is not None
    if not in_class:
        return False, True
    missed = facts.missed_by_some
    # The bipartition is an unordered pair, so the implication is checked
    # on both parts.
    for part in facts.parts:
        if part & missed and not part <= missed:
            return True, False
    return True, True


def _check_oracle_nu(facts: _Facts) -> tuple[bool, bool]:
    if not facts.within_guard:
        return False, True
    return True, facts.nu == brute_force_matching_number(facts.g)


def _check_oracle_allowed(facts: _Facts) -> tuple[bool, bool]:
    if not facts.within_guard:
        return False, True
    return True, allowed_edges(facts.g) == allowed_edges_enumerated(facts.g)


_CHECKS = {
    "theorem": _check_theorem,
    "lemma1": _check_lemma1,
    "lemma2": _check_lemma2,
    "corollary": _check_corollary,
    "oracle-nu": _check_oracle_nu,
    "oracle-allowed": _check_oracle_allowed,
}


def _covered_by_enumeration(g: Graph) -> bool:
    return set(allowed_edges_enumerated(g)) == set(g.edges)


def _reverify_failure(g: Graph, prop: str) -> None:
    """Confirm a failure using only enumeration-based predicates.

    The fast predicates (blossom matching numbers, the nu-difference allowed
    test) decide class membership during the sweep; before a counterexample
    is reported, class membership and the property itself are recomputed
    from scratch with exhaustive enumeration.  A disagreement between the
    two routes means the tool itself is broken, which is raised rather than
    reported as a counterexample.
    """
    if prop in ("oracle-nu", "oracle-allowed"):
        return  # these properties *are* route comparisons
    if prop == "theorem":
        in_class = (
            bool(g.edges)
            and all(g.adjacency[v] for v in range(g.n))
            and _covered_by_enumeration(g)
            and all(
                not _covered_by_enumeration(delete_edge(g, e)) for e in g.edges
            )
        )
        nu = brute_force_matching_number(g)
        passed = g.n % 2 == 0 and 2 * nu == g.n
    else:
        covered = _covered_by_enumeration(g)
        nu = brute_force_matching_number(g)
        perfect = g.n % 2 == 0 and 2 * nu == g.n
        if prop == "corollary":
            in_class = is_connected(g) and covered and bipartition(g) is not None
        else:
            in_class = is_connected(g) and covered and not perfect
        facts = _Facts(g)
        _, passed = _CHECKS[prop](facts) if in_class else (False, True)
    if not in_class or passed:
        raise RuntimeError(
            f"fast path and enumeration oracle disagree on property "
            f"{prop!r} for graph {to_graph6(g)}"
        )


def _evaluate_graph(
    g: Graph, properties: Sequence[str]
) -> dict[str, tuple[bool, bool]]:
    facts = _Facts(g)
    return {prop: _CHECKS[prop](facts) for prop in properties}


# ---------------------------------------------------------------------------
# Sweep configuration, tallies, and execution
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    """Population and property selection for one sweep.

    Exhaustive mode walks all labeled simple graphs with ``0 <= n <=
    max_n``; random mode draws ``sample_count`` graphs on ``n`` vertices
    with edge probability ``edge_probability``, sample ``i`` seeded with
    ``seed + i``.
    """

    mode: str
    properties: tuple[str, ...]
    max_n: int | None = None
    n: int | None = None
    edge_probability: float | None = None
    sample_count: int | None = None
    seed: int | None = None
    jobs: int = 1

    def validated(self) -> "SweepConfig":
        if self.mode not in (EXHAUSTIVE_MODE, RANDOM_MODE):
            raise ValueError(f"unknown sweep mode {self.mode!r}")
        if not self.properties:
            raise ValueError("at least one property is required")
        unknown = [p for p in self.properties if p not in PROPERTY_NAMES]
        if unknown:
            raise ValueError(f"unknown properties {unknown}")
        ordered = tuple(p for p in PROPERTY_NAMES if p in set(self.properties))
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if self.mode == EXHAUSTIVE_MODE:
            if self.max_n is None or not 0 <= self.max_n <= MAX_EXHAUSTIVE_N:
                raise ValueError(
                    f"exhaustive mode requires 0 <= max_n <= {MAX_EXHAUSTIVE_N}"
                )
            if self.edge_probability is not None or self.sample_count is not None:
                raise ValueError(
                    "edge_probability/sample_count apply to random mode only"
                )
        else:
            if self.n is None or self.n < 0:
                raise ValueError("random mode requires a nonnegative n")
            if self.edge_probability is None or not 0 <= self.edge_probability <= 1:
                raise ValueError("random mode requires edge_probability in [0, 1]")
            if self.sample_count is None or self.sample_count < 0:
                raise ValueError("random mode requires a nonnegative sample_count")
            if self.seed is None:
                raise ValueError("random mode requires a seed")
        return SweepConfig(
            mode=self.mode,
            properties=ordered,
            max_n=self.max_n,
            n=self.n,
            edge_probability=self.edge_probability,
            sample_count=self.sample_count,
            seed=self.seed,
            jobs=self.jobs,
        )


@dataclass(frozen=True)
class SweepReport:
    """Outcome of a sweep: tallies per property and the minimal counterexample.

    ``first_counterexample`` is ``None`` exactly when no property failed;
    otherwise it is the failing ``(property, graph6)`` pair minimal under
    ``(n, graph6, property)`` ordering, independent of worker count and
    scheduling.  ``wall_time`` is elapsed seconds and is the only field that
    varies between runs.
    """

    population: int
    in_class: dict[str, int]
    passes: dict[str, int]
    failures: dict[str, int]
    first_counterexample: tuple[str, str] | None
    wall_time: float

    @property
    def total_failures(self) -> int:
        return sum(self.failures.values())

    def to_payload(self, include_wall_time: bool = True) -> dict:
        counterexample = None
        if self.first_counterexample is not None:
            prop, code = self.first_counterexample
            counterexample = {"property": prop, "graph6": code}
        payload = {
            "population": self.population,
            "in_class": dict(self.in_class),
            "passes": dict(self.passes),
            "failures": dict(self.failures),
            "first_counterexample": counterexample,
        }
        if include_wall_time:
            payload["wall_time"] = self.wall_time
        return payload


# A worker tally: population, then per-property dicts, then the minimal
# counterexample key (n, graph6, property) or None.
_Tally = tuple[int, dict[str, int], dict[str, int], dict[str, int],
               tuple[int, str, str] | None]


def _empty_tally(properties: Sequence[str]) -> _Tally:
    zeros = {p: 0 for p in properties}
    return 0, dict(zeros), dict(zeros), dict(zeros), None


def _tally_graphs(graphs: Iterable[Graph], properties: Sequence[str]) -> _Tally:
    population, in_class, passes, failures, best = _empty_tally(properties)
    for g in graphs:
        population += 1
        for prop, (member, passed) in _evaluate_graph(g, properties).items():
            if not member:
                continue
            in_class[prop] += 1
            if passed:
                passes[prop] += 1
                continue
            _reverify_failure(g, prop)
            failures[prop] += 1
            key = (g.n, to_graph6(g), prop)
            if best is None or key < best:
                best = key
    return population, in_class, passes, failures, best


def _merge_tallies(parts: Iterable[_Tally], properties: Sequence[str]) -> _Tally:
    population, in_class, passes, failures, best = _empty_tally(properties)
    for pop, member, ok, bad, candidate in parts:
        population += pop
        for p in properties:
            in_class[p] += member[p]
            passes[p] += ok[p]
            failures[p] += bad[p]
        if candidate is not None and (best is None or candidate < best):
            best = candidate
    return population, in_class, passes, failures, best


def _exhaustive_sizes(max_n: int) -> list[tuple[int, int]]:
    return [(n, 1 << (n * (n - 1) // 2)) for n in range(max_n + 1)]


def _population_size(cfg: SweepConfig) -> int:
    if cfg.mode == EXHAUSTIVE_MODE:
        return sum(count for _, count in _exhaustive_sizes(cfg.max_n))
    return cfg.sample_count


def _graphs_for_range(cfg: SweepConfig, lo: int, hi: int) -> Iterator[Graph]:
    if cfg.mode == EXHAUSTIVE_MODE:
        offset = 0
        for n, count in _exhaustive_sizes(cfg.max_n):
            start = max(lo, offset)
            stop = min(hi, offset + count)
            for idx in range(start, stop):
                yield _graph_from_mask(n, idx - offset)
            offset += count
    else:
        for i in range(lo, hi):
            yield random_graph(cfg.n, cfg.edge_probability, cfg.seed + i)


def _sweep_chunk(args: tuple[SweepConfig, int, int]) -> _Tally:
    cfg, lo, hi = args
    return _tally_graphs(_graphs_for_range(cfg, lo, hi), cfg.properties)


def _chunk_ranges(total: int, jobs: int) -> list[tuple[int, int]]:
    chunks = max(1, min(total, jobs * 4))
    step = -(-total // chunks)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _report_from_tally(tally: _Tally, properties: Sequence[str],
                       wall_time: float) -> SweepReport:
    population, in_class, passes, failures, best = tally
    counterexample = None if best is None else (best[2], best[1])
    return SweepReport(
        population=population,
        in_class={p: in_class[p] for p in properties},
        passes={p: passes[p] for p in properties},
        failures={p: failures[p] for p in properties},
        first_counterexample=counterexample,
        wall_time=wall_time,
    )


def run_sweep(cfg: SweepConfig) -> SweepReport:
    """Evaluate the configured properties over the configured population.

    Work is partitioned by graph index ranges; the tallies and the minimal
    counterexample are identical no matter how many workers run them.
    """
    cfg = cfg.validated()
    start = time.perf_counter()
    total = _population_size(cfg)
    if cfg.jobs == 1 or total < 2:
        tally = _sweep_chunk((cfg, 0, total))
    else:
        ranges = _chunk_ranges(total, cfg.jobs)
        with Pool(processes=cfg.jobs) as pool:
            parts = pool.map(_sweep_chunk, [(cfg, lo, hi) for lo, hi in ranges])
        tally = _merge_tallies(parts, cfg.properties)
    return _report_from_tally(tally, cfg.properties, time.perf_counter() - start)


def sweep_graphs(
    graphs: Iterable[Graph], properties: Sequence[str], jobs: int = 1
) -> SweepReport:
    """Sweep an explicit population (e.g. an ingested graph6 stream)."""
    ordered = tuple(p for p in PROPERTY_NAMES if p in set(properties))
    unknown = [p for p in properties if p not in PROPERTY_NAMES]
    if unknown:
        raise ValueError(f"unknown properties {unknown}")
    if not ordered:
        raise ValueError("at least one property is required")
    population = tuple(graphs)
    start = time.perf_counter()
    if jobs <= 1 or len(population) < 2:
        tally = _tally_graphs(population, ordered)
    else:
        ranges = _chunk_ranges(len(population), jobs)
        with Pool(processes=jobs) as pool:
            parts = pool.starmap(
                _tally_slice,
                [(population[lo:hi], ordered) for lo, hi in ranges],
            )
        tally = _merge_tallies(parts, ordered)
    return _report_from_tally(tally, ordered, time.perf_counter() - start)


def _tally_slice(graphs: Sequence[Graph], properties: Sequence[str]) -> _Tally:
    return _tally_graphs(graphs, properties)
