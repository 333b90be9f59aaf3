"""Fixture graphs shared across the test modules."""

from matchcover import Graph


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


K2 = complete_graph(2)
P3 = path_graph(3)
K3 = complete_graph(3)
P4 = path_graph(4)
C4 = cycle_graph(4)
K4 = complete_graph(4)
STAR3 = star_graph(3)
C6 = cycle_graph(6)
TWO_K2 = Graph(4, [(0, 1), (2, 3)])
