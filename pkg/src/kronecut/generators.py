"""Deterministic graph family generators and exhaustive enumeration."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .graphs import Graph, GraphError, from_edge_list, is_connected


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return from_edge_list(n, itertools.combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError(f"complete bipartite needs both sides >= 1, got {m}, {n}")
    return from_edge_list(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def hypercube(d: int) -> Graph:
    if d < 0:
        raise GraphError(f"hypercube needs dimension >= 0, got {d}")
    n = 1 << d
    edges = [(v, v | (1 << b)) for v in range(n) for b in range(d) if not v >> b & 1]
    return from_edge_list(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return from_edge_list(10, outer + inner + spokes)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with a fixed pair order, so output depends only on (n, p, seed)."""
    if n < 1:
        raise GraphError(f"random graph needs n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return from_edge_list(n, edges)


_FAMILIES = {
    "path": lambda a: path(a["n"]),
    "cycle": lambda a: cycle(a["n"]),
    "complete": lambda a: complete(a["n"]),
    "complete_bipartite": lambda a: complete_bipartite(a["m"], a["n"]),
    "hypercube": lambda a: hypercube(a["d"]),
    "petersen": lambda a: petersen(),
    "random": lambda a: random_graph(a["n"], a["p"], a["seed"]),
}


def generate(family: str, **params) -> Graph:
    """Dispatch by family name; see _FAMILIES for the accepted names."""
    if family not in _FAMILIES:
        raise GraphError(
            f"unknown family {family!r}; choose from {', '.join(sorted(_FAMILIES))}"
        )
    try:
        return _FAMILIES[family](params)
    except KeyError as exc:
        raise GraphError(f"family {family!r} needs parameter {exc.args[0]!r}") from None


def enumerate_connected(n: int, cap: int = 5) -> Iterator[Graph]:
    """Every labeled connected simple graph on n vertices, exactly once.

    Enumeration is by ascending bitmask over the lexicographic edge order of
    the complete graph, so the stream is deterministic. No isomorphism
    reduction is applied.
    """
    if not 1 <= n <= cap:
        raise GraphError(f"enumeration supports 1 <= n <= {cap}, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = from_edge_list(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if is_connected(g):
            yield g


def graph_id(g: Graph) -> str:
    """Stable identifier: vertex count plus hex edge bitmask over K_n's edges."""
    rank = {p: i for i, p in enumerate(itertools.combinations(range(g.n), 2))}
    mask = sum(1 << rank[e] for e in g.edges)
    return f"n{g.n}x{mask:X}"
