"""Simple undirected graphs on dense integer vertices, plus text I/O.

Vertices of a graph on n vertices are exactly 0..n-1. Edges are unordered
pairs stored normalized as (u, v) with u < v, no loops, no duplicates, in
ascending order. Vertex sets returned by queries are sorted tuples so that
all output is reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable


class GraphError(ValueError):
    """Invalid graph construction, query, or text input."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with a normalized edge list."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        neighbors: list[list[int]] = [[] for _ in range(self.n)]
        prev = None
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise GraphError(
                    f"edge {e} is not normalized for a graph on {self.n} vertices"
                )
            if prev is not None and e <= prev:
                raise GraphError(f"edge list not sorted/deduplicated at {e}")
            prev = e
            neighbors[u].append(v)
            neighbors[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(ns)) for ns in neighbors))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from raw vertex pairs, normalizing and validating.

    Rejects endpoints outside 0..n-1, loops, and duplicate edges (in either
    orientation), naming the offending pair in the error message.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v}) is not allowed")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(e)
        edges.append(e)
    return Graph(n, tuple(sorted(edges)))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(len(ns) for ns in g.adj)


@lru_cache(maxsize=None)
def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Components as sorted vertex tuples, ordered by smallest member."""
    if g.n == 0:
        raise GraphError("the empty graph has no components")
    seen = [False] * g.n
    comps: list[tuple[int, ...]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


@lru_cache(maxsize=None)
def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two color classes of a proper 2-coloring, or None if none exists.

    Coloring starts from the smallest vertex of each component with color 0,
    so the class containing vertex 0 is always listed first.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    side0 = tuple(v for v in range(g.n) if color[v] == 0)
    side1 = tuple(v for v in range(g.n) if color[v] == 1)
    return side0, side1


def induced_subgraph(g: Graph, a: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by `a`, densely reindexed.

    Returns (subgraph, mapping) where mapping[i] is the original vertex that
    became vertex i.
    """
    keep = sorted(set(a))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Graph(len(keep), tuple(sorted(edges))), tuple(keep)


def boundary_edges(
    g: Graph, a: Iterable[int], b: Iterable[int]
) -> tuple[tuple[int, int], ...]:
    """Edges of g with one endpoint in `a` and the other in `b`."""
    sa, sb = set(a), set(b)
    for v in sa | sb:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    if sa & sb:
        raise GraphError(f"vertex sets overlap on {sorted(sa & sb)}")
    return tuple(
        e for e in g.edges if (e[0] in sa and e[1] in sb) or (e[0] in sb and e[1] in sa)
    )


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    First non-comment line is `n m`; the next m non-comment lines are `u v`
    with 0-based endpoints. Lines starting with `#` and blank lines are
    ignored.
    """
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise GraphError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"header must be two integers, got {rows[0]!r}") from None
    if m != len(rows) - 1:
        raise GraphError(f"header claims {m} edges but {len(rows) - 1} edge lines follow")
    pairs = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"edge line must be 'u v', got {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"edge line must be two integers, got {ln!r}") from None
    return from_edge_list(n, pairs)


def serialize_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    """Canonical text form; parse_edge_list(serialize_edge_list(g)) == g."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def save_graph(g: Graph, path: str, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_edge_list(g, comments))
