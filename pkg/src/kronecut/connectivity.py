"""Exact global edge connectivity with two independent implementations.

edge_connectivity runs a deterministic minimum-cut-phase contraction
(Stoer-Wagner on unit weights). brute_force_min_cut enumerates all
2^(n-1) bipartitions and serves as the oracle. enumerate_min_cuts lists
every minimum cut whose two sides are connected, deduplicated up to
swapping the sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .graphs import Graph, GraphError, boundary_edges, is_connected
from .masks import cross_sizes, lex_min_mask, vertices_of

BRUTE_FORCE_CAP = 20


@dataclass(frozen=True)
class Cut:
    """A vertex bipartition (black, white) together with its boundary edges."""

    black: tuple[int, ...]
    white: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CutResult:
    lam: int
    witness: Cut | None


def cut_from_black(g: Graph, black: Iterable[int]) -> Cut:
    """Cut determined by its black side; the edge set is the boundary."""
    bset = sorted(set(black))
    if not bset or len(bset) == g.n:
        raise GraphError("cut sides must both be nonempty")
    white = tuple(v for v in range(g.n) if v not in set(bset))
    return Cut(tuple(bset), white, boundary_edges(g, bset, white))


def _min_cut_phases(g: Graph) -> tuple[int, list[int]]:
    # Stoer-Wagner, unit weights. Ties in the maximum-adjacency selection go
    # to the smallest supernode id, so the run is fully deterministic.
    n = g.n
    w = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        w[u][v] = 1
        w[v][u] = 1
    groups: list[list[int]] = [[v] for v in range(n)]
    active = list(range(n))
    best_weight: int | None = None
    best_group: list[int] = []
    while len(active) > 1:
        start = active[0]
        added = [start]
        conn = {v: w[start][v] for v in active[1:]}
        cut_of_phase = 0
        while conn:
            nxt = max(conn, key=lambda v: (conn[v], -v))
            cut_of_phase = conn.pop(nxt)
            added.append(nxt)
            for v in conn:
                conn[v] += w[nxt][v]
        s, t = added[-2], added[-1]
        if best_weight is None or cut_of_phase < best_weight:
            best_weight = cut_of_phase
            best_group = list(groups[t])
        groups[s].extend(groups[t])
        for v in active:
            if v != s and v != t:
                w[s][v] += w[t][v]
                w[v][s] = w[s][v]
        active.remove(t)
    assert best_weight is not None
    return best_weight, best_group


@lru_cache(maxsize=None)
def edge_connectivity(g: Graph) -> CutResult:
    """Exact edge connectivity with a witness minimum cut.

    Deterministic across runs. Disconnected graphs have connectivity 0 and
    no witness. The witness black side is normalized to contain vertex 0.
    """
    if g.n < 2:
        raise GraphError("edge connectivity needs at least 2 vertices")
    if not is_connected(g):
        return CutResult(0, None)
    lam, group = _min_cut_phases(g)
    black = set(group)
    if 0 not in black:
        black = set(range(g.n)) - black
    return CutResult(lam, cut_from_black(g, black))


def _black_masks(n: int) -> np.ndarray:
    # all bipartitions with vertex 0 black, one per swap class; the final
    # mask (everything black) is kept so callers can slice it off
    ks = np.arange(1 << (n - 1), dtype=np.int64)
    return (ks << 1) | 1


def brute_force_min_cut(g: Graph, cap: int = BRUTE_FORCE_CAP) -> CutResult:
    """Oracle: minimum boundary over all bipartitions.

    Ties are broken to the black set containing vertex 0 whose sorted vertex
    tuple is lexicographically smallest.
    """
    if not 2 <= g.n <= cap:
        raise GraphError(f"brute force supports 2 <= n <= {cap}, got {g.n}")
    if not is_connected(g):
        return CutResult(0, None)
    masks = _black_masks(g.n)
    sizes = cross_sizes(g.edges, masks, g.n)
    lam = int(sizes[:-1].min())
    cands = masks[:-1][sizes[:-1] == lam]
    best = lex_min_mask(cands)
    return CutResult(lam, cut_from_black(g, vertices_of(best)))


def _side_connected(g: Graph, side: set[int]) -> bool:
    start = next(iter(side))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y in side and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(side)


def enumerate_min_cuts(g: Graph, cap: int = BRUTE_FORCE_CAP) -> list[Cut]:
    """All minimum cuts whose sides are both connected, vertex 0 black.

    In a connected graph every bipartition of minimum boundary automatically
    has connected sides: a side splitting into components would make each
    component's own boundary a cut, and their sizes sum to the minimum.
    The explicit filter still runs as validation and to give disconnected
    inputs a sensible (usually empty) answer.
    """
    if not 2 <= g.n <= cap:
        raise GraphError(f"minimum-cut enumeration supports 2 <= n <= {cap}, got {g.n}")
    masks = _black_masks(g.n)
    sizes = cross_sizes(g.edges, masks, g.n)
    lam = int(sizes[:-1].min())
    cuts = []
    for k in masks[:-1][sizes[:-1] == lam]:
        black = set(vertices_of(int(k)))
        white = set(range(g.n)) - black
        if _side_connected(g, black) and _side_connected(g, white):
            cuts.append(cut_from_black(g, black))
    cuts.sort(key=lambda c: c.black)
    return cuts
