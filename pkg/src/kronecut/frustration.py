"""Bipartite edge frustration, exact max-cut, and the partition functional rho.

The frustration phi(G) is the minimum number of edges whose deletion leaves
a bipartite graph; it is |E(G)| minus the maximum cut. The functional

    rho(G) = min over partitions {A, B} of V(G) with A nonempty of
             2 phi(G[A]) + |[A, B]|

where [A, B] is the set of edges between A and B, and

    psi(G, H) = rho(G) |E(H)| + 2 phi(H) |E(G)|.

All three are computed exactly by exhaustive search, vectorized so that
sweeps over tens of thousands of small graphs stay fast. rho enumerates
colorings of V(G) with three colors (A1, A2, B): an edge inside A costs 2
when monochromatic under (A1, A2) and 0 otherwise, an edge between A and B
costs 1, and an edge inside B costs 0. Minimizing over colorings with A
nonempty equals the definition above, because for fixed {A, B} the best
(A1, A2) split realizes phi(G[A]).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import Graph, GraphError
from .masks import cross_sizes, lex_min_mask, vertices_of

MAX_CUT_CAP = 24
RHO_CAP = 16

_CHUNK = 1 << 18


@dataclass(frozen=True)
class FrustrationResult:
    phi: int
    witness_coloring: tuple[tuple[int, ...], tuple[int, ...]]
    frustrated_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class RhoResult:
    rho: int
    witness_a: tuple[int, ...]
    witness_b: tuple[int, ...]
    witness_a1: tuple[int, ...]
    witness_a2: tuple[int, ...]


@dataclass(frozen=True)
class PsiResult:
    value: int
    rho_g: "RhoResult"
    frustration_h: "FrustrationResult"


def _vertex_tuple_key(mask: int) -> tuple[int, ...]:
    return vertices_of(mask)


@lru_cache(maxsize=None)
def max_cut_exact(g: Graph, cap: int = MAX_CUT_CAP) -> tuple[int, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Exact maximum cut value and a deterministic witness bipartition.

    The witness is the optimum side containing vertex 0 with the
    lexicographically smallest sorted vertex tuple.
    """
    if g.n > cap:
        raise GraphError(f"max-cut cap exceeded: n={g.n} > {cap}")
    if g.n == 0:
        return 0, ((), ())
    if g.n == 1:
        return 0, ((0,), ())
    total = 1 << (g.n - 1)
    best_val = -1
    best_mask: int | None = None
    for start in range(0, total, _CHUNK):
        ks = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        masks = (ks << 1) | 1
        cross = cross_sizes(g.edges, masks, g.n)
        mx = int(cross.max())
        if mx < best_val:
            continue
        cands = masks[cross == mx]
        chunk_best = lex_min_mask(cands)
        if mx > best_val:
            best_val, best_mask = mx, chunk_best
        else:
            best_mask = min(best_mask, chunk_best, key=_vertex_tuple_key)
    side1 = vertices_of(best_mask)
    side2 = tuple(v for v in range(g.n) if v not in set(side1))
    return best_val, (side1, side2)


@lru_cache(maxsize=None)
def frustration(g: Graph, cap: int = MAX_CUT_CAP) -> FrustrationResult:
    """phi(G) = |E(G)| - maxcut(G), with the witness 2-coloring.

    The frustrated edges are the ones monochromatic under the witness;
    deleting them leaves a bipartite graph. Edgeless graphs have phi 0.
    """
    value, (c1, c2) = max_cut_exact(g, cap=cap)
    s1 = set(c1)
    frustrated = tuple(e for e in g.edges if (e[0] in s1) == (e[1] in s1))
    return FrustrationResult(g.m - value, (c1, c2), frustrated)


# cost of an edge by endpoint colors 0 = A1, 1 = A2, 2 = B
_RHO_COST = np.array([[2, 0, 1], [0, 2, 1], [1, 1, 0]], dtype=np.uint8)


@lru_cache(maxsize=None)
def rho(g: Graph, cap: int = RHO_CAP) -> RhoResult:
    """Exact rho(G) with the full witness chain (A, B, A1, A2).

    Exhausts all 3^n colorings. Ties are broken to the smallest A bitmask,
    then the smallest A1 bitmask, so witnesses are reproducible.
    """
    n = g.n
    if n < 1:
        raise GraphError("rho needs at least one vertex")
    if n > cap:
        raise GraphError(f"rho cap exceeded: n={n} > {cap}")
    total = 3**n
    powers = [3**v for v in range(n)]
    best_val: int | None = None
    best_key: tuple[int, int] | None = None
    for start in range(0, total, _CHUNK):
        ks = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        cols = [(ks // powers[v]) % 3 for v in range(n)]
        cost = np.zeros(len(ks), dtype=np.uint32)
        for u, v in g.edges:
            cost += _RHO_COST[cols[u], cols[v]]
        # the single all-B coloring (A empty) is not a valid partition
        cost[ks == total - 1] = np.iinfo(np.uint32).max
        cmin = int(cost.min())
        if best_val is not None and cmin > best_val:
            continue
        sel = cost == cmin
        a_mask = np.zeros(int(sel.sum()), dtype=np.int64)
        a1_mask = np.zeros_like(a_mask)
        for v in range(n):
            cv = cols[v][sel]
            a_mask |= (cv != 2).astype(np.int64) << v
            a1_mask |= (cv == 0).astype(np.int64) << v
        order = np.lexsort((a1_mask, a_mask))
        key = (int(a_mask[order[0]]), int(a1_mask[order[0]]))
        if best_val is None or cmin < best_val or key < best_key:
            best_val, best_key = cmin, key
    assert best_val is not None and best_key is not None
    amask, a1mask = best_key
    a = vertices_of(amask)
    a1 = vertices_of(a1mask)
    a2 = vertices_of(amask & ~a1mask)
    b = tuple(v for v in range(n) if not amask >> v & 1)
    return RhoResult(best_val, a, b, a1, a2)


def psi(g: Graph, h: Graph, rho_cap: int = RHO_CAP, phi_cap: int = MAX_CUT_CAP) -> PsiResult:
    """psi(G, H) = rho(G) |E(H)| + 2 phi(H) |E(G)| with its two components."""
    r = rho(g, cap=rho_cap)
    f = frustration(h, cap=phi_cap)
    return PsiResult(r.rho * h.m + 2 * f.phi * g.m, r, f)
