"""Bitmask helpers for vertex subsets (vertex v corresponds to bit v)."""

from __future__ import annotations

from typing import Iterable

import numpy as np


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def cross_sizes(edges: Iterable[tuple[int, int]], ks: np.ndarray, n: int) -> np.ndarray:
    """Boundary size of each bipartition in `ks` (vertex v on side 1 iff bit v)."""
    side = np.empty((len(ks), n), dtype=np.uint8)
    for v in range(n):
        side[:, v] = (ks >> v) & 1
    out = np.zeros(len(ks), dtype=np.uint32)
    for u, v in edges:
        out += side[:, u] ^ side[:, v]
    return out


def lex_min_mask(cands: np.ndarray) -> int:
    """The candidate whose sorted vertex tuple is lexicographically smallest.

    Tuple order compares ascending vertex lists element by element, with a
    full prefix beating any extension: (0, 1) < (0, 1, 2) < (0, 2).
    """
    cands = np.unique(np.asarray(cands, dtype=np.int64))
    if len(cands) == 0:
        raise ValueError("no candidate masks")
    consumed = 0
    while True:
        rem = cands & ~consumed
        if (rem == 0).any():
            # survivors all contain `consumed`; a zero remainder is exactly it
            return int(consumed)
        lows = (rem & -rem).astype(np.float64)
        pos = np.log2(lows).astype(np.int64)
        b = int(pos.min())
        cands = cands[pos == b]
        consumed |= 1 << b
