"""Direct (tensor) products of graphs and their layer structure.

The product of G and H has vertex set V(G) x V(H); (x1, y1) and (x2, y2)
are adjacent exactly when x1x2 is an edge of G and y1y2 is an edge of H.
Product vertices are encoded as g * nH + h, so every H-layer is a
contiguous index range.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, bipartition, is_connected


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    ng: int
    nh: int

    def encode(self, gv: int, hv: int) -> int:
        if not (0 <= gv < self.ng and 0 <= hv < self.nh):
            raise GraphError(f"factor vertex ({gv}, {hv}) out of range")
        return gv * self.nh + hv

    def decode(self, idx: int) -> tuple[int, int]:
        if not 0 <= idx < self.graph.n:
            raise GraphError(f"product vertex {idx} out of range")
        return divmod(idx, self.nh)


@dataclass(frozen=True)
class Layer:
    kind: str  # "g" for a G-layer (fixed h), "h" for an H-layer (fixed g)
    anchor: int
    vertices: tuple[int, ...]


def direct_product(g: Graph, h: Graph) -> ProductGraph:
    """Construct G x H. Has exactly 2 |E(G)| |E(H)| edges."""
    if g.n == 0 or h.n == 0:
        raise GraphError("direct product needs nonempty factors")
    nh = h.n
    edges = []
    for a, b in g.edges:
        for c, d in h.edges:
            e1 = (a * nh + c, b * nh + d)
            e2 = (a * nh + d, b * nh + c)
            edges.append(e1 if e1[0] < e1[1] else (e1[1], e1[0]))
            edges.append(e2 if e2[0] < e2[1] else (e2[1], e2[0]))
    return ProductGraph(Graph(g.n * h.n, tuple(sorted(edges))), g.n, h.n)


def layer(p: ProductGraph, kind: str, anchor: int) -> Layer:
    """H-layer at a fixed G-vertex (kind "h") or G-layer at a fixed H-vertex."""
    if kind == "h":
        if not 0 <= anchor < p.ng:
            raise GraphError(f"anchor {anchor} outside 0..{p.ng - 1}")
        verts = tuple(anchor * p.nh + y for y in range(p.nh))
    elif kind == "g":
        if not 0 <= anchor < p.nh:
            raise GraphError(f"anchor {anchor} outside 0..{p.nh - 1}")
        verts = tuple(x * p.nh + anchor for x in range(p.ng))
    else:
        raise GraphError(f"layer kind must be 'g' or 'h', got {kind!r}")
    return Layer(kind, anchor, verts)


def weichsel_connected(g: Graph, h: Graph) -> bool:
    """Whether G x H is connected, decided from the factors alone.

    Connected iff both factors are connected and at least one is
    nonbipartite. Products with an edgeless factor are edgeless and count as
    connected only when they consist of a single vertex.
    """
    if g.n == 0 or h.n == 0:
        raise GraphError("connectivity of a product with an empty factor is undefined")
    if g.n * h.n == 1:
        return True
    if g.m == 0 or h.m == 0:
        return False
    return (
        is_connected(g)
        and is_connected(h)
        and (bipartition(g) is None or bipartition(h) is None)
    )


def k2_components(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two components of G x K2 for connected bipartite G.

    With bipartition A, B of G and K2 = {0, 1}, the components are
    (A x {0}) u (B x {1}) and (A x {1}) u (B x {0}), returned as sorted
    product indices under the g * 2 + h encoding.
    """
    if not is_connected(g):
        raise GraphError("k2_components needs a connected graph")
    parts = bipartition(g)
    if parts is None:
        raise GraphError("k2_components needs a bipartite graph")
    a, b = parts
    c1 = sorted([v * 2 for v in a] + [v * 2 + 1 for v in b])
    c2 = sorted([v * 2 + 1 for v in a] + [v * 2 for v in b])
    return tuple(c1), tuple(c2)
