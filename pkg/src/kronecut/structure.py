"""Classify cuts of a direct product into eight structural patterns.

For a cut of G x H with sides black and white, the patterns are, with the
two colors interchangeable:

  1  black is a union of H-layers: black = B' x V(H)
  2  black is a union of G-layers: black = V(G) x B''
  3  one side is a single vertex
  4  every layer in both directions is split, and the splits follow a
     proper 2-coloring of one factor: black = (A1 x C) u (A2 x D) where
     (C, D) 2-colors H and A1 u A2 partitions V(G), or the transposed
     form over a 2-coloring of G
  5  black = (A1 x C) u (A2 x D) for a 2-coloring (C, D) of H, with at
     least one entirely white H-layer and no entirely black one
  6  transposed 5: black = (X x C1) u (Y x C2) for a 2-coloring (X, Y)
     of G, with at least one entirely white G-layer and no black one
  7  as 5, but entirely black H-layers are present as well
  8  as 6, but entirely black G-layers are present as well

A cut may match several patterns. A cut matching none is "unstructured";
for minimum cuts this can only happen when a factor is a 3-vertex path or
a 4-cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .connectivity import BRUTE_FORCE_CAP, Cut, enumerate_min_cuts
from .graphs import Graph, GraphError, is_connected
from .product import direct_product

LOW_TYPES = frozenset({1, 2, 3, 4, 5, 6})


@dataclass(frozen=True)
class CutTypeSet:
    matched: frozenset[int]
    canonical: int | None
    witnesses: dict[int, dict[str, Any]]


@dataclass(frozen=True)
class StructureReport:
    lam: int
    classifications: tuple[tuple[Cut, CutTypeSet], ...]
    unstructured: tuple[Cut, ...]
    exception_factor: bool
    violation: bool


def _validate_partition(n: int, cut: Cut) -> None:
    black, white = set(cut.black), set(cut.white)
    if not black or not white:
        raise GraphError("cut sides must both be nonempty")
    if black & white:
        raise GraphError("cut sides overlap")
    if black | white != set(range(n)):
        raise GraphError(f"cut sides do not partition 0..{n - 1}")


def _proper(factor: Graph, t1: frozenset[int], t2: frozenset[int]) -> bool:
    return all(
        not ((u in t1 and v in t1) or (u in t2 and v in t2)) for u, v in factor.edges
    )


def _diagonal(traces: tuple[frozenset[int], ...], factor: Graph) -> dict[str, Any] | None:
    """Analyze per-layer black traces against 2-colorings of `factor`.

    The traces are the black portions of consecutive layers; `factor` is the
    graph whose vertex set the traces live in. Valid when all split traces
    take at most two values, the values are complementary, and they form a
    proper 2-coloring of `factor`. Returns anchor groups and the two trace
    classes, or None.
    """
    full = frozenset(range(factor.n))
    all_white = tuple(i for i, t in enumerate(traces) if not t)
    all_black = tuple(i for i, t in enumerate(traces) if t == full)
    split = [(i, t) for i, t in enumerate(traces) if t and t != full]
    if not split:
        return None
    values: list[frozenset[int]] = []
    for _, t in split:
        if t not in values:
            values.append(t)
    if len(values) == 1:
        t1, t2 = values[0], full - values[0]
    elif len(values) == 2:
        t1, t2 = values
        if t2 != full - t1:
            return None
    else:
        return None
    if not _proper(factor, t1, t2):
        return None
    class1 = tuple(i for i, t in split if t == t1)
    class2 = tuple(i for i, t in split if t == t2)
    return {
        "all_white": all_white,
        "all_black": all_black,
        "class1": class1,
        "class2": class2,
        "t1": tuple(sorted(t1)),
        "t2": tuple(sorted(t2)),
    }


def classify_cut(g: Graph, h: Graph, cut: Cut) -> CutTypeSet:
    """Match a product cut against the eight patterns, both colors tried.

    The returned witnesses let each match be reconstructed independently;
    see reconstruct_side.
    """
    ng, nh = g.n, h.n
    _validate_partition(ng * nh, cut)
    black = set(cut.black)
    wit: dict[int, dict[str, Any]] = {}

    if len(cut.black) == 1:
        wit[3] = {"side": "black", "vertex": cut.black[0]}
    elif len(cut.white) == 1:
        wit[3] = {"side": "white", "vertex": cut.white[0]}

    h_traces = tuple(
        frozenset(y for y in range(nh) if x * nh + y in black) for x in range(ng)
    )
    g_traces = tuple(
        frozenset(x for x in range(ng) if x * nh + y in black) for y in range(nh)
    )
    full_h = frozenset(range(nh))
    full_g = frozenset(range(ng))

    if all(t in (frozenset(), full_h) for t in h_traces):
        wit[1] = {
            "side": "black",
            "g_vertices": tuple(x for x, t in enumerate(h_traces) if t),
        }
    if all(t in (frozenset(), full_g) for t in g_traces):
        wit[2] = {
            "side": "black",
            "h_vertices": tuple(y for y, t in enumerate(g_traces) if t),
        }

    ha = _diagonal(h_traces, h)  # layers indexed by V(G), traces 2-color H
    ga = _diagonal(g_traces, g)  # layers indexed by V(H), traces 2-color G

    if ha is not None:
        white_l, black_l = ha["all_white"], ha["all_black"]
        if not white_l and not black_l and ha["class2"]:
            wit[4] = {
                "side": "black",
                "orientation": "h",
                "anchor_classes": (ha["class1"], ha["class2"]),
                "traces": (ha["t1"], ha["t2"]),
            }
        if white_l and not black_l:
            wit[5] = {
                "side": "black",
                "orientation": "h",
                "anchor_classes": (ha["class1"], ha["class2"]),
                "traces": (ha["t1"], ha["t2"]),
                "empty_anchors": white_l,
            }
        elif black_l and not white_l:
            # same pattern seen from the white side
            wit[5] = {
                "side": "white",
                "orientation": "h",
                "anchor_classes": (ha["class1"], ha["class2"]),
                "traces": (ha["t2"], ha["t1"]),
                "empty_anchors": black_l,
            }
        if white_l and black_l:
            wit[7] = {
                "side": "black",
                "orientation": "h",
                "anchor_classes": (ha["class1"], ha["class2"]),
                "traces": (ha["t1"], ha["t2"]),
                "empty_anchors": white_l,
                "full_anchors": black_l,
            }

    if ga is not None:
        white_l, black_l = ga["all_white"], ga["all_black"]
        if not white_l and not black_l and ga["class2"] and 4 not in wit:
            wit[4] = {
                "side": "black",
                "orientation": "g",
                "anchor_classes": (ga["class1"], ga["class2"]),
                "traces": (ga["t1"], ga["t2"]),
            }
        if white_l and not black_l:
            wit[6] = {
                "side": "black",
                "orientation": "g",
                "anchor_classes": (ga["class1"], ga["class2"]),
                "traces": (ga["t1"], ga["t2"]),
                "empty_anchors": white_l,
            }
        elif black_l and not white_l:
            wit[6] = {
                "side": "white",
                "orientation": "g",
                "anchor_classes": (ga["class1"], ga["class2"]),
                "traces": (ga["t2"], ga["t1"]),
                "empty_anchors": black_l,
            }
        if white_l and black_l:
            wit[8] = {
                "side": "black",
                "orientation": "g",
                "anchor_classes": (ga["class1"], ga["class2"]),
                "traces": (ga["t1"], ga["t2"]),
                "empty_anchors": white_l,
                "full_anchors": black_l,
            }

    matched = frozenset(wit)
    return CutTypeSet(matched, min(matched) if matched else None, wit)


def reconstruct_side(g: Graph, h: Graph, type_id: int, witness: dict[str, Any]) -> tuple[int, ...]:
    """Rebuild the vertex side a classification witness describes.

    The result equals the cut's black side when witness["side"] is "black",
    else its white side; this is what makes matches independently checkable.
    """
    ng, nh = g.n, h.n
    if type_id == 3:
        return (witness["vertex"],)
    if type_id == 1:
        return tuple(
            sorted(x * nh + y for x in witness["g_vertices"] for y in range(nh))
        )
    if type_id == 2:
        return tuple(
            sorted(x * nh + y for x in range(ng) for y in witness["h_vertices"])
        )
    a1, a2 = witness["anchor_classes"]
    t1, t2 = witness["traces"]
    full = witness.get("full_anchors", ())
    side: set[int] = set()
    if witness["orientation"] == "h":
        side |= {x * nh + y for x in a1 for y in t1}
        side |= {x * nh + y for x in a2 for y in t2}
        side |= {x * nh + y for x in full for y in range(nh)}
    else:
        side |= {x * nh + y for y in a1 for x in t1}
        side |= {x * nh + y for y in a2 for x in t2}
        side |= {x * nh + y for y in full for x in range(ng)}
    return tuple(sorted(side))


def is_exceptional_factor(g: Graph) -> bool:
    """Whether g is a 3-vertex path or a 4-cycle (any labeling)."""
    if g.n == 3 and g.m == 2:
        return True
    return g.n == 4 and g.m == 4 and all(len(ns) == 2 for ns in g.adj)


def check_structure_theorem(g: Graph, h: Graph, mincut_cap: int = BRUTE_FORCE_CAP) -> StructureReport:
    """Classify every minimum cut of G x H and flag unstructured ones.

    A violation is reported only when an unstructured minimum cut appears
    while neither factor is a 3-vertex path or a 4-cycle. Disconnected
    products have no minimum cuts and never violate.
    """
    p = direct_product(g, h)
    exception = is_exceptional_factor(g) or is_exceptional_factor(h)
    if not is_connected(p.graph):
        return StructureReport(0, (), (), exception, False)
    cuts = enumerate_min_cuts(p.graph, cap=mincut_cap)
    lam = len(cuts[0].edges) if cuts else 0
    classifications = tuple((c, classify_cut(g, h, c)) for c in cuts)
    unstructured = tuple(c for c, ts in classifications if not ts.matched)
    violation = bool(unstructured) and not exception
    return StructureReport(lam, classifications, unstructured, exception, violation)


def exists_low_type_min_cut(g: Graph, h: Graph, mincut_cap: int = BRUTE_FORCE_CAP) -> bool:
    """Whether some minimum cut matches a pattern in 1..6.

    False when the product is disconnected (it has no minimum cuts).
    """
    report = check_structure_theorem(g, h, mincut_cap=mincut_cap)
    return any(ts.matched & LOW_TYPES for _, ts in report.classifications)
