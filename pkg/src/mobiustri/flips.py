"""Flips between triangulations, the flip graph, and face extraction.

Removing one arc t from a triangulation T leaves a set T - {t} that extends
to a maximal compatible set in exactly two ways: by t itself and by one
other arc, the flip of t in T.  Flipping is therefore an involution and
turns the set of all triangulations into an n-regular connected graph.

Faces are the complementary regions of a triangulation.  Every
triangulation of M_n has exactly n faces, each arc bounds two face slots,
and each boundary segment bounds one.  Besides ordinary triangles two
special shapes occur:

* ``quasi_triangle`` - the region around the core curve, bounded by the
  monogon once and the core twice (at n = 1 by a boundary segment and the
  core twice): present exactly when the core is in the triangulation;
* ``anti_self_folded`` - a triangle whose two identified sides are the
  one-sided arc from a marked point to itself, glued along the monogon at
  that point (at n = 1, along the boundary segment): present exactly when
  such an arc pair is.

For a triangulation containing the core, the complement of the core-side
region is a triangulated polygon and faces are read off combinatorially.
All other triangulations are traced on the annulus double cover: the lifts
of the arcs and boundary segments form an embedded graph on the two
circles, whose rotation systems are known from the interval data; orbits
of the face permutation give the upstairs regions (two of which are the
boundary-circle walks themselves and are dropped), and the deck involution
pairs the rest into the n downstairs faces.  The same tracer, with one
lift of a flipped arc deleted, yields the merged quadrilateral that the
exchange relations in `quasicluster` need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .arc_model import (Arc, BasedLoop, Chord, Core, CoreCircle, OneSided,
                        Spanning, TwoSided, all_arcs, arc_key, compatible,
                        deck_image, lifts)
from .catalan_polygon import triangles_in
from .enumeration import Triangulation, triangulation_to_json

TRIANGLE = "triangle"
QUASI_TRIANGLE = "quasi_triangle"
ANTI_SELF_FOLDED = "anti_self_folded"


class BoundarySegment(NamedTuple):
    """The piece of boundary between marked points k and k+1."""

    index: int


Side = Union[Arc, BoundarySegment]


class Face(NamedTuple):
    """A complementary region; sides are in cyclic boundary order."""

    kind: str
    sides: tuple[Side, ...]


# -- flips ---------------------------------------------------------------


def flip(t: Triangulation, arc: Arc, n: int) -> Arc:
    """The unique other arc completing t - {arc} to a triangulation."""
    if arc not in t:
        raise ValueError("arc is not in the triangulation")
    rest = [a for a in t if a != arc]
    completions = [c for c in all_arcs(n)
                   if c not in rest and all(compatible(c, r, n) for r in rest)]
    assert len(completions) == 2 and arc in completions, completions
    return next(c for c in completions if c != arc)


def flip_result(t: Triangulation, arc: Arc, n: int) -> Triangulation:
    """The triangulation obtained by flipping `arc` in `t`."""
    return frozenset(a for a in t if a != arc) | {flip(t, arc, n)}


@dataclass(frozen=True)
class FlipGraph:
    """Vertices in canonical order; edges as sorted index pairs."""

    n: int
    vertices: tuple[Triangulation, ...]
    edges: tuple[tuple[int, int], ...]


def flip_graph(n: int) -> FlipGraph:
    from .enumeration import enumerate_triangulations

    verts = enumerate_triangulations(n)
    index = {t: i for i, t in enumerate(verts)}
    edges = set()
    for i, t in enumerate(verts):
        for arc in sorted(t, key=arc_key):
            j = index[flip_result(t, arc, n)]
            edges.add((min(i, j), max(i, j)))
    return FlipGraph(n, tuple(verts), tuple(sorted(edges)))


def _arc_label(arc: Arc) -> str:
    match arc:
        case TwoSided(a, b):
            return "two_sided(%d,%d)" % (a, b)
        case OneSided(i, j, w):
            return "one_sided(%d,%d,%d)" % (i, j, w)
        case Core():
            return "core"
    raise TypeError(arc)


def flip_graph_to_dot(g: FlipGraph) -> str:
    """Graphviz rendering with vertices v0..v{k-1} in canonical order."""
    out = ["graph flip_graph_n%d {" % g.n]
    for i, t in enumerate(g.vertices):
        label = "; ".join(_arc_label(a) for a in sorted(t, key=arc_key))
        out.append('  v%d [label="%s"];' % (i, label))
    for i, j in g.edges:
        out.append("  v%d -- v%d;" % (i, j))
    out.append("}")
    return "\n".join(out) + "\n"


def flip_graph_to_json(g: FlipGraph) -> dict:
    return {
        "n": g.n,
        "vertex_count": len(g.vertices),
        "vertices": [triangulation_to_json(t, g.n) for t in g.vertices],
        "edges": [list(e) for e in g.edges],
    }


# -- the polygon route (triangulations containing the core) ----------------


def _monogon_of(t: Triangulation) -> TwoSided:
    monos = [a for a in t if isinstance(a, TwoSided) and a.a == a.b]
    assert len(monos) == 1, "core-bearing triangulations carry one monogon"
    return monos[0]


def _polygon_data(t: Triangulation, n: int):
    """Map t's chords into the (n+1)-gon cut out by the monogon.

    The polygon's vertices are numbered 1..n+1; vertex k sits at marked
    point (a + k - 1) mod n where a is the monogon's point, and vertices 1
    and n+1 are the two copies of point a on either side of the cut.
    Returns (monogon, diagonal set, label map side -> Side).
    """
    mono = _monogon_of(t)
    a = mono.a
    diagonals = set()
    for arc in t:
        if isinstance(arc, TwoSided) and arc != mono:
            iu = (arc.a - a) % n
            iv = iu + ((arc.b - arc.a) % n)
            assert 0 < iv <= n and iu < iv
            diagonals.add((iu + 1, iv + 1))

    def label(p: int, q: int) -> Side:
        p, q = min(p, q), max(p, q)
        if (p, q) == (1, n + 1):
            return mono
        if q == p + 1:
            return BoundarySegment((a + p - 1) % n)
        return TwoSided((a + p - 1) % n, (a + q - 1) % n)

    return mono, frozenset(diagonals), label


def _polygon_faces(t: Triangulation, n: int) -> list[Face]:
    if n == 1:
        return [Face(QUASI_TRIANGLE, (BoundarySegment(0), Core(), Core()))]
    mono, diagonals, label = _polygon_data(t, n)
    out = []
    for i, j, k in triangles_in(n + 1, diagonals):
        out.append(Face(TRIANGLE, (label(i, j), label(j, k), label(i, k))))
    out.append(Face(QUASI_TRIANGLE, (mono, Core(), Core())))
    return out


def _polygon_quad(t: Triangulation, arc: TwoSided, n: int) -> tuple[Side, ...]:
    """Merged quadrilateral around a polygon diagonal, sides in cyclic order."""
    mono, diagonals, label = _polygon_data(t, n)
    a = mono.a
    iu = (arc.a - a) % n + 1
    iv = iu + ((arc.b - arc.a) % n)
    tris = [vs for vs in triangles_in(n + 1, diagonals)
            if iu in vs and iv in vs]
    assert len(tris) == 2
    (j,), (l,) = [tuple(v for v in vs if v not in (iu, iv)) for vs in tris]
    if not iu < j < iv:
        j, l = l, j
    return (label(iu, j), label(j, iv), label(iv, l), label(l, iu))


# -- the tracer (triangulations without the core) ---------------------------
#
# Edges of the lifted graph are dicts with keys: id, kind ("bnd", "chord",
# "loop", "span"), v0, v1 (vertices as (circle, position)), label (a Side),
# plus the kind-specific position data used by the rotation order.  A dart
# is (edge id, end) with end 0 at v0 and 1 at v1; for loops end 0 is the
# strand leaving in the increasing-angle direction, for boundary segments
# end 0 is at the segment's start.


def _lifted_edges(t: Triangulation, n: int) -> list[dict]:
    N = 2 * n
    edges: list[dict] = []

    def add(**kw):
        kw["id"] = len(edges)
        edges.append(kw)

    for k in range(n):
        add(kind="bnd", circle=0, v0=(0, 2 * k), v1=(0, (2 * k + 2) % N),
            label=BoundarySegment(k))
    for k in range(n):
        u = (2 * k + n) % N
        add(kind="bnd", circle=1, v0=(1, u), v1=(1, (u + 2) % N),
            label=BoundarySegment(k))
    for arc in sorted(t, key=arc_key):
        for lift in lifts(arc, n):
            match lift:
                case Chord(c, u, v):
                    add(kind="chord", circle=c, u=u, v=v,
                        v0=(c, u), v1=(c, v), label=arc)
                case BasedLoop(c, b):
                    add(kind="loop", circle=c, v0=(c, b), v1=(c, b),
                        label=arc)
                case Spanning(p, q):
                    add(kind="span", p=p, q=q, v0=(0, p), v1=(1, q % N),
                        label=arc)
                case _:
                    raise ValueError("core has no traceable lift")
    return edges


def _rotation_key(edge: dict, end: int, n: int) -> tuple:
    """Counterclockwise order of edge-germs around a lifted vertex.

    Drawing the bottom circle as the inner boundary and the top circle as
    the outer one, the germs at a vertex sort by how steeply they leave
    toward the other circle; chords and loops hug their own circle on one
    side or the other, spanning arcs sort among themselves by how far
    their other end winds.
    """
    N = 2 * n
    bottom = edge["v0"][0] == 0 if edge["kind"] != "span" else None
    match edge["kind"], end:
        case "bnd", e:
            plus = e == 0
            if edge["circle"] == 0:
                return (6,) if plus else (0,)
            return (0,) if plus else (6,)
        case "chord", e:
            span = (edge["v"] - edge["u"]) % N
            at_u = e == 0
            if edge["circle"] == 0:
                return (5, -span) if at_u else (1, span)
            return (1, span) if at_u else (5, -span)
        case "loop", e:
            right = e == 0
            if edge["circle"] == 0:
                return (4,) if right else (2,)
            return (2,) if right else (4,)
        case "span", _:
            return (3, edge["q"] - edge["p"])
    raise ValueError(edge)


def _trace(edges: list[dict], n: int) -> list[tuple[tuple[int, int], ...]]:
    """Orbits of the face permutation (next-dart-after, at the far end)."""
    by_id = {e["id"]: e for e in edges}
    at: dict[tuple, list] = {}
    for e in edges:
        at.setdefault(e["v0"], []).append((e["id"], 0))
        at.setdefault(e["v1"], []).append((e["id"], 1))
    succ = {}
    for darts in at.values():
        darts.sort(key=lambda d: _rotation_key(by_id[d[0]], d[1], n))
        for i, d in enumerate(darts):
            succ[d] = darts[(i + 1) % len(darts)]
    phi = {}
    for e in edges:
        phi[(e["id"], 0)] = succ[(e["id"], 1)]
        phi[(e["id"], 1)] = succ[(e["id"], 0)]
    seen = set()
    orbits = []
    for start in sorted(phi):
        if start in seen:
            continue
        orbit = []
        d = start
        while d not in seen:
            seen.add(d)
            orbit.append(d)
            d = phi[d]
        assert d == start
        orbits.append(tuple(orbit))
    return orbits


def _deck_dart(dart, index, by_id, n):
    """Deck involution on darts, adjusted to map region orbits to region orbits.

    The involution reverses orientation, so after carrying a germ to its
    geometric image the edge's two ends must be swapped for orbits of the
    face permutation to map onto orbits.
    """
    e = by_id[dart[0]]
    end = dart[1]
    N = 2 * n
    match e["kind"]:
        case "bnd":
            img = index[("bnd", 1 - e["circle"], e["label"])]
            geo = end
        case "chord":
            img = index[("chord", 1 - e["circle"],
                         (e["u"] + n) % N, (e["v"] + n) % N)]
            geo = end
        case "loop":
            img = index[("loop", 1 - e["circle"], (e["v0"][1] + n) % N)]
            geo = end
        case "span":
            twin = deck_image(Spanning(e["p"], e["q"]), n)
            img = index[("span", twin.p, twin.q)]
            geo = 1 - end
        case _:
            raise ValueError(e)
    return (img, 1 - geo)


def _edge_index(edges: list[dict]) -> dict:
    idx = {}
    for e in edges:
        match e["kind"]:
            case "bnd":
                idx[("bnd", e["circle"], e["label"])] = e["id"]
            case "chord":
                idx[("chord", e["circle"], e["u"], e["v"])] = e["id"]
            case "loop":
                idx[("loop", e["circle"], e["v0"][1])] = e["id"]
            case "span":
                idx[("span", e["p"], e["q"])] = e["id"]
    return idx


def _traced_regions(t: Triangulation, n: int):
    """(edges, real orbits, one representative orbit per deck pair)."""
    assert Core() not in t
    edges = _lifted_edges(t, n)
    orbits = _trace(edges, n)
    by_id = {e["id"]: e for e in edges}
    real, outer = [], 0
    for orbit in orbits:
        if all(by_id[d[0]]["kind"] == "bnd" for d in orbit):
            outer += 1
        else:
            real.append(orbit)
    assert outer == 2, "expected exactly the two boundary-circle walks"
    assert 2 * n - len(edges) + len(real) == 0, "lifted regions must close up"
    index = _edge_index(edges)
    as_sets = {frozenset(o): o for o in real}
    reps, used = [], set()
    for orbit in real:
        key = frozenset(orbit)
        if key in used:
            continue
        image = frozenset(_deck_dart(d, index, by_id, n) for d in orbit)
        assert image in as_sets and image != key, "deck pairing failed"
        used.add(key)
        used.add(image)
        reps.append(orbit)
    assert 2 * len(reps) == len(real)
    return edges, real, reps


def faces(t: Triangulation, n: int) -> list[Face]:
    """The n faces of a triangulation, with sides in cyclic order."""
    if len(t) != n:
        raise ValueError("not a triangulation: expected %d arcs" % n)
    if Core() in t:
        return _polygon_faces(t, n)
    edges, _, reps = _traced_regions(t, n)
    by_id = {e["id"]: e for e in edges}
    out = []
    for orbit in reps:
        sides = tuple(by_id[d[0]]["label"] for d in orbit)
        repeated = {s for s in sides if sides.count(s) == 2
                    and not isinstance(s, BoundarySegment)}
        if repeated:
            folded = repeated.pop()
            assert not repeated and isinstance(folded, OneSided)
            out.append(Face(ANTI_SELF_FOLDED, sides))
        else:
            out.append(Face(TRIANGLE, sides))
    return out


def quad_for_flip(t: Triangulation, arc: Arc, n: int) -> tuple[Side, ...]:
    """Cyclic sides of the quadrilateral formed by erasing `arc` from its faces.

    Only meaningful for flips exchanged by the two-diagonals-of-a-quad
    relation; the caller (`quasicluster.classify_mutation`) routes the
    degenerate flips elsewhere.
    """
    if Core() in t:
        assert isinstance(arc, TwoSided) and arc.a != arc.b
        return _polygon_quad(t, arc, n)
    edges, real, _ = _traced_regions(t, n)
    by_id = {e["id"]: e for e in edges}
    doomed = next(e for e in edges if e.get("label") == arc)
    former = set()
    for orbit in real:
        if any(d[0] == doomed["id"] for d in orbit):
            former.update(d for d in orbit if d[0] != doomed["id"])
    kept = [e for e in edges if e["id"] != doomed["id"]]
    merged = [o for o in _trace(kept, n) if former & set(o)]
    assert len(merged) == 1 and len(merged[0]) == 4, "flip region is not a quad"
    return tuple(by_id[d[0]]["label"] for d in merged[0])
