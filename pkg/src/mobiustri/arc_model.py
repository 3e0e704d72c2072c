"""Arcs on a Mobius strip with n marked boundary points, via its double cover.

The Mobius strip M_n has one boundary circle carrying n marked points
0..n-1 in cyclic order; the segment between point k and point k+1 is the
boundary segment y_k.  Arcs are considered up to isotopy and must be
essential: contractible arcs and arcs that merely cut off an unpunctured
disk or Mobius band of trivial type are excluded.

Everything is computed on the orientation double cover, an annulus whose
two boundary circles ("bottom" = 0 and "top" = 1) each have circumference
2n.  Marked point k lifts to position 2k on the bottom circle and to
position (2k + n) mod 2n on the top circle; boundary segment y_k lifts to
the interval (2k, 2k + 2) on the bottom and ((2k + n), (2k + n + 2)) on the
top.  The free orientation-reversing deck involution sends position x on
one circle to position x + n on the other.

Arc kinds and their lifts:

* ``TwoSided(a, b)`` runs between marked points a and b and cuts off a
  disk containing the boundary segments y_a, ..., y_{b-1} (counted
  cyclically).  The pair is ordered: (a, b) and (b, a) cut off different
  disks.  When a == b the arc is the monogon enclosing the whole boundary
  with the cross-cap on its far side; it needs n >= 2.  Otherwise
  (b - a) mod n >= 2 is required, or the cut-off disk would be trivial.
  Lifts: one boundary-parallel ``Chord`` (or ``BasedLoop`` for the
  monogon) on each circle.

* ``OneSided(i, j, w)`` runs from marked point i through the cross-cap to
  marked point j.  Its lift is a single ``Spanning`` arc from bottom
  position 2i to the top circle, together with the deck image of that
  lift.  The top endpoint is recorded in universal-cover coordinates
  q = ((2j + n) mod 2n) + 2n*w, where the winding w distinguishes arcs
  with the same endpoints that wrap differently around the strip.  Only
  windings that make the lift disjoint from its own deck image give an
  embedded arc; searching w in [-3, 3] and keeping the valid classes
  yields exactly one arc per unordered endpoint pair {i, j} (a fact the
  test suite pins down).  Each class has two (i, j, w) descriptions, one
  from each endpoint; the canonical one minimises (i, j, |w| then sign).

* ``Core()`` is the one-sided closed curve at the heart of the strip; its
  unique lift is the middle circle ``CoreCircle``.

Crossing numbers between arcs are computed from their lifts: two lifts on
the annulus cross a number of times determined by interval combinatorics
on the circles (unrolled to the universal cover where wrapping matters),
and the crossing number downstairs is half the total over all lift pairs.
"""

from __future__ import annotations

from functools import cache
from typing import NamedTuple, Union


class TwoSided(NamedTuple):
    """Boundary-to-boundary arc cutting off the disk y_a..y_{b-1}; a == b is the monogon."""

    a: int
    b: int


class OneSided(NamedTuple):
    """Arc through the cross-cap from point i to point j with winding w (canonical form)."""

    i: int
    j: int
    w: int


class Core(NamedTuple):
    """The one-sided closed core curve of the strip."""


Arc = Union[TwoSided, OneSided, Core]

# -- lifts on the annulus ----------------------------------------------------

BOTTOM, TOP = 0, 1


class Chord(NamedTuple):
    """Boundary-parallel arc on one circle cutting off the ccw interval (u, v)."""

    circle: int
    u: int
    v: int


class BasedLoop(NamedTuple):
    """Loop based at a marked position, parallel to its whole circle."""

    circle: int
    base: int


class Spanning(NamedTuple):
    """Arc from bottom position p to the top circle; q in universal-cover coordinates."""

    p: int
    q: int


class CoreCircle(NamedTuple):
    """The middle circle of the annulus."""


Lift = Union[Chord, BasedLoop, Spanning, CoreCircle]

_KIND_RANK = {TwoSided: 0, OneSided: 1, Core: 2}


def arc_key(arc: Arc) -> tuple:
    """Total order on arcs: two-sided, then one-sided, then core; params break ties."""
    return (_KIND_RANK[type(arc)],) + tuple(arc)


def deck_image(lift: Lift, n: int) -> Lift:
    """Apply the orientation-reversing deck involution to a lift."""
    N = 2 * n
    match lift:
        case Chord(c, u, v):
            return Chord(1 - c, (u + n) % N, (v + n) % N)
        case BasedLoop(c, b):
            return BasedLoop(1 - c, (b + n) % N)
        case Spanning(p, q):
            # The involution swaps the circles; the image again starts at the
            # bottom, at the image of the old top endpoint, and its top
            # endpoint is the image of the old bottom one, with the winding
            # bookkeeping keeping universal-cover coordinates consistent.
            return Spanning((q + n) % N, p + n - N * ((q + n) // N))
        case CoreCircle():
            return lift
    raise TypeError(lift)


def lifts(arc: Arc, n: int) -> tuple[Lift, ...]:
    """The lifts of an arc on the annulus: a deck-orbit of size 2, or 1 for the core."""
    N = 2 * n
    match arc:
        case TwoSided(a, b) if a == b:
            loop = BasedLoop(BOTTOM, 2 * a)
            return (loop, deck_image(loop, n))
        case TwoSided(a, b):
            chord = Chord(BOTTOM, 2 * a, 2 * b)
            return (chord, deck_image(chord, n))
        case OneSided(i, j, w):
            span = Spanning(2 * i, ((2 * j + n) % N) + N * w)
            return (span, deck_image(span, n))
        case Core():
            return (CoreCircle(),)
    raise TypeError(arc)


def _strictly_inside(x: int, u: int, v: int, N: int) -> bool:
    return 0 < (x - u) % N < (v - u) % N


def lifted_crossing(c1: Lift, c2: Lift, n: int) -> int:
    """Minimal geometric intersections between two lifts on the annulus.

    Boundary-parallel lifts only interact on their own circle.  Wrapping is
    handled by unrolling to the universal cover: an arc hugging the ccw
    interval (u, v) becomes the family of arches [u + 2nk, u + len + 2nk],
    and two arches force a crossing when exactly one endpoint of one lies
    strictly inside the other.  Arches sharing a lifted endpoint can be
    ordered radially at that point and never cross there.
    """
    N = 2 * n
    rank = {Chord: 0, BasedLoop: 1, Spanning: 2, CoreCircle: 3}
    if rank[type(c1)] > rank[type(c2)]:
        c1, c2 = c2, c1
    match c1, c2:
        case Chord(ca, u1, v1), Chord(cb, u2, v2):
            if ca != cb:
                return 0
            l1 = (v1 - u1) % N
            l2 = (v2 - u2) % N
            count = 0
            for k in range(-2, 3):
                a, b = u2 + N * k, u2 + l2 + N * k
                if {a, b} & {u1, u1 + l1}:
                    continue
                if (u1 < a < u1 + l1) != (u1 < b < u1 + l1):
                    count += 1
            return count
        case Chord(ca, u, v), BasedLoop(cb, base):
            if ca != cb:
                return 0
            return 2 if _strictly_inside(base, u, v, N) else 0
        case Chord(ca, u, v), Spanning(p, q):
            x = p if ca == BOTTOM else q % N
            return 1 if _strictly_inside(x, u, v, N) else 0
        case Chord(), CoreCircle():
            return 0
        case BasedLoop(ca, b1), BasedLoop(cb, b2):
            if ca != cb:
                return 0
            return 0 if b1 == b2 else 2
        case BasedLoop(ca, base), Spanning(p, q):
            x = p if ca == BOTTOM else q % N
            return 0 if x == base else 1
        case BasedLoop(), CoreCircle():
            return 0
        case Spanning(p, q), Spanning(r, s):
            lo = min(p - r, q - s)
            hi = max(p - r, q - s)
            count = 0
            for k in range(lo // N - 1, hi // N + 2):
                if (p - r - N * k) * (q - s - N * k) < 0:
                    count += 1
            return count
        case Spanning(), CoreCircle():
            return 1
    raise ValueError("crossing number of the core with itself is undefined")


def crossing_number(a: Arc, b: Arc, n: int) -> int:
    """Minimal intersections between distinct arcs a and b downstairs.

    Sums lifted crossings over all lift pairs; the deck involution pairs
    them up, so the total is even and halves exactly.
    """
    if a == b:
        raise ValueError("crossing number needs two distinct arcs")
    la, lb = lifts(a, n), lifts(b, n)
    total = sum(lifted_crossing(x, y, n) for x in la for y in lb)
    assert total % 2 == 0
    return total // 2


def compatible(a: Arc, b: Arc, n: int) -> bool:
    """True when the two arcs can be drawn simultaneously without crossing."""
    return crossing_number(a, b, n) == 0


# -- constructing the finite arc census --------------------------------------

WINDING_WINDOW = range(-3, 4)


def _spanning_for(i: int, j: int, w: int, n: int) -> Spanning:
    N = 2 * n
    return Spanning(2 * i, ((2 * j + n) % N) + N * w)


def one_sided_is_embedded(i: int, j: int, w: int, n: int) -> bool:
    """A one-sided arc is embedded iff its lift misses its own deck image."""
    span = _spanning_for(i, j, w, n)
    twin = deck_image(span, n)
    assert twin != span
    return lifted_crossing(span, twin, n) == 0


def _partner_triple(i: int, j: int, w: int, n: int) -> tuple[int, int, int]:
    """The (j, i, w') description of the same class seen from the other endpoint."""
    N = 2 * n
    twin = deck_image(_spanning_for(i, j, w, n), n)
    assert twin.p == 2 * j
    num = twin.q - ((2 * i + n) % N)
    assert num % N == 0
    return (j, i, num // N)


def _winding_order(w: int) -> tuple[int, int]:
    return (abs(w), 0 if w >= 0 else 1)


def canonical_one_sided(i: int, j: int, w: int, n: int) -> OneSided:
    """Canonical representative of a one-sided class given by any valid triple."""
    j2, i2, w2 = _partner_triple(i, j, w, n)
    best = min(((i, j, _winding_order(w)), (i, j, w)),
               ((j2, i2, _winding_order(w2)), (j2, i2, w2)))
    return OneSided(*best[1])


@cache
def all_arcs(n: int) -> tuple[Arc, ...]:
    """Every arc on M_n, in canonical order.  There are (3n^2 - n + 2) / 2."""
    if n < 1:
        raise ValueError("need at least one marked point")
    out: list[Arc] = []
    if n >= 2:
        for a in range(n):
            out.append(TwoSided(a, a))
            for gap in range(2, n):
                out.append(TwoSided(a, (a + gap) % n))
    classes = set()
    for i in range(n):
        for j in range(n):
            for w in WINDING_WINDOW:
                if one_sided_is_embedded(i, j, w, n):
                    assert abs(w) <= 1, "winding window wider than necessary"
                    classes.add(canonical_one_sided(i, j, w, n))
    out.extend(sorted(classes))
    out.append(Core())
    return tuple(sorted(out, key=arc_key))


def is_arc(arc: Arc, n: int) -> bool:
    """Validity check against the census for n marked points."""
    return arc in all_arcs(n)


# -- JSON encoding ------------------------------------------------------------

def arc_to_json(arc: Arc) -> dict:
    match arc:
        case TwoSided(a, b):
            return {"type": "two_sided", "a": a, "b": b}
        case OneSided(i, j, w):
            return {"type": "one_sided", "i": i, "j": j, "w": w}
        case Core():
            return {"type": "core"}
    raise TypeError(arc)


def arc_from_json(obj: dict) -> Arc:
    kind = obj["type"]
    if kind == "two_sided":
        return TwoSided(obj["a"], obj["b"])
    if kind == "one_sided":
        return OneSided(obj["i"], obj["j"], obj["w"])
    if kind == "core":
        return Core()
    raise ValueError("unknown arc type %r" % kind)
