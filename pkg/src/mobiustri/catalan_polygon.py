"""Catalan numbers and triangulations of a convex polygon.

The polygon here is an ordinary convex m-gon with vertices labelled 1..m in
cyclic order.  A triangulation is the set of its m-3 pairwise non-crossing
diagonals; there are C(m-2) of them, the (m-2)nd Catalan number.

These are the disk-shaped building blocks used elsewhere: cutting a surface
triangulation along suitable arcs leaves polygons, and counting and face
extraction reduce to the functions in this module.
"""

from __future__ import annotations

import math
from functools import cache

Diagonal = tuple[int, int]


def catalan_number(k: int) -> int:
    """C(k) = binom(2k, k) / (k + 1).

    >>> [catalan_number(k) for k in range(8)]
    [1, 1, 2, 5, 14, 42, 132, 429]
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    return math.comb(2 * k, k) // (k + 1)


def catalan_numbers(count: int) -> list[int]:
    """First `count` Catalan numbers via the ratio recurrence.

    C(0) = 1 and C(k) = (4k - 2) C(k-1) / (k + 1); the division is exact.
    """
    out = []
    c = 1
    for k in range(count):
        if k:
            num = (4 * k - 2) * c
            assert num % (k + 1) == 0
            c = num // (k + 1)
        out.append(c)
    return out


@cache
def catalan_convolution(k: int) -> int:
    """C(k) via the convolution recurrence sum(C(i) C(k-1-i))."""
    if k == 0:
        return 1
    return sum(catalan_convolution(i) * catalan_convolution(k - 1 - i)
               for i in range(k))


def count_polygon_triangulations(m: int) -> int:
    """Number of triangulations of a convex m-gon, m >= 3.

    >>> count_polygon_triangulations(5)
    5
    """
    if m < 3:
        raise ValueError("need at least 3 vertices")
    return catalan_number(m - 2)


def polygon_triangulations(m: int) -> list[frozenset[Diagonal]]:
    """All triangulations of the convex m-gon, as sets of diagonals (i, j), i < j.

    Recurses on the triangle containing the edge (1, m): its third vertex k
    ranges over 2..m-1 in ascending order, and the two sub-polygons on either
    side are triangulated independently.  The result is deterministic.

    >>> polygon_triangulations(3)
    [frozenset()]
    >>> len(polygon_triangulations(6))
    14
    """
    if m < 3:
        raise ValueError("need at least 3 vertices")

    def rec(verts: tuple[int, ...]) -> list[frozenset[Diagonal]]:
        if len(verts) < 3:
            return [frozenset()]
        lo, hi = verts[0], verts[-1]
        out = []
        for idx in range(1, len(verts) - 1):
            k = verts[idx]
            extra = []
            if idx > 1:
                extra.append((lo, k))
            if idx < len(verts) - 2:
                extra.append((k, hi))
            for left in rec(verts[: idx + 1]):
                for right in rec(verts[idx:]):
                    out.append(frozenset(extra) | left | right)
        return out

    return rec(tuple(range(1, m + 1)))


def triangles_in(m: int, diagonals: frozenset[Diagonal]) -> list[tuple[int, int, int]]:
    """Decompose a triangulated convex m-gon into its m - 2 triangles.

    `diagonals` must be a triangulation of the m-gon with vertices 1..m.
    Triangles are returned as ascending vertex triples, found by repeatedly
    clipping the first available ear, so the output order is deterministic.
    """
    if len(diagonals) != m - 3:
        raise ValueError("not a triangulation: expected %d diagonals" % (m - 3))
    edges = set(diagonals)
    edges.update((i, i + 1) for i in range(1, m))
    edges.add((1, m))
    verts = list(range(1, m + 1))
    tris = []
    while len(verts) > 3:
        for idx in range(len(verts)):
            i = verts[idx]
            j = verts[(idx + 1) % len(verts)]
            k = verts[(idx + 2) % len(verts)]
            if (min(i, k), max(i, k)) in edges:
                tris.append(tuple(sorted((i, j, k))))
                verts.remove(j)
                break
        else:
            raise ValueError("diagonal set is not a triangulation")
    tris.append(tuple(sorted(verts)))
    return tris
