import json

import pytest

from mobiustri.arc_model import Core, OneSided, TwoSided, crossing_number
from mobiustri.enumeration import enumerate_triangulations
from mobiustri.flips import (ANTI_SELF_FOLDED, QUASI_TRIANGLE, TRIANGLE,
                             BoundarySegment, flip, flip_graph,
                             flip_graph_to_dot, flip_graph_to_json,
                             flip_result, faces, quad_for_flip)

COUNTS = {1: 2, 2: 6, 3: 22, 4: 84, 5: 326}


def _is_monogon(arc):
    return isinstance(arc, TwoSided) and arc.a == arc.b


@pytest.mark.parametrize("n", range(1, 5))
def test_flip_is_a_unique_involution(n):
    for t in enumerate_triangulations(n):
        for arc in t:
            new = flip(t, arc, n)
            t2 = flip_result(t, arc, n)
            assert new != arc and new in t2 and arc not in t2
            assert len(t2) == n
            assert flip(t2, new, n) == arc
            assert flip_result(t2, new, n) == t


@pytest.mark.parametrize("n", range(1, 5))
def test_flip_exchanges_crossing_arcs(n):
    # old and new arc always cross; twice exactly for the monogon
    # exchange across the cross-cap, once in every other case
    for t in enumerate_triangulations(n):
        for arc in t:
            new = flip(t, arc, n)
            cn = crossing_number(arc, new, n)
            if _is_monogon(arc) and _is_monogon(new):
                assert cn == 2
                assert Core() in t
            else:
                assert cn == 1


def test_flip_rejects_missing_arc():
    t = frozenset({TwoSided(0, 0), Core()})
    with pytest.raises(ValueError):
        flip(t, OneSided(0, 0, 0), 2)


@pytest.mark.parametrize("n", range(1, 5))
def test_flip_graph_shape(n):
    g = flip_graph(n)
    assert len(g.vertices) == COUNTS[n]
    degrees = [0] * len(g.vertices)
    for i, j in g.edges:
        assert 0 <= i < j < len(g.vertices)
        degrees[i] += 1
        degrees[j] += 1
    assert set(degrees) == {n}
    # connected
    adj = {i: set() for i in range(len(g.vertices))}
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    seen, stack = {0}, [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    assert len(seen) == len(g.vertices)


def test_flip_graph_n1_is_single_edge():
    g = flip_graph(1)
    assert len(g.vertices) == 2
    assert g.edges == ((0, 1),)


def test_dot_output():
    dot = flip_graph_to_dot(flip_graph(2))
    lines = dot.strip().splitlines()
    assert lines[0] == "graph flip_graph_n2 {"
    assert lines[-1] == "}"
    assert '  v0 [label="two_sided(0,0); one_sided(0,0,0)"];' in lines
    assert sum("--" in line for line in lines) == 6


def test_json_output_roundtrips():
    g = flip_graph(2)
    blob = flip_graph_to_json(g)
    assert blob["n"] == 2 and blob["vertex_count"] == 6
    assert len(blob["vertices"]) == 6 and len(blob["edges"]) == 6
    json.dumps(blob)  # serializable
    for i, j in blob["edges"]:
        assert 0 <= i < j < 6


@pytest.mark.parametrize("n", range(1, 5))
def test_faces_shapes_and_multiplicities(n):
    for t in enumerate_triangulations(n):
        fs = faces(t, n)
        assert len(fs) == n
        side_count = {}
        for f in fs:
            assert len(f.sides) == 3
            assert f.kind in (TRIANGLE, QUASI_TRIANGLE, ANTI_SELF_FOLDED)
            for s in f.sides:
                side_count[s] = side_count.get(s, 0) + 1
        for arc in t:
            if isinstance(arc, Core):
                continue
            assert side_count[arc] == 2, (t, arc)
        for k in range(n):
            assert side_count[BoundarySegment(k)] == 1


@pytest.mark.parametrize("n", range(1, 5))
def test_face_kinds(n):
    for t in enumerate_triangulations(n):
        fs = faces(t, n)
        quasi = [f for f in fs if f.kind == QUASI_TRIANGLE]
        folded = [f for f in fs if f.kind == ANTI_SELF_FOLDED]
        if Core() in t:
            # one quasi-triangle glued along the core, no folded faces
            assert len(quasi) == 1 and not folded
            assert quasi[0].sides.count(Core()) == 2
            third, = (s for s in quasi[0].sides if not isinstance(s, Core))
            assert _is_monogon(third) or third == BoundarySegment(0)
        else:
            assert not quasi
            expect = sum(1 for a in t
                         if isinstance(a, OneSided) and a.i == a.j
                         and (TwoSided(a.i, a.i) in t or n == 1))
            assert len(folded) == expect
        for f in folded:
            doubled = [s for s in f.sides if f.sides.count(s) == 2]
            assert len(doubled) == 2 and isinstance(doubled[0], OneSided)


def test_faces_requires_a_triangulation():
    with pytest.raises(ValueError):
        faces(frozenset({Core()}), 2)


@pytest.mark.parametrize("n", range(1, 5))
def test_quad_for_flip_sides(n):
    for t in enumerate_triangulations(n):
        for arc in t:
            if isinstance(arc, Core) or (_is_monogon(arc) and Core() in t):
                continue  # not quadrilateral flips
            if (isinstance(arc, OneSided) and arc.i == arc.j
                    and (TwoSided(arc.i, arc.i) in t or n == 1)):
                continue
            quad = quad_for_flip(t, arc, n)
            assert len(quad) == 4
            for s in quad:
                assert isinstance(s, BoundarySegment) or s in t
                assert s != arc


def test_m2_sample_quad():
    # erasing the monogon from the fan at point 0 merges the folded face
    # with the ordinary triangle: the quad runs along the one-sided arc
    # twice and the two boundary segments, with the doubled side adjacent
    # to itself in the cyclic order
    t = frozenset({TwoSided(0, 0), OneSided(0, 0, 0)})
    quad = quad_for_flip(t, TwoSided(0, 0), 2)
    assert sorted(quad, key=repr) == sorted(
        (OneSided(0, 0, 0), OneSided(0, 0, 0), BoundarySegment(0),
         BoundarySegment(1)), key=repr)
    pairs = [{quad[0], quad[2]}, {quad[1], quad[3]}]
    for pair in pairs:
        assert len(pair) == 2
        assert any(isinstance(s, BoundarySegment) for s in pair)
        assert OneSided(0, 0, 0) in pair
