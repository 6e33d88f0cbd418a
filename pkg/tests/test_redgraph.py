from __future__ import annotations

import pytest

from sl3web.catalog import arc, cube, digon_arc, flower, theta, tripod
from sl3web.errors import StageMismatchError
from sl3web.generate import canonical_form
from sl3web.redgraph import (
    brute_force_fitting_orientation,
    corner_selection_ok,
    count_fitting_orientations,
    decompose,
    dual_graph,
    enumerate_pairings,
    enumerate_red_graphs,
    find_exact_red_graph,
    find_fitting_orientation,
    g_reduction,
    grey_halves,
    in_out_degrees,
    is_admissible,
    is_exact,
    max_admissible_level,
    minimal_admissible_subgraph,
    orientation_index_sum,
    projection_degree_shift,
    red_graph_from_faces,
    reduce_by_stack,
)
from sl3web.web import Web, validate


def flower_dual():
    return dual_graph(flower())


def test_dual_graph_shape():
    dual = dual_graph(theta())
    assert len(dual.sides) == 3
    assert dual.degree(0) == 2
    assert sorted(dual.disk_faces()) == [1, 2]
    # every vertex shows three corner regions
    assert all(len(c) == 3 for c in dual.corners.values())


def test_corner_rule():
    dual = flower_dual()
    faces = dual.disk_faces()
    assert corner_selection_ok(dual, faces[:2])
    # picking all seven hexagons pinches the six spoke vertices
    assert not corner_selection_ok(dual, faces)


def test_small_webs_have_no_red_graphs():
    for build in (arc, tripod):
        assert list(enumerate_red_graphs(build())) == []


def test_digon_arc_red_graph():
    web = digon_arc()
    reds = list(enumerate_red_graphs(web))
    assert len(reds) == 1
    red = reds[0]
    assert len(red.faces) == 1 and red.edges == ()
    assert red.ed(red.faces[0]) == 2
    assert red.cap(red.faces[0]) == 1
    assert red.level == 1
    assert is_admissible(red)
    assert not is_exact(red)
    assert count_fitting_orientations(red) == 1
    assert max_admissible_level(web) == 1


def test_flower_red_graph_census():
    web = flower()
    reds = list(enumerate_red_graphs(web))
    assert len(reds) == 81
    admissible = [r for r in reds if is_admissible(r)]
    assert len(admissible) == 1
    petals = admissible[0]
    # the admissible one is the six petal faces in a cycle
    assert len(petals.faces) == 6
    assert len(petals.edges) == 6
    assert all(petals.ed(f) == 2 for f in petals.faces)
    assert petals.level == 0
    assert is_exact(petals)
    assert petals.is_fair() and petals.is_nice()
    assert petals.components() == [petals.faces]


def test_flower_fitting_orientations():
    web = flower()
    petals = next(r for r in enumerate_red_graphs(web) if is_admissible(r))
    orientation = find_fitting_orientation(petals)
    assert orientation is not None
    degs = in_out_degrees(petals, orientation)
    assert all(i <= petals.cap(f) for f, (i, _o) in degs.items())
    # a 6-cycle with unit caps can only rotate one way or the other
    assert count_fitting_orientations(petals) == 2
    assert orientation_index_sum(petals, orientation) == 0


def test_flow_matches_brute_force_on_flower():
    for red in enumerate_red_graphs(flower()):
        flow = find_fitting_orientation(red)
        brute = brute_force_fitting_orientation(red)
        assert (flow is None) == (brute is None), red.faces


def test_orientation_index_sum_is_orientation_independent():
    petals = next(r for r in enumerate_red_graphs(flower()) if is_admissible(r))
    sides = petals.dual.sides
    forward = {i: sides[i] for i in petals.edges}
    backward = {i: (b, a) for i, (a, b) in forward.items()}
    assert orientation_index_sum(petals, forward) == petals.level
    assert orientation_index_sum(petals, backward) == petals.level


def test_grey_halves_count_matches_external_degree():
    petals = next(r for r in enumerate_red_graphs(flower()) if is_admissible(r))
    for f in petals.faces:
        greys = grey_halves(petals, f)
        assert len(greys) == petals.ed(f) == 2


def test_pairings():
    petals = next(r for r in enumerate_red_graphs(flower()) if is_admissible(r))
    assert len(enumerate_pairings(petals)) == 1
    red = next(iter(enumerate_red_graphs(digon_arc())))
    assert len(enumerate_pairings(red)) == 1


def test_g_reduction_digon_arc():
    web = digon_arc()
    red = next(iter(enumerate_red_graphs(web)))
    reduced = g_reduction(web, red)
    assert validate(reduced) == []
    assert canonical_form(reduced) == canonical_form(arc())
    assert projection_degree_shift(red) == 2


def test_g_reduction_flower_gives_six_caps():
    web = flower()
    petals = next(r for r in enumerate_red_graphs(web) if is_admissible(r))
    reduced = g_reduction(web, petals)
    assert validate(reduced) == []
    assert reduced.vertex_count == 0
    assert len(reduced.edges) == 6
    assert reduced.circles == 0
    assert reduced.signs == web.signs
    assert projection_degree_shift(petals) == 0


def test_g_reduction_rejects_foreign_red_graph():
    red = next(iter(enumerate_red_graphs(digon_arc())))
    with pytest.raises(StageMismatchError):
        g_reduction(flower(), red)


def test_minimal_admissible_subgraph_is_fixed_point_on_flower():
    petals = next(r for r in enumerate_red_graphs(flower()) if is_admissible(r))
    minimal = minimal_admissible_subgraph(petals)
    assert minimal.faces == petals.faces
    assert is_exact(minimal)


def test_find_exact_red_graph():
    exact = find_exact_red_graph(flower())
    assert exact is not None
    assert exact.level == 0
    assert find_exact_red_graph(tripod()) is None
    with pytest.raises(ValueError):
        find_exact_red_graph(digon_arc())


def test_red_graph_from_faces_checks_input():
    web = flower()
    faces = dual_graph(web).disk_faces()
    red = red_graph_from_faces(web, faces[:1])
    assert red.faces == (faces[0],)
    with pytest.raises(StageMismatchError):
        red_graph_from_faces(web, [0])  # the unbounded region
    with pytest.raises(StageMismatchError):
        red_graph_from_faces(web, [])
    with pytest.raises(StageMismatchError):
        red_graph_from_faces(web, faces)  # pinched vertices


def test_reduce_by_stack():
    web = digon_arc()
    red = next(iter(enumerate_red_graphs(web)))
    reduced, shift = reduce_by_stack(web, [(red.faces, 0)])
    assert shift == 2
    assert canonical_form(reduced) == canonical_form(arc())


def test_decompose_digon_arc():
    dec = decompose(digon_arc())
    assert dec.complete
    assert sorted(s for _w, s in dec.factors) == [-1, 1]
    assert all(canonical_form(w) == canonical_form(arc()) for w, _s in dec.factors)


def test_decompose_arc_with_circle():
    w = arc()
    dec = decompose(Web(w.boundary, w.vertices, w.edges, 1))
    assert dec.complete
    assert sorted(s for _w, s in dec.factors) == [-2, 0, 2]
    assert all(canonical_form(piece) == canonical_form(arc()) for piece, _s in dec.factors)


def test_decompose_flower_reports_incomplete():
    dec = decompose(flower())
    assert not dec.complete
    assert len(dec.factors) == 1
    piece, shift = dec.factors[0]
    assert shift == 0
    assert piece.vertex_count == 0 and len(piece.edges) == 6


def test_decompose_cube_closed_web():
    dec = decompose(cube())
    assert dec.complete
    # sum of q^shift over the factors must be the bracket, 2[2]^2[3]
    from sl3web.bracket import bracket
    from sl3web.laurent import LaurentPoly

    total = sum(
        (LaurentPoly.monomial(s) for _w, s in dec.factors), LaurentPoly.zero()
    )
    assert total == bracket(cube())
    assert all(not w.boundary and not w.vertices for w, _s in dec.factors)
