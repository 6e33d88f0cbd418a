from __future__ import annotations

import pytest

from sl3web.catalog import (
    arc,
    circle_web,
    cube,
    digon_arc,
    double_digon_arc,
    empty_web,
    flower,
    theta,
    tripod,
)
from sl3web.errors import BoundaryMismatchError, InvalidWebError, TheoremViolationError
from sl3web.web import (
    MINUS,
    PLUS,
    SINK,
    SOURCE,
    Web,
    closure,
    euler_region_count,
    face_colouring,
    find_elliptic_face,
    is_admissible_sequence,
    is_boundary_connected,
    is_non_elliptic,
    make_web,
    mirror,
    regions,
    require_valid,
    validate,
)

ALL_FIXTURES = [
    empty_web,
    circle_web,
    arc,
    tripod,
    theta,
    digon_arc,
    double_digon_arc,
    cube,
    flower,
]


@pytest.mark.parametrize("build", ALL_FIXTURES)
def test_fixtures_are_valid(build):
    assert validate(build()) == []


def test_admissible_sequences():
    assert is_admissible_sequence(())
    assert is_admissible_sequence((PLUS, MINUS))
    assert is_admissible_sequence((PLUS, PLUS, PLUS))
    assert not is_admissible_sequence((PLUS, PLUS))
    assert not is_admissible_sequence((MINUS,))


# -- validation failure modes -----------------------------------------------


def test_validate_bad_sign():
    w = Web(((100, "x"), (101, MINUS)), (), ((100, 101),), 0)
    assert any("sign" in p for p in validate(w))


def test_validate_orientation_against_boundary_signs():
    # '+' boundary points must be edge tails
    w = Web(((100, MINUS), (101, PLUS)), (), ((100, 101),), 0)
    problems = validate(w)
    assert len(problems) == 2
    with pytest.raises(InvalidWebError):
        require_valid(w)


def test_validate_vertex_arity_and_duplicates():
    v = (0, SINK, (1, 2, 2))
    w = Web((), (v,), ((1, 2),), 0)
    assert validate(w)


def test_validate_kind_vs_orientation():
    # a sink whose half-edge is used as a tail
    w = make_web(
        boundary=[(100, MINUS), (101, MINUS), (102, MINUS)],
        vertices=[(0, SINK, (1, 2, 3))],
        edges=[(1, 100), (2, 101), (3, 102)],
    )
    problems = validate(w)
    assert problems
    assert any("sink" in p or "tail" in p for p in problems)


def test_validate_unmatched_halves():
    w = Web((), ((0, SINK, (1, 2, 3)),), ((4, 1),), 0)
    assert validate(w)


def test_validate_negative_circles():
    w = Web((), (), (), -1)
    assert any("circle" in p for p in validate(w))


def test_validate_rejects_nonplanar_rotation():
    # theta with one rotation reversed fails the Euler count
    good = theta()
    (v0, v1) = good.vertices
    flipped = (v1[0], v1[1], tuple(reversed(v1[2])))
    bad = Web(good.boundary, (v0, flipped), good.edges, good.circles)
    assert any("Euler" in p for p in validate(bad))


# -- regions ------------------------------------------------------------------


def test_region_counts():
    assert len(regions(arc())) == 2
    assert len(regions(tripod())) == 3
    assert len(regions(theta())) == 3
    assert len(regions(cube())) == 6
    assert len(regions(flower())) == 19


def test_circle_regions():
    rs = regions(circle_web())
    assert len(rs) == 2
    inner = [r for r in rs if r.is_circle_interior]
    assert len(inner) == 1
    assert inner[0].is_disk


def test_euler_count_closed_connected():
    for build in (circle_web, theta, cube):
        assert euler_region_count(build()) == 2


def test_unbounded_region_is_region_zero():
    for build in ALL_FIXTURES:
        rs = regions(build())
        assert rs[0].id == 0 and rs[0].is_unbounded


def test_flower_face_profile():
    table = regions(flower())
    sides = sorted(r.side_count for r in table if r.is_disk)
    assert sides == [6] * 7


def test_elliptic_face_detection():
    assert find_elliptic_face(arc()) is None
    assert find_elliptic_face(flower()) is None
    kind, _ = find_elliptic_face(theta())
    assert kind == "digon"
    kind, _ = find_elliptic_face(cube())
    assert kind == "square"
    kind, _ = find_elliptic_face(circle_web())
    assert kind == "circle"
    assert is_non_elliptic(tripod())
    assert not is_non_elliptic(digon_arc())


def test_boundary_connected():
    assert is_boundary_connected(arc())
    assert is_boundary_connected(flower())
    with_circle = Web(arc().boundary, (), arc().edges, 1)
    assert not is_boundary_connected(with_circle)
    assert not is_boundary_connected(theta())
    assert is_boundary_connected(empty_web())


# -- mirror and closure --------------------------------------------------------


@pytest.mark.parametrize("build", [arc, tripod, digon_arc, flower])
def test_mirror_involution(build):
    w = build()
    m = mirror(w)
    assert validate(m) == []
    assert m.signs == tuple("-" if s == "+" else "+" for s in w.signs)
    assert mirror(m) == w


def test_mirror_flips_kinds():
    m = mirror(tripod())
    assert all(kind == SOURCE for _id, kind, _rot in m.vertices)


def test_closure_arc_is_circle():
    glued = closure(arc(), arc())
    assert validate(glued) == []
    assert not glued.boundary
    assert glued.vertex_count == 0
    assert glued.circles == 1


def test_closure_tripod_is_theta():
    glued = closure(tripod(), tripod())
    assert validate(glued) == []
    assert glued.vertex_count == 2
    assert len(glued.edges) == 3
    assert len(regions(glued)) == 3


def test_closure_rejects_mismatch():
    with pytest.raises(BoundaryMismatchError):
        closure(arc(), tripod())
    with pytest.raises(BoundaryMismatchError):
        closure(arc(), mirror(arc()))


# -- face colouring -------------------------------------------------------------


def test_colouring_arc_convention():
    w = arc()
    colouring = face_colouring(w, 0)
    rs = regions(w)
    assert colouring[0] == 0
    # one crossing, so the pocket under the arc sits at distance +-1 from
    # the unbounded colour; this library's convention picks -1 here (the
    # opposite convention is the global negation)
    inner = next(r.id for r in rs if not r.is_unbounded)
    assert colouring[inner] == 2


def test_colouring_base_offset():
    w = cube()
    c0 = face_colouring(w, 0)
    c2 = face_colouring(w, 2)
    assert all(c2[r.id] == (c0[r.id] + 2) % 3 for r in regions(w))


@pytest.mark.parametrize("build", ALL_FIXTURES)
def test_colouring_adjacent_regions_differ(build):
    w = build()
    colouring = face_colouring(w, 0)
    table = {r.id: r for r in regions(w)}
    # region ids on the two sides of every edge differ in colour; the
    # construction itself raises if two paths ever disagree
    from sl3web.redgraph import dual_graph

    for a, b in dual_graph(w).sides:
        assert colouring[a] != colouring[b]
    assert set(colouring.colours) == set(table)


def test_colouring_circle_interior():
    c = face_colouring(circle_web(), 0)
    inner = next(r.id for r in regions(circle_web()) if r.is_circle_interior)
    assert c[inner] == 1
