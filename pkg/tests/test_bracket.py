from __future__ import annotations

from random import Random

import pytest

from sl3web.bracket import (
    boundary_weight,
    bracket,
    classify,
    collapse_digon,
    hom_graded_dimension,
    hom_poly,
    modules_distinct,
    remove_circle,
    smooth_square,
    split_elliptic,
)
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
from sl3web.errors import BoundaryMismatchError
from sl3web.laurent import LaurentPoly, quantum_integer
from sl3web.web import Web, closure, find_elliptic_face

Q2 = quantum_integer(2)
Q3 = quantum_integer(3)


def poly(d: dict) -> LaurentPoly:
    out = LaurentPoly.zero()
    for e, c in d.items():
        out = out + LaurentPoly.monomial(e, c)
    return out


# -- frozen values, each worked out by hand from the three relations ---------


def test_bracket_empty():
    assert bracket(empty_web()) == LaurentPoly.one()


def test_bracket_circles():
    assert bracket(circle_web()) == Q3
    assert bracket(circle_web(2)) == Q3 * Q3


def test_bracket_theta():
    # one digon collapse leaves a circle
    assert bracket(theta()) == Q2 * Q3


def test_bracket_cube():
    # either square smoothing doubles two opposite edges of a 4-cycle,
    # so each smoothing is worth [2] * theta, and the two agree
    assert bracket(cube()) == poly({4: 2, 2: 6, 0: 8, -2: 6, -4: 2})
    assert bracket(cube()) == Q2 * Q2 * Q3 + Q2 * Q2 * Q3


def test_bracket_rejects_boundary():
    with pytest.raises(BoundaryMismatchError):
        bracket(arc())


def test_bracket_randomized_orders_agree():
    w = cube()
    reference = bracket(w)
    for seed in range(12):
        assert bracket(w, rng=Random(seed)) == reference


# -- single-step relations -----------------------------------------------------


def test_remove_circle_step():
    w = circle_web(3)
    assert bracket(w) == Q3 * bracket(remove_circle(w))


def test_collapse_digon_step():
    w = theta()
    _kind, face = find_elliptic_face(w)
    collapsed = collapse_digon(w, face)
    assert collapsed.circles == 1
    assert collapsed.vertex_count == 0


def test_smooth_square_step():
    w = cube()
    _kind, face = find_elliptic_face(w)
    a, b = smooth_square(w, face)
    assert bracket(w) == bracket(a) + bracket(b)
    assert a.vertex_count == b.vertex_count == 4


def test_split_elliptic_shift_bookkeeping():
    # a circle is worth [3] = q^2 + 1 + q^-2: shifts -2, 0, +2
    pieces = split_elliptic(circle_web())
    assert sorted(s for _w, s in pieces) == [-2, 0, 2]
    assert all(not w.vertices and not w.circles for w, _s in pieces)
    total = sum(
        (LaurentPoly.monomial(s) * bracket(w) for w, s in split_elliptic(cube())),
        LaurentPoly.zero(),
    )
    assert total == bracket(cube())


# -- hom pairings ---------------------------------------------------------------


def test_boundary_weight_is_length():
    assert boundary_weight(arc().signs) == 2
    assert boundary_weight(()) == 0


def test_hom_arc():
    assert hom_poly(arc(), arc()) == Q3
    assert hom_graded_dimension(arc(), arc()) == poly({4: 1, 2: 1, 0: 1})


def test_hom_tripod():
    assert hom_graded_dimension(tripod(), tripod()) == poly({6: 1, 4: 2, 2: 2, 0: 1})


def test_hom_digon_arc():
    assert hom_poly(digon_arc(), digon_arc()) == Q2 * Q2 * Q3


def test_modules_distinct_on_basis_webs():
    from sl3web.generate import generate_all_non_elliptic

    w1, w2 = generate_all_non_elliptic(("+", "+", "-", "-"))
    assert modules_distinct(w1, w2)
    assert not modules_distinct(w1, w1)
    assert not modules_distinct(arc(), arc())


def test_hom_mismatched_boundaries():
    with pytest.raises(BoundaryMismatchError):
        hom_poly(arc(), tripod())


# -- classification ---------------------------------------------------------------


def test_classify_indecomposables():
    for build in (empty_web, arc, tripod):
        vc = classify(build())
        assert vc.indecomposable
        assert vc.level == 0
        assert vc.poly.is_monic_of_degree(vc.weight)


def test_classify_digon_arc():
    vc = classify(digon_arc())
    assert not vc.indecomposable
    assert vc.level == 1
    assert vc.poly == poly({4: 1, 2: 3, 0: 4, -2: 3, -4: 1})


def test_classify_double_digon_arc():
    vc = classify(double_digon_arc())
    assert not vc.indecomposable
    assert vc.level == 2


def test_classify_flower():
    # non-elliptic yet decomposable: bracket degree matches the boundary
    # weight but the leading coefficient is 2, not 1
    vc = classify(flower())
    assert not vc.indecomposable
    assert vc.weight == 12
    assert vc.poly.degree == 12
    assert vc.poly.leading_coefficient == 2
    assert vc.level == 0


def test_classified_brackets_are_symmetric_and_nonnegative():
    for build in (arc, tripod, digon_arc, flower):
        vc = classify(build())
        assert vc.poly.is_symmetric()
        assert vc.poly.has_nonnegative_coefficients()


def test_disjoint_circle_forces_decomposable():
    # the circle appears in both the web and its reflection, so the
    # self-pairing gains [3]^2 and the level climbs by 2
    w = arc()
    with_circle = Web(w.boundary, w.vertices, w.edges, 1)
    vc = classify(with_circle)
    assert not vc.indecomposable
    assert vc.level == 2
