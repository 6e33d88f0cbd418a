"""Acceptance gate: every advertised guarantee, one test per criterion.

The suite builds its corpora once (200 pseudo-random closed webs, the
exhaustive list of non-elliptic webs for every admissible sign string
of length at most 8, the twelve-strand flower) and each test asserts
one criterion's verdict, printing the engine's summary line so the
log shows what was measured and how long it took.
"""

from __future__ import annotations

import pytest

from sl3web.verify import run_all


@pytest.fixture(scope="module")
def results():
    table = {r.number: r for r in run_all(max_boundary=8, jobs=1, stress_budget=600.0)}
    for r in table.values():
        print(r.line)
    return table


def check(results, number):
    r = results[number]
    print(r.line)
    assert not r.theorem_violation, r.detail
    assert r.ok, r.detail
    assert r.seconds <= r.budget


def test_criterion_1_bracket_axioms(results):
    check(results, 1)


def test_criterion_2_confluence_and_symmetry(results):
    check(results, 2)


def test_criterion_3_characterisation_boundary_up_to_8(results):
    check(results, 3)


def test_criterion_4_digon_arc_control(results):
    check(results, 4)


def test_criterion_5_flow_matches_brute_force(results):
    check(results, 5)


def test_criterion_6_admissible_red_graph_structure(results):
    check(results, 6)


def test_criterion_7_degree_bookkeeping(results):
    check(results, 7)


def test_criterion_8_face_colouring(results):
    check(results, 8)


def test_criterion_9_twelve_sign_stress_search(results):
    check(results, 9)
