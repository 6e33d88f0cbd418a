"""Kuperberg bracket and the module-level classification built on it.

The bracket of a closed web is computed by eliminating elliptic faces:
a vertexless circle contributes a factor [3], a digon face a factor [2],
and a square face splits the evaluation into the sum over its two
smoothings.  Any elimination order gives the same value; the default
order (circles, then the face whose orbit contains the smallest dart)
is fixed so runs are reproducible, and a seeded order is available for
exercising confluence.

Closed webs live on the sphere for evaluation purposes, so any two-sided
or four-sided face orbit may be eliminated, including the one a plane
picture would draw as the outer region.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .errors import BoundaryMismatchError, TheoremViolationError
from .laurent import LaurentPoly, quantum_integer
from .web import (
    Region,
    Web,
    _Maps,
    closure,
    find_elliptic_face,
    make_web,
    region_table,
    require_valid,
    splice_edges,
)

QINT2 = quantum_integer(2)
QINT3 = quantum_integer(3)


class _Scratch:
    """Mutable rotation system for the reduction loop (closed webs)."""

    __slots__ = ("rot", "vertex_of", "partner", "circles")

    def __init__(self, rot, vertex_of, partner, circles):
        self.rot = rot
        self.vertex_of = vertex_of
        self.partner = partner
        self.circles = circles

    @classmethod
    def from_web(cls, web: Web) -> "_Scratch":
        rot = {vid: r for vid, _k, r in web.vertices}
        vertex_of = {h: vid for vid, _k, r in web.vertices for h in r}
        partner = {}
        for t, h in web.edges:
            partner[t] = h
            partner[h] = t
        return cls(rot, vertex_of, partner, web.circles)

    def copy(self) -> "_Scratch":
        return _Scratch(dict(self.rot), dict(self.vertex_of), dict(self.partner), self.circles)

    def faces(self):
        succ = {}
        for r in self.rot.values():
            for i, h in enumerate(r):
                succ[h] = r[(i + 1) % 3]
        seen = set()
        orbits = []
        for d in self.partner:
            if d in seen:
                continue
            orbit = []
            x = d
            while x not in seen:
                seen.add(x)
                orbit.append(x)
                x = succ[self.partner[x]]
            orbits.append(orbit)
        return orbits

    def elliptic_orbits(self):
        """Digon and square orbits, smallest first for reproducibility."""
        found = [o for o in self.faces() if len(o) in (2, 4)]
        found.sort(key=lambda o: (len(o), min(o)))
        return found

    def smash(self, dead_vertices, joins):
        """Delete the given vertices; `joins` pairs up the half-edges at
        dead vertices whose strands run on into each other.  Edges both of
        whose halves die unpaired disappear; chains of joined strands get
        spliced, and chains that close up become circles."""
        link = {}
        for u, v in joins:
            link[u] = v
            link[v] = u
        dead_halves = {h for v in dead_vertices for h in self.rot[v]}
        for h in dead_halves:
            if h not in link and self.partner[h] not in dead_halves:
                raise AssertionError("reduction would orphan a living half-edge")

        # reconnect strands that enter the dead zone and come back out
        for x in list(self.partner):
            if x in dead_halves or self.partner[x] not in link:
                continue
            p = self.partner[x]
            while True:
                hop = link[p]
                q = self.partner[hop]
                if q not in link:
                    break
                p = q
            if q not in dead_halves:
                self.partner[x] = q
                self.partner[q] = x
        # chains that never surface are closed strands; each such loop is
        # walked once per direction, so halve the count at the end
        seen = set()
        closed_walks = 0
        for u in link:
            if u in seen or self.partner[u] not in link:
                continue
            closed = True
            x = u
            while x not in seen:
                seen.add(x)
                nxt = self.partner[link[x]]
                if nxt not in link:
                    closed = False
                    break
                x = nxt
            if closed:
                closed_walks += 1
        self.circles += closed_walks // 2

        for v in dead_vertices:
            del self.rot[v]
        for h in dead_halves:
            del self.vertex_of[h]
            self.partner.pop(h, None)
        for h, p in list(self.partner.items()):
            if p in dead_halves:
                del self.partner[h]

    def digon_data(self, orbit):
        h, k = orbit
        a = self.vertex_of[h]
        b = self.vertex_of[k]
        at_a = {h, self.partner[k]}
        at_b = {k, self.partner[h]}
        (s_a,) = [x for x in self.rot[a] if x not in at_a]
        (s_b,) = [x for x in self.rot[b] if x not in at_b]
        return (a, b), (s_a, s_b)

    def square_data(self, orbit):
        corners = [self.vertex_of[d] for d in orbit]
        spokes = []
        for i, d in enumerate(orbit):
            sides = {d, self.partner[orbit[i - 1]]}
            (s,) = [x for x in self.rot[corners[i]] if x not in sides]
            spokes.append(s)
        return corners, spokes


def _eval(s: _Scratch, rng: Random | None) -> LaurentPoly:
    value = LaurentPoly.one()
    while True:
        if s.circles:
            value = value * QINT3 ** s.circles
            s.circles = 0
        orbits = s.elliptic_orbits()
        if not orbits:
            if s.rot:
                raise TheoremViolationError(
                    "closed web with vertices but no circle, digon or square face"
                )
            return value
        orbit = orbits[0] if rng is None else rng.choice(orbits)
        if len(orbit) == 2:
            (a, b), (s_a, s_b) = s.digon_data(orbit)
            s.smash((a, b), [(s_a, s_b)])
            value = value * QINT2
        else:
            corners, sp = s.square_data(orbit)
            other = s.copy()
            s.smash(corners, [(sp[0], sp[1]), (sp[2], sp[3])])
            other.smash(corners, [(sp[1], sp[2]), (sp[3], sp[0])])
            return value * (_eval(s, rng) + _eval(other, rng))


def bracket(web: Web, rng: Random | None = None) -> LaurentPoly:
    """Evaluate a closed web to a Laurent polynomial in q.

    Passing a seeded random.Random picks the elliptic face to eliminate
    at random at every step; the value does not depend on the order.
    """
    if web.boundary:
        raise BoundaryMismatchError(
            "the bracket evaluates closed webs; this one has boundary points"
        )
    require_valid(web)
    return _eval(_Scratch.from_web(web), rng)


# ---------------------------------------------------------------------------
# elliptic reduction at the level of Web values


def remove_circle(web: Web) -> Web:
    if web.circles < 1:
        raise ValueError("no circle to remove")
    return Web(web.boundary, web.vertices, web.edges, web.circles - 1)


def _spokes_of(web: Web, maps: _Maps, walk):
    """Corner vertices and the spoke half-edge at each corner of a
    digon or square face walk."""
    corners = []
    spokes = []
    for i, d in enumerate(walk):
        vid = maps.endpoint[d][1]
        sides = {d, maps.partner[walk[i - 1]]}
        (s,) = [x for x in maps.rot[vid] if x not in sides]
        corners.append(vid)
        spokes.append(s)
    return corners, spokes


def _rebuild(web: Web, maps: _Maps, dead, links) -> Web:
    """Delete the dead vertices; edges both of whose halves die unlinked
    disappear, everything else is spliced along `links`."""
    anchored = {h for vid, _k, rot in web.vertices if vid not in dead for h in rot}
    anchored |= {h for h, _s in web.boundary}
    dead_halves = {h for v in dead for h in maps.rot[v]}
    linked = {h for pair in links for h in pair}
    drop = {
        i
        for i, (t, h) in enumerate(web.edges)
        if t in dead_halves and h in dead_halves and t not in linked and h not in linked
    }
    new_edges, circ = splice_edges(web.edges, anchored, links, drop)
    vertices = [v for v in web.vertices if v[0] not in dead]
    return make_web(web.boundary, vertices, new_edges, web.circles + circ)


def collapse_digon(web: Web, region: Region) -> Web:
    """Remove a digon face: delete its two edges and two corners and run
    the outer strands into each other."""
    maps = _Maps(web)
    (walk,) = region.walks
    corners, spokes = _spokes_of(web, maps, walk)
    return _rebuild(web, maps, set(corners), [(spokes[0], spokes[1])])


def smooth_square(web: Web, region: Region) -> tuple[Web, Web]:
    """The two smoothings of a square face: corners and sides vanish and
    the four spokes join in adjacent pairs, one way or the other."""
    maps = _Maps(web)
    (walk,) = region.walks
    corners, sp = _spokes_of(web, maps, walk)
    first = _rebuild(web, maps, set(corners), [(sp[0], sp[1]), (sp[2], sp[3])])
    second = _rebuild(web, maps, set(corners), [(sp[1], sp[2]), (sp[3], sp[0])])
    return first, second


def split_elliptic(web: Web) -> list[tuple[Web, int]]:
    """Peel off all elliptic faces, tracking degree shifts.

    Returns the list of (non-elliptic web, shift) summands: a circle
    splits a summand three ways with shifts -2, 0, +2, a digon two ways
    with shifts -1, +1, and a square into its two smoothings at shift 0.
    For a closed web the summands are empty webs and the multiset of
    shifts recovers the bracket.
    """
    require_valid(web)
    out: list[tuple[Web, int]] = []
    stack: list[tuple[Web, int]] = [(web, 0)]
    while stack:
        w, shift = stack.pop()
        hit = find_elliptic_face(w)
        if hit is None:
            out.append((w, shift))
            continue
        kind, region = hit
        if kind == "circle":
            w2 = remove_circle(w)
            stack.extend([(w2, shift - 2), (w2, shift), (w2, shift + 2)])
        elif kind == "digon":
            w2 = collapse_digon(w, region)
            stack.extend([(w2, shift - 1), (w2, shift + 1)])
        else:
            a, b = smooth_square(w, region)
            stack.extend([(a, shift), (b, shift)])
    out.sort(key=lambda ws: ws[1])
    return out


# ---------------------------------------------------------------------------
# modules attached to webs


def boundary_weight(signs) -> int:
    """Grading offset of a sign string: one per boundary point."""
    return len(signs)


def hom_poly(w1: Web, w2: Web) -> LaurentPoly:
    """Bracket of the closure of w1's mirror against w2."""
    return bracket(closure(w1, w2))


def hom_graded_dimension(w1: Web, w2: Web) -> LaurentPoly:
    """Graded dimension of the space of module maps between the modules
    of two webs with the same boundary; coefficients must come out
    nonnegative."""
    value = hom_poly(w1, w2).shifted(boundary_weight(w1.signs))
    if value and not value.has_nonnegative_coefficients():
        raise TheoremViolationError(
            f"graded hom dimension has a negative coefficient: {value}"
        )
    return value


def modules_distinct(w1: Web, w2: Web) -> bool:
    """True when no degree-zero module map can be an isomorphism, which
    is the case when deg <w1bar w2> falls short of the boundary weight."""
    value = hom_poly(w1, w2)
    if not value:
        return True
    return value.degree < boundary_weight(w1.signs)


@dataclass(frozen=True)
class VirtualClass:
    """Outcome of the self-pairing test of a web's module."""

    poly: LaurentPoly  # <wbar w>
    weight: int  # boundary weight of the sign string
    indecomposable: bool
    level: int  # half the degree overshoot, 0 for indecomposable webs


def classify(web: Web) -> VirtualClass:
    """Decide from <wbar w> whether the web's module is a single
    indecomposable: that happens exactly when the self-pairing is monic
    of degree equal to the boundary weight."""
    value = hom_poly(web, web)
    if not value:
        raise TheoremViolationError("self-pairing of a web evaluated to zero")
    if not value.is_symmetric():
        raise TheoremViolationError(f"self-pairing not symmetric in q, 1/q: {value}")
    weight = boundary_weight(web.signs)
    deg = value.degree
    if deg < weight or (deg - weight) % 2:
        raise TheoremViolationError(
            f"self-pairing degree {deg} impossible for boundary weight {weight}"
        )
    indec = value.is_monic_of_degree(weight)
    return VirtualClass(value, weight, indec, (deg - weight) // 2)
