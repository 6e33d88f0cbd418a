"""Webs as combinatorial maps.

A web is a plane trivalent graph whose edges are oriented so that every
vertex is a sink (all three edges point in) or a source (all three point
out), drawn in the upper half-plane with a finite set of signed boundary
points on the border line.  The embedding is stored as a rotation system:
each vertex carries the counterclockwise cyclic order of its three
half-edges.  Vertexless circles are kept as a separate counter since they
carry no combinatorial data beyond their number.

Sign convention at the border: '+' means the edge leaves the border
(its half-edge is the tail of the edge), '-' means it arrives (head).

Planarity is not re-derived from scratch: the rotation system is the
embedding, and validation checks it is genus zero by an Euler count on
every connected component of the border-augmented map.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    BoundaryMismatchError,
    InvalidWebError,
    PairingError,
    TheoremViolationError,
)

Sign = str  # '+' or '-'

PLUS = "+"
MINUS = "-"


def sign_value(s: Sign) -> int:
    if s == PLUS:
        return 1
    if s == MINUS:
        return -1
    raise ValueError(f"not a sign: {s!r}")


def is_admissible_sequence(signs: Sequence[Sign]) -> bool:
    """A sign sequence is admissible when its signed sum is divisible by 3."""
    return sum(sign_value(s) for s in signs) % 3 == 0


SINK = "sink"
SOURCE = "source"


@dataclass(frozen=True)
class Web:
    """An oriented trivalent plane graph with signed border points.

    boundary: ordered left to right, entries (half edge id, sign).
    vertices: entries (vertex id, 'sink'|'source', ccw rotation of half edges).
    edges:    entries (tail half edge, head half edge).
    circles:  number of vertexless loops, all drawn side by side in the
              unbounded region (nesting is never needed downstream).
    """

    boundary: tuple[tuple[int, Sign], ...]
    vertices: tuple[tuple[int, str, tuple[int, ...]], ...]
    edges: tuple[tuple[int, int], ...]
    circles: int = 0

    @property
    def signs(self) -> tuple[Sign, ...]:
        return tuple(s for _, s in self.boundary)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def boundary_length(self) -> int:
        return len(self.boundary)

    def __repr__(self) -> str:
        return (
            f"Web(n={self.boundary_length}, V={self.vertex_count}, "
            f"E={len(self.edges)}, circles={self.circles})"
        )


def make_web(
    boundary: Iterable[tuple[int, Sign]] = (),
    vertices: Iterable[tuple[int, str, Sequence[int]]] = (),
    edges: Iterable[tuple[int, int]] = (),
    circles: int = 0,
) -> Web:
    """Build a Web in normal form (sorted vertices/edges, rotations
    cyclically rotated to start at their smallest half edge).

    Normal form makes structural equality meaningful for webs built by
    different code paths.  No validity check happens here; see validate().
    """
    vs = []
    for vid, kind, rot in vertices:
        rot = tuple(rot)
        if rot:
            k = min(range(len(rot)), key=lambda i: rot[i])
            rot = rot[k:] + rot[:k]
        vs.append((vid, kind, rot))
    vs.sort(key=lambda v: v[0])
    es = sorted((int(t), int(h)) for t, h in edges)
    return Web(tuple((int(h), s) for h, s in boundary), tuple(vs), tuple(es), circles)


# ---------------------------------------------------------------------------
# lookup tables


class _Maps:
    """Derived lookup tables for one web (endpoints, partners, rotations)."""

    def __init__(self, web: Web):
        self.web = web
        self.kind: dict[int, str] = {}
        self.rot: dict[int, tuple[int, ...]] = {}
        self.endpoint: dict[int, tuple] = {}  # half -> ('v', vid) | ('b', pos)
        for vid, kind, rot in web.vertices:
            self.kind[vid] = kind
            self.rot[vid] = rot
            for h in rot:
                self.endpoint[h] = ("v", vid)
        for pos, (h, _s) in enumerate(web.boundary):
            self.endpoint[h] = ("b", pos)
        self.partner: dict[int, int] = {}
        self.is_tail: dict[int, bool] = {}
        for t, h in web.edges:
            self.partner[t] = h
            self.partner[h] = t
            self.is_tail[t] = True
            self.is_tail[h] = False

    def halves(self) -> list[int]:
        return list(self.endpoint)


def _dart_key(d) -> tuple:
    # web darts are ints, border darts are ('s', i, j) tuples
    return (0, d) if isinstance(d, int) else (1, d[1], d[2])


def _face_orbits(web: Web, maps: _Maps):
    """Face orbits of the border-augmented map.

    The border line is closed into a circle by one return arc below, so
    border segment i joins border position i to position i+1 (cyclically).
    Returns (orbits, lower_orbit_index, unbounded_orbit_index) where the
    last two are None for closed webs.
    """
    n = web.boundary_length
    succ: dict = {}  # dart -> next dart counterclockwise around its endpoint
    alpha: dict = {}
    for vid, _k, rot in web.vertices:
        m = len(rot)
        for i, h in enumerate(rot):
            succ[h] = rot[(i + 1) % m]
    for t, h in web.edges:
        alpha[t] = h
        alpha[h] = t
    for j in range(n):
        fwd = ("s", j, 0)
        bwd = ("s", j, 1)
        alpha[fwd] = bwd
        alpha[bwd] = fwd
        # ccw at border point j: rightward segment, web half edge, leftward
        order = (fwd, web.boundary[j][0], ("s", (j - 1) % n, 1))
        for i, d in enumerate(order):
            succ[d] = order[(i + 1) % 3]

    psi = {d: succ[alpha[d]] for d in alpha}
    seen: set = set()
    orbits: list[list] = []
    for d in sorted(psi, key=_dart_key):
        if d in seen:
            continue
        orbit = []
        x = d
        while x not in seen:
            seen.add(x)
            orbit.append(x)
            x = psi[x]
        orbits.append(orbit)

    lower = unbounded = None
    if n:
        first_fwd = ("s", 0, 0)
        last_bwd = ("s", n - 1, 1)
        for i, orbit in enumerate(orbits):
            if first_fwd in orbit:
                lower = i
            if last_bwd in orbit:
                unbounded = i
    return orbits, lower, unbounded


def _components(web: Web, maps: _Maps) -> dict:
    """Map every endpoint ('v', vid) / ('b', pos) to a component id.

    All border positions belong to one component (the border circle).
    """
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for vid, _k, _r in web.vertices:
        parent[("v", vid)] = ("v", vid)
    if web.boundary:
        parent[("border",)] = ("border",)
    for t, h in web.edges:
        a = maps.endpoint[t]
        b = maps.endpoint[h]
        a = ("border",) if a[0] == "b" else a
        b = ("border",) if b[0] == "b" else b
        union(a, b)
    return {x: find(x) for x in parent}


# ---------------------------------------------------------------------------
# validation


def validate(web: Web) -> list[str]:
    """Return a list of violation messages; empty means the web is valid."""
    problems: list[str] = []

    if web.circles < 0:
        problems.append(f"circles: negative count {web.circles}")

    seen_halves: dict[int, str] = {}

    def claim(h, where):
        if h in seen_halves:
            problems.append(f"half-edge {h} appears both at {seen_halves[h]} and {where}")
        else:
            seen_halves[h] = where

    for pos, (h, s) in enumerate(web.boundary):
        if s not in (PLUS, MINUS):
            problems.append(f"boundary {pos}: bad sign {s!r}")
        claim(h, f"boundary {pos}")

    seen_vids = set()
    for vid, kind, rot in web.vertices:
        if vid in seen_vids:
            problems.append(f"vertex {vid}: duplicate id")
        seen_vids.add(vid)
        if kind not in (SINK, SOURCE):
            problems.append(f"vertex {vid}: bad kind {kind!r}")
        if len(rot) != 3:
            problems.append(f"vertex {vid}: arity {len(rot)} (webs are trivalent)")
        if len(set(rot)) != len(rot):
            problems.append(f"vertex {vid}: repeated half-edge in rotation")
        for h in rot:
            claim(h, f"vertex {vid}")

    matched: set[int] = set()
    for t, h in web.edges:
        if t == h:
            problems.append(f"edge ({t},{h}): both ends are the same half-edge")
            continue
        for x in (t, h):
            if x not in seen_halves:
                problems.append(f"edge ({t},{h}): unknown half-edge {x}")
            elif x in matched:
                problems.append(f"edge ({t},{h}): half-edge {x} used twice")
            matched.add(x)
    for h in seen_halves:
        if h not in matched:
            problems.append(f"half-edge {h} ({seen_halves[h]}) belongs to no edge")

    if problems:
        return problems

    maps = _Maps(web)
    for t, h in web.edges:
        et, eh = maps.endpoint[t], maps.endpoint[h]
        if et[0] == "v" and maps.kind[et[1]] != SOURCE:
            problems.append(f"edge ({t},{h}): tail at vertex {et[1]} which is a {maps.kind[et[1]]}")
        if eh[0] == "v" and maps.kind[eh[1]] != SINK:
            problems.append(f"edge ({t},{h}): head at vertex {eh[1]} which is a {maps.kind[eh[1]]}")
        if et[0] == "b" and web.boundary[et[1]][1] != PLUS:
            problems.append(f"boundary {et[1]}: sign '-' but its half-edge {t} is an edge tail")
        if eh[0] == "b" and web.boundary[eh[1]][1] != MINUS:
            problems.append(f"boundary {eh[1]}: sign '+' but its half-edge {h} is an edge head")

    if problems:
        return problems

    # Euler count: each component of the augmented map must be a sphere map.
    orbits, _, _ = _face_orbits(web, maps)
    comp = _components(web, maps)
    counts: dict = {}
    for x, root in comp.items():
        if x[0] in ("v", "border"):
            c = counts.setdefault(root, [0, 0, 0])  # V, E, F
            c[0] += web.boundary_length if x == ("border",) else 1
    for t, h in web.edges:
        a = maps.endpoint[t]
        a = ("border",) if a[0] == "b" else a
        counts[comp[a]][1] += 1
    if web.boundary:
        counts[comp[("border",)]][1] += web.boundary_length  # border segments
    for orbit in orbits:
        d = orbit[0]
        a = ("border",) if not isinstance(d, int) else maps.endpoint[d]
        a = ("border",) if a[0] == "b" else a
        counts[comp[a]][2] += 1
    for root, (v, e, f) in counts.items():
        if v - e + f != 2:
            problems.append(
                f"planarity: component of {root} has Euler count {v - e + f} (expected 2); "
                "the rotation system is not a plane embedding"
            )
    return problems


def require_valid(web: Web) -> None:
    problems = validate(web)
    if problems:
        raise InvalidWebError("; ".join(problems))


# ---------------------------------------------------------------------------
# regions


@dataclass(frozen=True)
class Region:
    """A connected component of the upper half-plane minus the web."""

    id: int
    walks: tuple[tuple[int, ...], ...]  # closed walks of web half-edges
    touches_border: bool
    is_unbounded: bool
    is_disk: bool
    is_circle_interior: bool = False

    @property
    def side_count(self) -> int:
        """Number of web edge sides on the region's boundary."""
        return sum(len(w) for w in self.walks)


class RegionTable:
    """Regions of a web plus the dart -> region lookup."""

    def __init__(self, regions: list[Region], region_of: dict[int, int]):
        self.regions = regions
        self.region_of = region_of  # web half-edge (as walk dart) -> region id

    def __iter__(self):
        return iter(self.regions)

    def __len__(self):
        return len(self.regions)

    @property
    def unbounded(self) -> Region:
        return self.regions[0]

    def faces(self) -> list[Region]:
        return [r for r in self.regions if not r.touches_border and not r.is_unbounded]


def region_table(web: Web) -> RegionTable:
    """Compute the regions of a valid web.

    Region 0 is always the unbounded one.  For a closed web each component
    is drawn side by side, so the outer face of every component is merged
    into region 0; the outer face of a component is taken to be the orbit
    containing its smallest dart, a deterministic choice that no computed
    invariant depends on.
    """
    require_valid(web)
    maps = _Maps(web)
    orbits, lower, unbounded_idx = _face_orbits(web, maps)
    comp = _components(web, maps)

    def orbit_component(orbit):
        for d in orbit:
            if isinstance(d, int):
                e = maps.endpoint[d]
                return comp[("border",) if e[0] == "b" else e]
            return comp[("border",)]
        raise AssertionError("empty orbit")

    outer_orbits: set[int] = set()
    if unbounded_idx is not None:
        outer_orbits.add(unbounded_idx)
    # smallest-dart orbit of every closed component counts as its outer face
    border_root = comp.get(("border",))
    best: dict = {}
    for i, orbit in enumerate(orbits):
        if i == lower:
            continue
        root = orbit_component(orbit)
        if root == border_root:
            continue
        key = min(_dart_key(d) for d in orbit)
        if root not in best or key < best[root][0]:
            best[root] = (key, i)
    outer_orbits.update(i for _k, i in best.values())

    def walk_of(orbit) -> tuple[int, ...]:
        ds = [d for d in orbit if isinstance(d, int)]
        if not ds:
            return ()
        k = ds.index(min(ds))
        return tuple(ds[k:] + ds[:k])

    regions: list[Region] = []
    region_of: dict[int, int] = {}

    unbounded_walks = tuple(
        w for i in sorted(outer_orbits) if (w := walk_of(orbits[i]))
    )
    regions.append(
        Region(
            id=0,
            walks=unbounded_walks,
            touches_border=unbounded_idx is not None,
            is_unbounded=True,
            is_disk=False,
        )
    )
    for i in sorted(outer_orbits):
        for d in walk_of(orbits[i]):
            region_of[d] = 0

    order = sorted(
        (i for i in range(len(orbits)) if i != lower and i not in outer_orbits),
        key=lambda i: min(_dart_key(d) for d in orbits[i]),
    )
    for i in order:
        orbit = orbits[i]
        touches = any(not isinstance(d, int) for d in orbit)
        walk = walk_of(orbit)
        rid = len(regions)
        disk = False
        if not touches:
            vs = [maps.endpoint[d][1] for d in walk]
            disk = len(set(vs)) == len(vs)
        regions.append(
            Region(
                id=rid,
                walks=(walk,) if walk else (),
                touches_border=touches,
                is_unbounded=False,
                is_disk=disk,
            )
        )
        for d in walk:
            region_of[d] = rid

    for _ in range(web.circles):
        rid = len(regions)
        regions.append(
            Region(
                id=rid,
                walks=(),
                touches_border=False,
                is_unbounded=False,
                is_disk=True,
                is_circle_interior=True,
            )
        )
    return RegionTable(regions, region_of)


def regions(web: Web) -> list[Region]:
    return region_table(web).regions


def euler_region_count(web: Web) -> int:
    """#regions - #edges + #vertices, which is 2 for a connected closed web."""
    return len(regions(web)) - len(web.edges) + web.vertex_count


def find_elliptic_face(web: Web):
    """Locate a vertexless circle, digon face or square face.

    Returns (kind, region) with kind in {'circle', 'digon', 'square'}, or
    None when the web is non-elliptic.  Circles come first, then the disk
    face with the smallest region id, so reduction order is reproducible.
    """
    table = region_table(web)
    for r in table.regions:
        if r.is_circle_interior:
            return ("circle", r)
    for r in table.regions:
        if r.is_disk and not r.is_circle_interior and r.side_count in (2, 4):
            return ("digon" if r.side_count == 2 else "square", r)
    return None


def is_non_elliptic(web: Web) -> bool:
    return find_elliptic_face(web) is None


def is_boundary_connected(web: Web) -> bool:
    """True when every connected piece of the web meets the border."""
    if web.circles:
        return False
    if not web.vertices and not web.edges:
        return True
    if not web.boundary:
        return False
    maps = _Maps(web)
    comp = _components(web, maps)
    border_root = comp[("border",)]
    return all(comp[("v", vid)] == border_root for vid, _k, _r in web.vertices)


# ---------------------------------------------------------------------------
# face colouring


@dataclass(frozen=True)
class FaceColouring:
    base: int
    colours: dict[int, int] = field(hash=False)

    def __getitem__(self, region_id: int) -> int:
        return self.colours[region_id]


def face_colouring(web: Web, base: int = 0) -> FaceColouring:
    """3-colour the regions so that the unbounded region gets `base`.

    Crossing an edge changes the colour by +1 mod 3 when moving from the
    side to the right of the edge's orientation to the side on its left
    (and -1 the other way); vertexless circles count +1 going inward.
    The assignment is path independent because the flow of every vertex
    is divisible by 3; this is re-checked on every edge.
    """
    table = region_table(web)
    # region to the right of the oriented edge is the tail dart's region
    relations = []  # (right region, left region) per edge
    for t, h in web.edges:
        relations.append((table.region_of[t], table.region_of[h]))

    colours: dict[int, int] = {0: base % 3}
    adj: dict[int, list[tuple[int, int]]] = {}
    for r1, r2 in relations:
        adj.setdefault(r1, []).append((r2, 1))
        adj.setdefault(r2, []).append((r1, -1))
    queue = [0]
    while queue:
        r = queue.pop()
        for r2, delta in adj.get(r, []):
            c = (colours[r] + delta) % 3
            if r2 not in colours:
                colours[r2] = c
                queue.append(r2)
    for r in table.regions:
        if r.is_circle_interior:
            colours[r.id] = (colours[0] + 1) % 3
        elif r.id not in colours:
            colours[r.id] = colours[0]  # isolated region, only the empty web
    for r1, r2 in relations:
        if (colours[r1] + 1) % 3 != colours[r2]:
            raise TheoremViolationError(
                f"face colouring inconsistent across an edge between regions {r1} and {r2}"
            )
    return FaceColouring(base % 3, colours)


# ---------------------------------------------------------------------------
# splicing engine: delete parts of a web and reconnect loose strands


def splice_edges(
    edges: Sequence[tuple[int, int]],
    anchored: set[int],
    links: Iterable[tuple[int, int]],
    drop: set[int] = frozenset(),
) -> tuple[list[tuple[int, int]], int]:
    """Merge edges along the given links between loose half-edges.

    `edges` are surviving oriented edges (minus indices in `drop`);
    half-edges not in `anchored` are loose ends that must each occur in
    exactly one link.  Chains of edges become single edges; chains that
    close up become vertexless circles.  Returns (new edges, circles).
    """
    surviving = [e for i, e in enumerate(edges) if i not in drop]
    where: dict[int, tuple[int, str]] = {}
    for i, (t, h) in enumerate(surviving):
        where[t] = (i, "t")
        where[h] = (i, "h")
    loose = {x for e in surviving for x in e} - anchored

    link: dict[int, int] = {}
    for a, b in links:
        for x in (a, b):
            if x not in loose:
                raise PairingError(f"half-edge {x} is not a loose end")
            if x in link:
                raise PairingError(f"half-edge {x} paired twice")
        if a == b:
            raise PairingError(f"half-edge {a} paired with itself")
        link[a] = b
        link[b] = a
    if set(link) != loose:
        missing = sorted(loose - set(link))
        raise PairingError(f"unpaired loose half-edges: {missing}")

    visited = [False] * len(surviving)
    out: list[tuple[int, int]] = []
    for i, (t, h) in enumerate(surviving):
        if visited[i] or t in loose:
            continue
        visited[i] = True
        cur = h
        while cur in loose:
            j, role = where[link[cur]]
            if role != "t":
                raise PairingError(
                    f"pairing joins {cur} to {link[cur]}, but both point the same way"
                )
            visited[j] = True
            cur = surviving[j][1]
        out.append((t, cur))
    circles = 0
    for i in range(len(surviving)):
        if visited[i]:
            continue
        circles += 1
        j = i
        while not visited[j]:
            visited[j] = True
            nxt, role = where[link[surviving[j][1]]]
            if role != "t":
                raise PairingError("pairing orientation clash on a closed strand")
            j = nxt
    return out, circles


# ---------------------------------------------------------------------------
# mirror and closure


def _flip_kind(kind: str) -> str:
    return SOURCE if kind == SINK else SINK


def mirror(web: Web) -> Web:
    """The mirror web: reflect through the border line and reverse all
    edge orientations, then read the result back in the upper half-plane.

    Combinatorially this keeps the boundary order and the rotations and
    swaps everything orientation-related: signs, edge directions, vertex
    kinds.  Applying it twice gives back the original web.
    """
    return make_web(
        boundary=[(h, MINUS if s == PLUS else PLUS) for h, s in web.boundary],
        vertices=[(vid, _flip_kind(k), rot) for vid, k, rot in web.vertices],
        edges=[(h, t) for t, h in web.edges],
        circles=web.circles,
    )


def closure(w1: Web, w2: Web) -> Web:
    """Glue the mirror of w1 below w2 along their common boundary.

    Both webs must be valid and carry the same sign sequence; the result
    is a closed web.  Matching boundary points are joined strand to
    strand, the mirrored copy having its rotations reversed because the
    reflection reverses the orientation of the plane.
    """
    require_valid(w1)
    require_valid(w2)
    if w1.signs != w2.signs:
        raise BoundaryMismatchError(
            f"cannot glue boundaries {''.join(w1.signs)!r} and {''.join(w2.signs)!r}"
        )

    all_ids = [h for h, _ in w2.boundary]
    all_ids += [h for _v, _k, rot in w2.vertices for h in rot]
    all_ids += [x for e in w2.edges for x in e]
    hoff = max(all_ids, default=0) + 1
    voff = max([v for v, _k, _r in w2.vertices], default=0) + 1

    vertices = list(w2.vertices)
    for vid, kind, rot in w1.vertices:
        flipped = tuple(reversed([h + hoff for h in rot]))
        vertices.append((vid + voff, _flip_kind(kind), flipped))
    edges = list(w2.edges)
    for t, h in w1.edges:
        edges.append((h + hoff, t + hoff))  # reversed orientation

    anchored = {h for _v, _k, rot in vertices for h in rot}
    links = [
        (w2.boundary[i][0], w1.boundary[i][0] + hoff) for i in range(len(w2.boundary))
    ]
    new_edges, circ = splice_edges(edges, anchored, links)
    return make_web((), vertices, new_edges, w1.circles + w2.circles + circ)
