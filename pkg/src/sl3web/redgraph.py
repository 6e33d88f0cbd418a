"""Red graphs: subgraphs of a web's dual graph and their reductions.

A red graph is a non-empty induced subgraph of the dual graph supported
on disk faces, subject to the corner rule: no web vertex may have all
three of its corners selected.  For a face f with deg_D sides of which
deg_G are shared with other selected faces, write ed(f) = deg_D - 2 deg_G
(always even and nonnegative).  An orientation of the red graph's edges
fits when every face satisfies indeg(f) <= 2 - ed(f)/2; red graphs with
a fitting orientation are admissible, and exact when additionally the
index

    I(G) = 2 #faces - #edges - (1/2) sum ed(f)

vanishes.  Reducing a web along a red graph deletes every web edge
bordering a selected face together with the vertices those edges use,
then splices the cut strands back together, pairwise around each face.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .bracket import classify, split_elliptic
from .errors import (
    SizeGuardError,
    StageMismatchError,
    TheoremViolationError,
)
from .web import (
    Region,
    RegionTable,
    Web,
    _Maps,
    find_elliptic_face,
    make_web,
    region_table,
    splice_edges,
)


@dataclass(frozen=True)
class DualGraph:
    """The dual graph of a web: one node per region (border regions and
    the unbounded one included), one edge per web edge between the
    regions on its two sides."""

    web: Web
    table: RegionTable
    sides: tuple[tuple[int, int], ...]  # per web edge: (right region, left region)
    corners: dict[int, tuple[int, int, int]]  # vertex id -> its corner regions

    def degree(self, region_id: int) -> int:
        return sum((a == region_id) + (b == region_id) for a, b in self.sides)

    def disk_faces(self) -> list[int]:
        return [r.id for r in self.table.regions if r.is_disk]


def dual_graph(web: Web) -> DualGraph:
    table = region_table(web)
    sides = tuple(
        (table.region_of[t], table.region_of[h]) for t, h in web.edges
    )
    corners = {
        vid: tuple(table.region_of[h] for h in rot) for vid, _k, rot in web.vertices
    }
    return DualGraph(web, table, sides, corners)


class RedGraph:
    """An induced subgraph of the dual graph on a set of disk faces."""

    def __init__(self, dual: DualGraph, faces):
        self.dual = dual
        self.faces = tuple(sorted(set(faces)))
        fs = set(self.faces)
        edges = []
        for i, (a, b) in enumerate(dual.sides):
            if a in fs and b in fs:
                if a == b:
                    raise AssertionError("disk faces never bound both sides of an edge")
                edges.append(i)
        self.edges = tuple(edges)

    def __repr__(self):
        return f"RedGraph(faces={list(self.faces)}, edges={len(self.edges)}, I={self.level})"

    @cached_property
    def degree_in_graph(self) -> dict[int, int]:
        deg = {f: 0 for f in self.faces}
        for i in self.edges:
            a, b = self.dual.sides[i]
            deg[a] += 1
            deg[b] += 1
        return deg

    def ed(self, face: int) -> int:
        return self.dual.degree(face) - 2 * self.degree_in_graph[face]

    def cap(self, face: int) -> int:
        """Maximum allowed in-degree of a fitting orientation at `face`."""
        return 2 - self.ed(face) // 2

    @cached_property
    def level(self) -> int:
        """The index I(G)."""
        return 2 * len(self.faces) - len(self.edges) - sum(self.ed(f) for f in self.faces) // 2

    def is_fair(self) -> bool:
        return all(self.ed(f) <= 4 for f in self.faces)

    def is_nice(self) -> bool:
        return all(self.ed(f) <= 2 for f in self.faces)

    def components(self) -> list[tuple[int, ...]]:
        parent = {f: f for f in self.faces}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in self.edges:
            a, b = self.dual.sides[i]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        groups: dict[int, list[int]] = {}
        for f in self.faces:
            groups.setdefault(find(f), []).append(f)
        return [tuple(sorted(g)) for g in sorted(groups.values())]


def corner_selection_ok(dual: DualGraph, faces) -> bool:
    """The corner rule: at most two of any vertex's corners selected."""
    fs = set(faces)
    return all(sum(c in fs for c in corners) <= 2 for corners in dual.corners.values())


MAX_ENUM_FACES = 24


def enumerate_red_graphs(web: Web, dual: DualGraph | None = None):
    """Yield every red graph of the web (deterministic order).

    Backtracks over the disk faces with the corner rule checked
    incrementally, so branches that already pinch some vertex are never
    explored.  Guarded for webs with more than MAX_ENUM_FACES disk faces.
    """
    if dual is None:
        dual = dual_graph(web)
    disk = dual.disk_faces()
    if len(disk) > MAX_ENUM_FACES:
        raise SizeGuardError(
            f"{len(disk)} disk faces; red graph enumeration is capped at {MAX_ENUM_FACES}"
        )
    by_face: dict[int, list[int]] = {f: [] for f in disk}
    for vid, corners in dual.corners.items():
        for c in corners:
            if c in by_face:
                by_face[c].append(vid)
    count = {vid: 0 for vid in dual.corners}

    def rec(i: int, chosen: list[int]):
        if i == len(disk):
            if chosen:
                yield RedGraph(dual, chosen)
            return
        f = disk[i]
        blocked = False
        for vid in by_face[f]:
            count[vid] += 1
            if count[vid] > 2:
                blocked = True
        if not blocked:
            chosen.append(f)
            yield from rec(i + 1, chosen)
            chosen.pop()
        for vid in by_face[f]:
            count[vid] -= 1
        yield from rec(i + 1, chosen)

    yield from rec(0, [])


# ---------------------------------------------------------------------------
# fitting orientations


def find_fitting_orientation(red: RedGraph):
    """An orientation with indeg(f) <= cap(f) everywhere, or None.

    Feasibility is a bipartite flow problem: a unit per edge must land on
    one of its two endpoint faces without exceeding any face's capacity.
    The returned orientation maps edge index -> (tail face, head face)
    and is re-checked against the caps before being returned.
    """
    caps = {f: red.cap(f) for f in red.faces}
    if any(c < 0 for c in caps.values()):
        return None
    if len(red.edges) > sum(caps.values()):
        return None
    g = nx.DiGraph()
    for i in red.edges:
        a, b = red.dual.sides[i]
        g.add_edge("s", ("e", i), capacity=1)
        g.add_edge(("e", i), ("f", a), capacity=1)
        g.add_edge(("e", i), ("f", b), capacity=1)
    for f in red.faces:
        if caps[f] > 0:
            g.add_edge(("f", f), "t", capacity=caps[f])
    if not red.edges:
        return {}
    if "t" not in g:
        return None
    value, flow = nx.maximum_flow(g, "s", "t")
    if value < len(red.edges):
        return None
    orientation = {}
    for i in red.edges:
        a, b = red.dual.sides[i]
        into_a = flow[("e", i)].get(("f", a), 0)
        orientation[i] = (b, a) if into_a else (a, b)
    # independent re-check, not trusting the flow bookkeeping
    indeg = {f: 0 for f in red.faces}
    for i, (_tail, head) in orientation.items():
        indeg[head] += 1
    if any(indeg[f] > caps[f] for f in red.faces):
        raise AssertionError("max-flow produced an overfull orientation")
    if not red.is_fair():
        raise TheoremViolationError("admissible red graph with a face of ed > 4")
    return orientation


BRUTE_FORCE_EDGE_LIMIT = 20


def brute_force_fitting_orientation(red: RedGraph):
    """Try all 2^#edges orientations in lexicographic order; the slow
    twin of find_fitting_orientation for cross-checking."""
    if len(red.edges) > BRUTE_FORCE_EDGE_LIMIT:
        raise SizeGuardError(
            f"{len(red.edges)} edges; brute force is capped at {BRUTE_FORCE_EDGE_LIMIT}"
        )
    caps = {f: red.cap(f) for f in red.faces}
    if any(c < 0 for c in caps.values()):
        return None
    for bits in itertools.product((0, 1), repeat=len(red.edges)):
        indeg = {f: 0 for f in red.faces}
        ok = True
        orientation = {}
        for i, bit in zip(red.edges, bits):
            a, b = red.dual.sides[i]
            tail, head = ((a, b) if bit == 0 else (b, a))
            orientation[i] = (tail, head)
            indeg[head] += 1
            if indeg[head] > caps[head]:
                ok = False
                break
        if ok:
            return orientation
    return None


COUNT_TOTAL_EDGE_LIMIT = 30


def count_fitting_orientations(red: RedGraph) -> int:
    """Number of fitting orientations, multiplicative over components."""
    if len(red.edges) > COUNT_TOTAL_EDGE_LIMIT:
        raise SizeGuardError(
            f"{len(red.edges)} edges; counting is capped at {COUNT_TOTAL_EDGE_LIMIT}"
        )
    caps = {f: red.cap(f) for f in red.faces}
    if any(c < 0 for c in caps.values()):
        return 0
    total = 1
    for comp in red.components():
        cset = set(comp)
        edges = [i for i in red.edges if red.dual.sides[i][0] in cset]
        if len(edges) > BRUTE_FORCE_EDGE_LIMIT:
            raise SizeGuardError(
                f"component with {len(edges)} edges; capped at {BRUTE_FORCE_EDGE_LIMIT}"
            )
        found = 0
        for bits in itertools.product((0, 1), repeat=len(edges)):
            indeg = {f: 0 for f in comp}
            ok = True
            for i, bit in zip(edges, bits):
                a, b = red.dual.sides[i]
                head = b if bit == 0 else a
                indeg[head] += 1
                if indeg[head] > caps[head]:
                    ok = False
                    break
            if ok:
                found += 1
        total *= found
    return total


def is_admissible(red: RedGraph) -> bool:
    return find_fitting_orientation(red) is not None


def is_exact(red: RedGraph) -> bool:
    return red.level == 0 and is_admissible(red)


def in_out_degrees(red: RedGraph, orientation) -> dict[int, tuple[int, int]]:
    counts = {f: [0, 0] for f in red.faces}
    for _i, (tail, head) in orientation.items():
        counts[head][0] += 1
        counts[tail][1] += 1
    return {f: (i, o) for f, (i, o) in counts.items()}


def orientation_index_sum(red: RedGraph, orientation) -> int:
    """Sum over faces of i_o(f) = 2 - ed(f)/2 - indeg(f); equals I(G)
    for every orientation, which the callers use as a bookkeeping check."""
    indeg = {f: 0 for f in red.faces}
    for _i, (_tail, head) in orientation.items():
        indeg[head] += 1
    return sum(2 - red.ed(f) // 2 - indeg[f] for f in red.faces)


# ---------------------------------------------------------------------------
# grey half-edges and pairings


def grey_halves(red: RedGraph, face: int) -> tuple[int, ...]:
    """The loose strand ends a reduction leaves around `face`, in cyclic
    order along the face's walk.  There are exactly ed(face) of them, at
    the walk vertices having no second selected corner."""
    region = red.dual.table.regions[face]
    if region.is_circle_interior:
        return ()
    maps = _Maps(red.dual.web)
    fs = set(red.faces)
    (walk,) = region.walks
    greys = []
    for i, d in enumerate(walk):
        vid = maps.endpoint[d][1]
        if sum(c in fs for c in red.dual.corners[vid]) != 1:
            continue
        sides = {d, maps.partner[walk[i - 1]]}
        (s,) = [x for x in maps.rot[vid] if x not in sides]
        greys.append(s)
    if len(greys) != red.ed(face):
        raise TheoremViolationError(
            f"face {face}: {len(greys)} grey half-edges but ed = {red.ed(face)}"
        )
    directions = [maps.is_tail[s] for s in greys]
    if any(directions[i] == directions[i - 1] for i in range(len(directions))) and greys:
        raise TheoremViolationError(
            f"face {face}: grey strand directions do not alternate"
        )
    return tuple(greys)


def enumerate_pairings(red: RedGraph) -> list[tuple[tuple[int, int], ...]]:
    """All ways to join the grey ends without crossings: one choice per
    face with ed = 4, nothing to choose elsewhere.  Requires a fair red
    graph (every ed <= 4)."""
    if not red.is_fair():
        raise ValueError("pairings are only defined when every face has ed <= 4")
    per_face = []
    for f in red.faces:
        g = grey_halves(red, f)
        if not g:
            continue
        if len(g) == 2:
            per_face.append([((g[0], g[1]),)])
        else:
            per_face.append(
                [((g[0], g[1]), (g[2], g[3])), ((g[1], g[2]), (g[3], g[0]))]
            )
    out = []
    for combo in itertools.product(*per_face):
        out.append(tuple(pair for group in combo for pair in group))
    return out


# ---------------------------------------------------------------------------
# reduction


def g_reduction(web: Web, red: RedGraph, pairing=None) -> Web:
    """Reduce the web along a red graph.

    Deletes every web edge with a selected face on either side (and, for
    selected circle interiors, the circle itself), deletes the vertices
    those edges used, and splices the grey ends according to `pairing`
    (default: the first enumerated one).
    """
    if red.dual.web != web:
        raise StageMismatchError("red graph belongs to a different web")
    if pairing is None:
        pairing = enumerate_pairings(red)[0]
    fs = set(red.faces)
    dead_edges = {
        i for i, (a, b) in enumerate(red.dual.sides) if a in fs or b in fs
    }
    maps = _Maps(web)
    dead_vertices = {
        maps.endpoint[x][1]
        for i in dead_edges
        for x in web.edges[i]
    }
    grey_total = sum(red.ed(f) for f in red.faces)
    if len(dead_vertices) != 2 * len(red.edges) + grey_total:
        raise TheoremViolationError(
            f"reduction removes {len(dead_vertices)} vertices, expected "
            f"2*{len(red.edges)} + {grey_total}"
        )
    circle_faces = sum(
        1 for f in red.faces if red.dual.table.regions[f].is_circle_interior
    )
    anchored = {
        h for vid, _k, rot in web.vertices if vid not in dead_vertices for h in rot
    }
    anchored |= {h for h, _s in web.boundary}
    new_edges, circ = splice_edges(web.edges, anchored, pairing, dead_edges)
    vertices = [v for v in web.vertices if v[0] not in dead_vertices]
    return make_web(
        web.boundary, vertices, new_edges, web.circles - circle_faces + circ
    )


def projection_degree_shift(red: RedGraph, pairing=None) -> int:
    """Degree shift of the projection-inclusion composite through the
    reduced web: twice the index, independent of the pairing."""
    return 2 * red.level


# ---------------------------------------------------------------------------
# minimality and exactness


MINIMAL_SCAN_FACE_LIMIT = 15


def _reach(red: RedGraph, orientation, start: int) -> frozenset:
    adj: dict[int, list[int]] = {f: [] for f in red.faces}
    for _i, (tail, head) in orientation.items():
        adj[tail].append(head)
    seen = {start}
    todo = [start]
    while todo:
        f = todo.pop()
        for g in adj[f]:
            if g not in seen:
                seen.add(g)
                todo.append(g)
    return frozenset(seen)


def minimal_admissible_subgraph(red: RedGraph) -> RedGraph:
    """A minimal admissible red graph inside an admissible one.

    First shrinks along out-reachable face sets (restricting a fitting
    orientation to such a set only drops incoming edges, so it stays
    fitting), then scans the remaining subsets smallest-first; the first
    admissible one found cannot contain a smaller admissible subgraph.
    """
    orientation = find_fitting_orientation(red)
    if orientation is None:
        raise ValueError("minimal_admissible_subgraph needs an admissible red graph")
    while True:
        smallest = min(
            (_reach(red, orientation, f) for f in red.faces), key=len
        )
        if len(smallest) == len(red.faces):
            break
        red = RedGraph(red.dual, smallest)
        orientation = {
            i: d for i, d in orientation.items() if i in set(red.edges)
        }
    if len(red.faces) > MINIMAL_SCAN_FACE_LIMIT:
        raise SizeGuardError(
            f"{len(red.faces)} faces after shrinking; subset scan capped at "
            f"{MINIMAL_SCAN_FACE_LIMIT}"
        )
    for size in range(1, len(red.faces)):
        for combo in itertools.combinations(red.faces, size):
            candidate = RedGraph(red.dual, combo)
            if find_fitting_orientation(candidate) is not None:
                return candidate
    return red


def max_admissible_level(web: Web, dual: DualGraph | None = None):
    """Largest index among admissible red graphs, or None when no red
    graph of the web is admissible."""
    best = None
    for g in enumerate_red_graphs(web, dual):
        if (best is None or g.level > best) and is_admissible(g):
            best = g.level
    return best


def find_exact_red_graph(web: Web) -> RedGraph | None:
    """An exact red graph of a non-elliptic web, or None when the web has
    no admissible red graph at all.

    Scans every red graph, takes an admissible one of maximal index and
    shrinks it to a minimal admissible subgraph, which must then have
    index zero.  Two cross-checks guard the underlying facts: no
    inadmissible red graph may have an index above every admissible one,
    and the minimal subgraph must come out exact.
    """
    if find_elliptic_face(web) is not None:
        raise ValueError("find_exact_red_graph expects a non-elliptic web")
    dual = dual_graph(web)
    best = None
    max_nonneg = None
    for g in enumerate_red_graphs(web, dual):
        if g.level >= 0 and (max_nonneg is None or g.level > max_nonneg):
            max_nonneg = g.level
        if is_admissible(g) and (best is None or g.level > best.level):
            best = g
    if best is None:
        if max_nonneg is not None:
            raise TheoremViolationError(
                f"a red graph of index {max_nonneg} >= 0 exists but none is admissible"
            )
        return None
    if max_nonneg is not None and max_nonneg > best.level:
        raise TheoremViolationError(
            f"red graph of index {max_nonneg} exists but the best admissible "
            f"index is {best.level}"
        )
    minimal = minimal_admissible_subgraph(best)
    if minimal.level != 0:
        raise TheoremViolationError(
            f"minimal admissible red graph has index {minimal.level}, not 0"
        )
    return minimal


# ---------------------------------------------------------------------------
# staged reductions and decomposition


def red_graph_from_faces(web: Web, faces) -> RedGraph:
    """Build a red graph from region ids, checking they name disk faces
    of this web and respect the corner rule."""
    dual = dual_graph(web)
    disk = set(dual.disk_faces())
    faces = list(faces)
    if not faces:
        raise StageMismatchError("a red graph needs at least one face")
    bad = [f for f in faces if f not in disk]
    if bad:
        raise StageMismatchError(f"not disk faces of this web: {bad}")
    if not corner_selection_ok(dual, faces):
        raise StageMismatchError("selection pinches a vertex (three corners chosen)")
    return RedGraph(dual, faces)


def reduce_by_stack(web: Web, stages) -> tuple[Web, int]:
    """Apply reductions stage by stage; each stage is (faces, pairing_index).

    Face ids refer to the regions of the web as it stands at that stage,
    so a stale stack raises StageMismatchError rather than quietly
    reducing the wrong faces.  Returns the final web and the accumulated
    projection degree shift.
    """
    shift = 0
    current = web
    for faces, pairing_index in stages:
        red = red_graph_from_faces(current, faces)
        pairings = enumerate_pairings(red)
        if not 0 <= pairing_index < len(pairings):
            raise StageMismatchError(
                f"pairing index {pairing_index} out of range ({len(pairings)} available)"
            )
        shift += projection_degree_shift(red)
        current = g_reduction(current, red, pairings[pairing_index])
    return current, shift


@dataclass(frozen=True)
class Decomposition:
    """Direct summands (web, degree shift) of a web's module, with a flag
    saying whether they account for the whole module."""

    factors: tuple[tuple[Web, int], ...]
    complete: bool


def decompose(web: Web) -> Decomposition:
    """Split the module of a web into indecomposable summands as far as
    the reduction calculus reaches.

    Elliptic faces split off shifted copies exactly; for a non-elliptic
    decomposable web one exact reduction summand is extracted and the
    remainder is left unaccounted (complete=False).
    """
    factors: list[tuple[Web, int]] = []
    complete = True
    work: list[tuple[Web, int]] = [(web, 0)]
    while work:
        w, base = work.pop()
        for piece, shift in split_elliptic(w):
            total = base + shift
            if not piece.boundary:
                # a closed non-elliptic web is empty; its module is the ground ring
                factors.append((piece, total))
                continue
            if classify(piece).indecomposable:
                factors.append((piece, total))
                continue
            complete = False
            red = find_exact_red_graph(piece)
            if red is None:
                raise TheoremViolationError(
                    "decomposable non-elliptic web without an admissible red graph"
                )
            work.append((g_reduction(piece, red), total))
    factors.sort(key=lambda f: (f[1], f[0].boundary, f[0].vertices, f[0].edges, f[0].circles))
    return Decomposition(tuple(factors), complete)
