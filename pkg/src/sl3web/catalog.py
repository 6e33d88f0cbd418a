"""Small named webs used throughout the tests and the docs.

Where a web has border legs, half-edge ids of boundary points are
100+position so fixtures stay readable in failure output.
"""

from __future__ import annotations

from .web import MINUS, PLUS, SINK, SOURCE, Web, make_web


def empty_web() -> Web:
    return make_web()


def circle_web(k: int = 1) -> Web:
    """k vertexless loops drawn side by side."""
    return make_web(circles=k)


def arc() -> Web:
    """A single strand between two border points, oriented left to right."""
    return make_web(boundary=[(100, PLUS), (101, MINUS)], edges=[(100, 101)])


def tripod() -> Web:
    """One sink with three legs down to the border (sign string +++)."""
    return make_web(
        boundary=[(100, PLUS), (101, PLUS), (102, PLUS)],
        vertices=[(0, SINK, (10, 11, 12))],
        edges=[(100, 10), (101, 11), (102, 12)],
    )


def theta() -> Web:
    """Two vertices joined by three parallel edges; two digon faces."""
    return make_web(
        vertices=[(0, SOURCE, (1, 2, 3)), (1, SINK, (6, 5, 4))],
        edges=[(1, 4), (2, 5), (3, 6)],
    )


def digon_arc() -> Web:
    """An arc interrupted by one digon (sign string +-), the smallest
    elliptic web with boundary."""
    return make_web(
        boundary=[(100, PLUS), (101, MINUS)],
        vertices=[(0, SINK, (3, 2, 4)), (1, SOURCE, (5, 6, 7))],
        edges=[(100, 2), (5, 3), (6, 4), (7, 101)],
    )


def double_digon_arc() -> Web:
    """An arc interrupted by two digons in a row (sign string +-)."""
    return make_web(
        boundary=[(100, PLUS), (101, MINUS)],
        vertices=[
            (0, SINK, (3, 2, 4)),
            (1, SOURCE, (5, 6, 7)),
            (2, SINK, (9, 8, 10)),
            (3, SOURCE, (11, 12, 13)),
        ],
        edges=[(100, 2), (5, 3), (6, 4), (7, 8), (11, 9), (12, 10), (13, 101)],
    )


def cube() -> Web:
    """The cube graph as a closed web: outer square x1..x4, inner square
    y1..y4, four connecting edges; all six faces are squares."""
    vertices = []
    edges = []

    def prev(i):
        return i - 1 if i > 1 else 4

    for i in range(1, 5):
        x_source = i % 2 == 1
        vertices.append((i, SOURCE if x_source else SINK, (200 + i, 400 + i, 250 + prev(i))))
        vertices.append((4 + i, SINK if x_source else SOURCE, (300 + i, 350 + prev(i), 450 + i)))
        # outer edge x_i -- x_{i+1}
        edges.append((200 + i, 250 + i) if x_source else (250 + i, 200 + i))
        # vertical x_i -- y_i
        edges.append((400 + i, 450 + i) if x_source else (450 + i, 400 + i))
        # inner edge y_i -- y_{i+1}, y_i is a source exactly when x_i is not
        edges.append((350 + i, 300 + i) if x_source else (300 + i, 350 + i))
    return make_web(vertices=vertices, edges=edges)


def flower() -> Web:
    """A 24-vertex non-elliptic web over the sign string +--++--++--+.

    A hexagon c1..c6 with a spoke from each c_i to an outer vertex o_i;
    between consecutive spokes hangs a petal o_i - p_i - q_i - o_{i+1}
    (with a rung p_i - q_i), and p_i, q_i drop legs to the border.  All
    seven bounded faces (hexagon and six petals) have six sides.
    """
    vertices = []
    edges = []
    boundary = [None] * 12

    def prev(i):
        return i - 1 if i > 1 else 6

    def nxt(i):
        return i + 1 if i < 6 else 1

    for i in range(1, 7):
        odd = i % 2 == 1
        # c_i is a sink, o_i a source, p_i a sink, q_i a source when i is odd
        vertices.append((i, SINK if odd else SOURCE, (1000 + i, 2500 + prev(i), 2000 + i)))
        vertices.append((10 + i, SOURCE if odd else SINK, (1500 + prev(i), 1100 + i, 1200 + i)))
        vertices.append((20 + i, SINK if odd else SOURCE, (1300 + i, 1600 + i, 1800 + i)))
        vertices.append((30 + i, SOURCE if odd else SINK, (1700 + i, 1400 + i, 1900 + i)))

        # hexagon edge c_i -- c_{i+1}: the even-indexed corner is the source
        edges.append((2500 + i, 2000 + i) if odd else (2000 + i, 2500 + i))
        # spoke o_i -- c_i
        edges.append((1100 + i, 1000 + i) if odd else (1000 + i, 1100 + i))
        # leg o_i -- p_i
        edges.append((1200 + i, 1300 + i) if odd else (1300 + i, 1200 + i))
        # leg q_i -- o_{i+1}
        edges.append((1400 + i, 1500 + i) if odd else (1500 + i, 1400 + i))
        # rung q_i -- p_i
        edges.append((1700 + i, 1600 + i) if odd else (1600 + i, 1700 + i))

        # border legs; petals are laid out right to left, q_i left of p_i
        qpos = 2 * (6 - i)
        ppos = qpos + 1
        if odd:
            edges.append((1900 + i, 100 + qpos))
            boundary[qpos] = (100 + qpos, MINUS)
            edges.append((100 + ppos, 1800 + i))
            boundary[ppos] = (100 + ppos, PLUS)
        else:
            edges.append((100 + qpos, 1900 + i))
            boundary[qpos] = (100 + qpos, PLUS)
            edges.append((1800 + i, 100 + ppos))
            boundary[ppos] = (100 + ppos, MINUS)
    return make_web(boundary=boundary, vertices=vertices, edges=edges)


FLOWER_SIGNS = tuple("+--++--++--+")
