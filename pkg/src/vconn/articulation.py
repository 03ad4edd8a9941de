"""Strong articulation points and the 2-vertex-connectivity test.

A strong articulation point is a vertex whose removal increases the number
of strongly connected components.  For a strongly connected graph they are
found in near-linear time from one pivot vertex: the pivot itself if its
removal disconnects the graph, plus the non-trivial dominators of the
flowgraphs rooted at the pivot in the graph and in its reversal.
"""

from __future__ import annotations

from .connectivity import _scc_ids, is_strongly_connected
from .dominators import dominator_tree, nontrivial_dominators
from .errors import NotStronglyConnected
from .graph import DiGraph, reverse


def strong_articulation_points(g: DiGraph, pivot: int = 0) -> set[int]:
    """All strong articulation points of a strongly connected graph.

    ``pivot`` is fixed to vertex 0 for determinism; the result is
    independent of the choice (the test suite re-checks with random
    pivots).  For a general graph, union the results over its strongly
    connected components.
    """
    if not is_strongly_connected(g):
        raise NotStronglyConnected(f"{g!r} is not strongly connected")
    n = g.n
    if n <= 2:
        return set()
    points: set[int] = set()
    _, ncomp = _scc_ids(n, g.out_adj, skip=pivot)
    if ncomp != 1:
        points.add(pivot)
    points |= nontrivial_dominators(dominator_tree(g, pivot))
    points |= nontrivial_dominators(dominator_tree(reverse(g), pivot))
    return points


def is_2vertex_connected(g: DiGraph) -> bool:
    """True iff g has >= 3 vertices, is strongly connected, and has no
    strong articulation points.  Never raises; small graphs are simply not
    2-vertex-connected."""
    if g.n < 3 or not is_strongly_connected(g):
        return False
    return not strong_articulation_points(g)
