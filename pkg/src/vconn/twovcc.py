"""The four 2-vertex-connected-component algorithms behind one contract.

A component is the vertex set of a maximal 2-vertex-connected subgraph
(size >= 3); distinct components share at most one vertex.  All variants
return the same canonical list: each component a sorted tuple of the input
graph's vertex ids, the list sorted lexicographically and deduplicated.

Variants:

* ``es``        - edge-pruning fixpoint: repeatedly delete edges running
                  between SCCs of the graph and of every single-vertex
                  deletion, then read the components off the biconnected
                  blocks of the undirected shadow.  O(n * m^2).
* ``per-vertex``- union over all v of the components containing v, found
                  by shrinking to root-children intersections of the two
                  dominator trees at v, or splitting at v.  O(n^2 * m).
* ``split``     - recursively split at a strong articulation point w into
                  the SCCs of G minus w (each rejoined with w).  O(n * m).
* ``domtree``   - recurse on the children sets of one dominator tree,
                  exploiting that every component is a set of siblings
                  (plus possibly the common parent).  O(n * m).
"""

from __future__ import annotations

from .articulation import strong_articulation_points
from .connectivity import _group_components, _scc_ids, undirected_biconnected_components
from .dominators import dominator_tree, nontrivial_dominators, root_children
from .errors import UnknownVariant, VertexOutOfRange
from .graph import (
    DiGraph,
    induced_subgraph,
    reverse,
    strip_labels,
    underlying_undirected,
)

Component = tuple[int, ...]
ComponentList = list[Component]

VARIANTS = ("es", "split", "domtree", "per-vertex")


def _canonical(comps, n: int) -> ComponentList:
    out = sorted({tuple(sorted(c)) for c in comps})
    total = sum(len(c) for c in out)
    assert not out or total < 3 * n, f"component size sum {total} >= 3n = {3 * n}"
    return out


def _is_2vc_subcall(h: DiGraph) -> bool:
    # h is known strongly connected with n >= 3 here.
    return not strong_articulation_points(h)


def es_fixpoint(g: DiGraph) -> DiGraph:
    """Delete inter-SCC edges of g and of g minus each vertex, to fixpoint.

    The result has no edges between its SCCs, and keeps that property
    under deletion of any single vertex; its 2-vertex-connected components
    are unchanged from g.
    """
    n = g.n
    out_adj: list[list[int]] = [list(row) for row in g.out_adj]
    while True:
        comp, _ = _scc_ids(n, out_adj)
        for v in range(n):
            row = out_adj[v]
            kept = [w for w in row if comp[w] == comp[v]]
            if len(kept) != len(row):
                out_adj[v] = kept
        removed = False
        for x in range(n):
            comp, _ = _scc_ids(n, out_adj, skip=x)
            for v in range(n):
                if v == x:
                    continue
                row = out_adj[v]
                kept = [w for w in row if w == x or comp[w] == comp[v]]
                if len(kept) != len(row):
                    out_adj[v] = kept
                    removed = True
        if not removed:
            break
    return DiGraph(n, ((u, w) for u in range(n) for w in out_adj[u]))


def two_vccs_es(g: DiGraph) -> ComponentList:
    """Components via the edge-pruning fixpoint and undirected blocks."""
    pruned = es_fixpoint(g)
    blocks = undirected_biconnected_components(underlying_undirected(pruned))
    comps = [b for b in blocks if len(b) >= 3]
    for c in comps:
        sub = induced_subgraph(pruned, c)
        assert _scc_count(sub) == 1 and _is_2vc_subcall(sub), (
            f"block {c} is not 2-vertex-connected in the directed sense"
        )
    return _canonical(comps, g.n)


def _scc_count(h: DiGraph) -> int:
    return _scc_ids(h.n, h.out_adj)[1]


def two_vccs_split(g: DiGraph) -> ComponentList:
    """Components by recursive splitting at strong articulation points."""
    work = [strip_labels(g)]
    out: list[tuple[int, ...]] = []
    while work:
        h = work.pop()
        if h.n < 3:
            continue
        comp, ncomp = _scc_ids(h.n, h.out_adj)
        if ncomp != 1:
            for c in _group_components(h.n, comp):
                if len(c) >= 3:
                    work.append(induced_subgraph(h, c))
            continue
        points = strong_articulation_points(h)
        if not points:
            out.append(h.origin_labels)
            continue
        # Any articulation point is valid; the median of the sorted set
        # keeps the recursion balanced on chain-like inputs.
        ordered = sorted(points)
        w = ordered[len(ordered) // 2]
        comp, _ = _scc_ids(h.n, h.out_adj, skip=w)
        for c in _group_components(h.n, comp):
            if len(c) >= 2:
                c.append(w)
                work.append(induced_subgraph(h, c))
    return _canonical(out, g.n)


def two_vccs_domtree(g: DiGraph) -> ComponentList:
    """Components via dominator-tree sibling sets.

    Every component appears inside some children set M(w) of the chosen
    dominator tree (together with w itself), so it suffices to recurse on
    the subgraphs induced by M(w) + {w} with |M(w)| >= 2.
    """
    out: list[tuple[int, ...]] = []
    work: list[DiGraph] = []
    g0 = strip_labels(g)
    comp, ncomp = _scc_ids(g0.n, g0.out_adj)
    if ncomp == 1 and g0.n >= 3:
        work.append(g0)
    else:
        for c in _group_components(g0.n, comp):
            if len(c) >= 3:
                work.append(induced_subgraph(g0, c))
    while work:
        h = work.pop()  # strongly connected, n >= 3
        points = strong_articulation_points(h)
        if not points:
            out.append(h.origin_labels)
            continue
        non_points = [v for v in range(h.n) if v not in points]
        if not non_points:
            # Every vertex is an articulation point (directed cycles, for
            # example); fall back to the splitting variant for this piece.
            labels = h.origin_labels
            out.extend(tuple(labels[i] for i in c) for c in two_vccs_split(h))
            continue
        v = non_points[0]
        t_fwd = dominator_tree(h, v)
        t_rev = dominator_tree(reverse(h), v)
        chosen = t_fwd
        if len(nontrivial_dominators(t_rev)) > len(nontrivial_dominators(t_fwd)):
            chosen = t_rev
        for w in range(h.n):
            m_set = chosen.children[w]
            if len(m_set) < 2:
                continue
            sub = induced_subgraph(h, (*m_set, w))
            comp, ncomp = _scc_ids(sub.n, sub.out_adj)
            if ncomp == 1:
                work.append(sub)
            else:
                for c in _group_components(sub.n, comp):
                    if len(c) >= 3:
                        work.append(induced_subgraph(sub, c))
    return _canonical(out, g.n)


def two_vccs_containing(g: DiGraph, v: int) -> ComponentList:
    """Exactly the components of g that contain vertex v.

    Inside the strongly connected component of v: if the graph is already
    2-vertex-connected it is the answer; if v is not an articulation point
    the search shrinks to the intersection of the root-children sets of
    the dominator trees at v (no component can contain v when that
    intersection has fewer than two vertices); otherwise the graph splits
    at v like the ``split`` variant.
    """
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} outside [0, {g.n})")
    out: list[tuple[int, ...]] = []
    work: list[tuple[DiGraph, int]] = [(strip_labels(g), v)]
    while work:
        h, x = work.pop()
        if h.n < 3:
            continue
        comp, ncomp = _scc_ids(h.n, h.out_adj)
        if ncomp != 1:
            cx = [u for u in range(h.n) if comp[u] == comp[x]]
            if len(cx) < 3:
                continue
            h = induced_subgraph(h, cx)
            x = cx.index(x)
        points = strong_articulation_points(h)
        if not points:
            out.append(h.origin_labels)
            continue
        if x not in points:
            k_fwd = root_children(dominator_tree(h, x))
            k_rev = root_children(dominator_tree(reverse(h), x))
            candidates = k_fwd & k_rev
            if len(candidates) >= 2:
                keep = sorted(candidates | {x})
                work.append((induced_subgraph(h, keep), keep.index(x)))
            # else: no component contains x.
            continue
        comp, _ = _scc_ids(h.n, h.out_adj, skip=x)
        for c in _group_components(h.n, comp):
            if len(c) < 2:
                continue
            keep = sorted(c + [x])
            sub = induced_subgraph(h, keep)
            if _scc_count(sub) == 1:
                work.append((sub, keep.index(x)))
    return _canonical(out, g.n)


def two_vccs(g: DiGraph, algo: str = "split") -> ComponentList:
    """Dispatch to one of the four variants; identical output contract."""
    if algo == "es":
        return two_vccs_es(g)
    if algo == "split":
        return two_vccs_split(g)
    if algo == "domtree":
        return two_vccs_domtree(g)
    if algo == "per-vertex":
        comps: list[Component] = []
        for v in range(g.n):
            comps.extend(two_vccs_containing(g, v))
        return _canonical(comps, g.n)
    raise UnknownVariant(f"unknown 2-vcc variant {algo!r}; expected one of {VARIANTS}")
