"""Approximately-minimum edge sets preserving 2-vertex-connected structure.

Three nested problems are solved:

1. keep the 2-vertex-connected components intact,
2. additionally keep the whole graph strongly connected,
3. additionally keep the components of the coarsened graph (overlapping
   components contracted to super-vertices) intact.

Edges outside the components are irrelevant for problem 1, so it splits
into independent per-component subproblems: a minimum subgraph with in-
and out-degree >= 2 everywhere (computed exactly by a deletion flow),
re-augmented to 2-vertex-connectivity by deletion-minimalisation.  The
strong-connectivity part of problem 2 is handled on the coarsened graph by
a union of two arborescences pruned to deletion-minimality, which is at
most twice the optimum (weaker than the best published ratio, but simple
and certifiable).  Every result carries a recomputed certificate so that
validity never rests on the construction being right.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._flow import FlowNetwork
from .articulation import is_2vertex_connected
from .connectivity import _scc_ids
from .errors import NotStronglyConnected, NotTwoVertexConnected
from .graph import DiGraph, Edge, induced_subgraph, strip_labels
from .twovcc import two_vccs_split


@dataclass(frozen=True)
class CoarsenedGraph:
    """Quotient of a graph under contraction of overlapping components.

    ``classes[i]`` is the sorted set of original vertices merged into
    super-vertex i (classes are ordered by their smallest member);
    ``edge_origins`` maps each quotient edge to the lexicographically
    smallest original edge realising it.
    """

    graph: DiGraph
    classes: tuple[tuple[int, ...], ...]
    edge_origins: dict[Edge, Edge]


@dataclass(frozen=True)
class SparsifyResult:
    """Retained edge set plus the data needed to certify it."""

    problem: int
    edges: tuple[Edge, ...]
    components: tuple[tuple[int, ...], ...]
    per_component_edges: tuple[tuple[Edge, ...], ...]
    recomputed_components: tuple[tuple[int, ...], ...]
    strongly_connected: bool | None = None
    coarse_components: tuple[tuple[int, ...], ...] | None = None
    recomputed_coarse_components: tuple[tuple[int, ...], ...] | None = None

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def certificate_ok(self) -> bool:
        if self.components != self.recomputed_components:
            return False
        if self.strongly_connected is False:
            return False
        if self.coarse_components != self.recomputed_coarse_components:
            return False
        return True


def coarsen(g: DiGraph) -> CoarsenedGraph:
    """Contract each union of overlapping components to a super-vertex."""
    g = strip_labels(g)
    comps = two_vccs_split(g)
    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for comp in comps:
        root = find(comp[0])
        for v in comp[1:]:
            parent[find(v)] = root
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    classes = sorted((tuple(sorted(grp)) for grp in groups.values()), key=lambda c: c[0])
    cls_of = [0] * g.n
    for i, cls in enumerate(classes):
        for v in cls:
            cls_of[v] = i
    edge_origins: dict[Edge, Edge] = {}
    for u, v in sorted(g.edges):
        cu, cv = cls_of[u], cls_of[v]
        if cu != cv and (cu, cv) not in edge_origins:
            edge_origins[(cu, cv)] = (u, v)
    quotient = DiGraph(len(classes), edge_origins.keys())
    return CoarsenedGraph(quotient, tuple(classes), edge_origins)


def min_degree2_subgraph(g: DiGraph) -> tuple[Edge, ...]:
    """Minimum edge subset keeping out- and in-degree >= 2 at every vertex.

    Solved exactly: deleting an edge (u, v) spends one unit of u's
    out-budget (outdeg-2) and one of v's in-budget (indeg-2), so the
    maximum number of deletable edges is a bipartite flow.
    """
    if not is_2vertex_connected(g):
        raise NotTwoVertexConnected(f"{g!r} is not 2-vertex-connected")
    n = g.n
    edges = sorted(g.edges)
    source, sink = 0, 1
    net = FlowNetwork(2 + 2 * n)
    for v in range(n):
        out_budget = len(g.out_adj[v]) - 2
        if out_budget > 0:
            net.add_edge(source, 2 + v, out_budget)
    edge_arcs: list[int] = []
    for u, v in edges:
        edge_arcs.append(net.add_edge(2 + u, 2 + n + v, 1))
    for v in range(n):
        in_budget = len(g.in_adj[v]) - 2
        if in_budget > 0:
            net.add_edge(2 + n + v, sink, in_budget)
    net.max_flow(source, sink)
    kept = [e for e, arc in zip(edges, edge_arcs) if not net.saturated(arc)]
    return tuple(kept)


def _edge_set_strongly_connected(n: int, edges) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
    if n == 0:
        return False
    return _scc_ids(n, adj)[1] == 1


def _edge_set_is_2vc(n: int, edges) -> bool:
    return is_2vertex_connected(DiGraph(n, edges))


def approx_2vcss(g: DiGraph) -> tuple[Edge, ...]:
    """2-vertex-connected spanning edge set within 1.5x of the minimum.

    Starts from the exact minimum degree-2 core and removes every other
    edge whose deletion keeps the graph 2-vertex-connected, scanning in
    descending (u, v) order.  Deletions only get harder as edges go, so a
    single pass reaches a deletion-minimal superset of the core.
    """
    core = set(min_degree2_subgraph(g))
    kept = set(g.edges)
    for e in sorted(kept - core, reverse=True):
        kept.discard(e)
        if not _edge_set_is_2vc(g.n, kept):
            kept.add(e)
    return tuple(sorted(kept))


def approx_mscss(g: DiGraph) -> tuple[Edge, ...]:
    """Strongly connected spanning edge set within 2x of the minimum.

    Union of an out-arborescence and an in-arborescence rooted at vertex 0
    (at most 2n-2 edges; any strongly connected subgraph needs n), pruned
    to deletion-minimality in descending (u, v) order.
    """
    if not _edge_set_strongly_connected(g.n, g.edges):
        raise NotStronglyConnected(f"{g!r} is not strongly connected")
    n = g.n
    if n == 1:
        return ()
    kept: set[Edge] = set()
    # Out-arborescence: DFS from 0 exploring ascending neighbours first.
    seen = [False] * n
    stack = [(0, -1)]
    while stack:
        u, p = stack.pop()
        if seen[u]:
            continue
        seen[u] = True
        if p >= 0:
            kept.add((p, u))
        for w in reversed(g.out_adj[u]):
            if not seen[w]:
                stack.append((w, u))
    # In-arborescence: DFS from 0 along reversed edges exploring
    # descending neighbours first (the opposite orientation lets the two
    # trees share cycle edges instead of doubling them).
    seen = [False] * n
    stack = [(0, -1)]
    while stack:
        u, p = stack.pop()
        if seen[u]:
            continue
        seen[u] = True
        if p >= 0:
            kept.add((u, p))
        for w in g.in_adj[u]:
            if not seen[w]:
                stack.append((w, u))
    for e in sorted(kept, reverse=True):
        kept.discard(e)
        if not _edge_set_strongly_connected(n, kept):
            kept.add(e)
    return tuple(sorted(kept))


def sparsify_problem1(g: DiGraph) -> SparsifyResult:
    """Fewest edges (approximately) whose graph has the same components."""
    g = strip_labels(g)
    comps = two_vccs_split(g)
    per_component: list[tuple[Edge, ...]] = []
    retained: set[Edge] = set()
    for comp in comps:
        sub = induced_subgraph(g, comp)
        labels = sub.origin_labels
        kept = tuple(sorted((labels[u], labels[v]) for u, v in approx_2vcss(sub)))
        per_component.append(kept)
        retained.update(kept)
    edges = tuple(sorted(retained))
    recomputed = two_vccs_split(DiGraph(g.n, edges))
    return SparsifyResult(
        problem=1,
        edges=edges,
        components=tuple(comps),
        per_component_edges=tuple(per_component),
        recomputed_components=tuple(recomputed),
    )


def sparsify_problem2(g: DiGraph) -> SparsifyResult:
    """Problem 1 plus strong connectivity of the retained graph."""
    g = strip_labels(g)
    if not _edge_set_strongly_connected(g.n, g.edges):
        raise NotStronglyConnected(f"{g!r} is not strongly connected")
    base = sparsify_problem1(g)
    coarse = coarsen(g)
    retained = set(base.edges)
    for ce in approx_mscss(coarse.graph):
        retained.add(coarse.edge_origins[ce])
    edges = tuple(sorted(retained))
    recomputed = two_vccs_split(DiGraph(g.n, edges))
    return SparsifyResult(
        problem=2,
        edges=edges,
        components=base.components,
        per_component_edges=base.per_component_edges,
        recomputed_components=tuple(recomputed),
        strongly_connected=_edge_set_strongly_connected(g.n, edges),
    )


def sparsify_problem3(g: DiGraph) -> SparsifyResult:
    """Problem 1 on the graph and on its coarsened graph simultaneously."""
    g = strip_labels(g)
    base = sparsify_problem1(g)
    coarse = coarsen(g)
    coarse_base = sparsify_problem1(coarse.graph)
    retained = set(base.edges)
    for ce in coarse_base.edges:
        retained.add(coarse.edge_origins[ce])
    edges = tuple(sorted(retained))
    sparse = DiGraph(g.n, edges)
    recomputed = two_vccs_split(sparse)
    recoarse = coarsen(sparse)
    return SparsifyResult(
        problem=3,
        edges=edges,
        components=base.components,
        per_component_edges=base.per_component_edges,
        recomputed_components=tuple(recomputed),
        coarse_components=tuple(two_vccs_split(coarse.graph)),
        recomputed_coarse_components=tuple(two_vccs_split(recoarse.graph)),
    )
