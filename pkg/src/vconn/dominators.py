"""Dominator trees of flowgraphs.

The tree is computed with the simple Lengauer-Tarjan variant:
semidominators plus path-compressed EVAL/LINK, which is near-linear and
much easier to validate than the true linear-time algorithms.  Everything
is iterative; recursion depth would otherwise reach n on path-like inputs.

Derived sets used by the connectivity algorithms:

* non-trivial dominators: non-root vertices that dominate something other
  than themselves (exactly the internal non-root tree vertices),
* root children: vertices reachable by an edge from the root or by two
  vertex-disjoint paths,
* children of an arbitrary tree vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAFlowgraph, VertexOutOfRange
from .graph import DiGraph


@dataclass(frozen=True)
class DominatorTree:
    """Immediate-dominator tree rooted at ``root``.

    ``idom`` maps every non-root vertex to its immediate dominator;
    ``children[v]`` is the sorted tuple of v's tree children.
    """

    root: int
    idom: dict[int, int]
    children: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.children)


def dominator_tree(g: DiGraph, v: int) -> DominatorTree:
    """Dominator tree of the flowgraph (g, v).

    Raises NotAFlowgraph if some vertex of g is not reachable from v; the
    algorithms in this package only call it on strongly connected graphs,
    so unreachability signals a caller bug.
    """
    n = g.n
    if not 0 <= v < n:
        raise VertexOutOfRange(f"start vertex {v} outside [0, {n})")
    out_adj = g.out_adj
    in_adj = g.in_adj

    # DFS preorder (iterative, mimics the recursive tree exactly).
    dfnum = [-1] * n
    pre: list[int] = []
    parent: list[int] = []  # dfs-number space
    dfnum[v] = 0
    pre.append(v)
    parent.append(-1)
    stack: list[list[int]] = [[v, 0]]
    while stack:
        frame = stack[-1]
        x, pos = frame
        adj = out_adj[x]
        pushed = False
        while pos < len(adj):
            w = adj[pos]
            pos += 1
            if dfnum[w] == -1:
                frame[1] = pos
                dfnum[w] = len(pre)
                parent.append(dfnum[x])
                pre.append(w)
                stack.append([w, 0])
                pushed = True
                break
        if not pushed:
            stack.pop()
    if len(pre) != n:
        raise NotAFlowgraph(f"{n - len(pre)} vertices unreachable from {v}")

    # Lengauer-Tarjan in dfs-number space.
    semi = list(range(n))
    ancestor = [-1] * n
    label = list(range(n))
    idom_num = [0] * n
    samedom = [-1] * n
    buckets: list[list[int]] = [[] for _ in range(n)]

    def evaluate(x: int) -> int:
        if ancestor[x] == -1:
            return label[x]
        path: list[int] = []
        y = x
        while ancestor[ancestor[y]] != -1:
            path.append(y)
            y = ancestor[y]
        while path:
            z = path.pop()
            a = ancestor[z]
            if semi[label[a]] < semi[label[z]]:
                label[z] = label[a]
            ancestor[z] = ancestor[a]
        return label[x]

    for w in range(n - 1, 0, -1):
        p = parent[w]
        s = w
        for u_vertex in in_adj[pre[w]]:
            u = dfnum[u_vertex]
            cand = u if u <= w else semi[evaluate(u)]
            if cand < s:
                s = cand
        semi[w] = s
        buckets[s].append(w)
        ancestor[w] = p
        if buckets[p]:
            for x in buckets[p]:
                y = evaluate(x)
                if semi[y] < semi[x]:
                    samedom[x] = y
                else:
                    idom_num[x] = p
            buckets[p].clear()

    for w in range(1, n):
        if samedom[w] != -1:
            idom_num[w] = idom_num[samedom[w]]

    idom: dict[int, int] = {}
    children: list[list[int]] = [[] for _ in range(n)]
    for w in range(1, n):
        iv = pre[idom_num[w]]
        wv = pre[w]
        idom[wv] = iv
        children[iv].append(wv)
    return DominatorTree(v, idom, tuple(tuple(sorted(c)) for c in children))


def nontrivial_dominators(t: DominatorTree) -> set[int]:
    """Vertices that dominate some vertex besides themselves and the root.

    These are exactly the non-root vertices with at least one tree child.
    """
    return {w for w in range(t.n) if w != t.root and t.children[w]}


def root_children(t: DominatorTree) -> set[int]:
    """Direct successors of the root in the dominator tree."""
    return set(t.children[t.root])


def tree_children(t: DominatorTree, w: int) -> set[int]:
    """Direct successors of vertex w in the dominator tree."""
    if not 0 <= w < t.n:
        raise VertexOutOfRange(f"vertex {w} outside [0, {t.n})")
    return set(t.children[w])
