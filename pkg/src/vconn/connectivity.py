"""Strongly connected components and undirected biconnected blocks.

Both primitives are implemented iteratively (explicit stacks): recursion
depth can reach n on path-like graphs and the benchmark harness runs n in
the thousands.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import DiGraph, UndirectedGraph


@dataclass(frozen=True)
class SccPartition:
    """Partition of the vertex set into strongly connected components.

    ``components`` holds each component sorted ascending, with the list
    itself in lexicographic order; ``component_id[v]`` is the index of v's
    component in that list.
    """

    component_id: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]


def _scc_ids(n: int, out_adj: Sequence[Sequence[int]], skip: int = -1) -> tuple[list[int], int]:
    """Tarjan's algorithm on raw adjacency, iterative.

    Returns (component id per vertex, component count).  ``skip`` names a
    vertex treated as deleted; its id stays -1.
    """
    index = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    comp = [-1] * n
    scc_stack: list[int] = []
    ncomp = 0
    counter = 0
    for root in range(n):
        if root == skip or index[root] != -1:
            continue
        work: list[list[int]] = [[root, 0]]
        while work:
            frame = work[-1]
            v, pos = frame
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                scc_stack.append(v)
                on_stack[v] = 1
            adj = out_adj[v]
            advanced = False
            while pos < len(adj):
                w = adj[pos]
                pos += 1
                if w == skip:
                    continue
                if index[w] == -1:
                    frame[1] = pos
                    work.append([w, 0])
                    advanced = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                while True:
                    w = scc_stack.pop()
                    on_stack[w] = 0
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
    return comp, ncomp


def _group_components(n: int, comp: Sequence[int]) -> list[list[int]]:
    """Group vertices by component id, skipping deleted vertices (-1)."""
    buckets: dict[int, list[int]] = {}
    for v in range(n):
        c = comp[v]
        if c >= 0:
            buckets.setdefault(c, []).append(v)
    return [sorted(b) for b in buckets.values()]


def strongly_connected_components(g: DiGraph) -> SccPartition:
    """Maximal strongly connected vertex sets, canonically ordered."""
    comp, _ = _scc_ids(g.n, g.out_adj)
    groups = sorted(_group_components(g.n, comp))
    component_id = [0] * g.n
    for i, grp in enumerate(groups):
        for v in grp:
            component_id[v] = i
    return SccPartition(tuple(component_id), tuple(tuple(grp) for grp in groups))


def is_strongly_connected(g: DiGraph) -> bool:
    """True iff g has exactly one SCC (and at least one vertex)."""
    if g.n == 0:
        return False
    _, ncomp = _scc_ids(g.n, g.out_adj)
    return ncomp == 1


def undirected_biconnected_components(u: UndirectedGraph) -> list[tuple[int, ...]]:
    """Vertex sets of the biconnected blocks of an undirected graph.

    Every block of size >= 2 is reported, so bridges appear as pairs.
    Isolated vertices contribute nothing.  Output is canonical: each set
    sorted ascending, list sorted lexicographically.
    """
    n = u.n
    adj = u.adj
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[tuple[int, ...]] = []
    counter = 0
    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack: list[list[int]] = [[root, 0]]
        while stack:
            frame = stack[-1]
            v, pos = frame
            if pos < len(adj[v]):
                frame[1] = pos + 1
                w = adj[v][pos]
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append([w, 0])
                elif w != parent[v] and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= disc[p]:
                        members: set[int] = set()
                        while edge_stack:
                            e = edge_stack.pop()
                            members.add(e[0])
                            members.add(e[1])
                            if e == (p, v):
                                break
                        blocks.append(tuple(sorted(members)))
    return sorted(blocks)
