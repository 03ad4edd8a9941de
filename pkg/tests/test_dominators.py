import random

import pytest

from vconn import (
    dominator_tree,
    from_edge_list,
    nontrivial_dominators,
    reverse,
    root_children,
    tree_children,
)
from vconn.errors import NotAFlowgraph, VertexOutOfRange
from vconn.testkit import brute_dominators

from conftest import mixed_corpus


def implied_dom_sets(tree):
    """dom(u) from the tree: u plus its chain of immediate dominators."""
    out = {}
    for u in range(tree.n):
        chain = {u}
        w = u
        while w != tree.root:
            w = tree.idom[w]
            chain.add(w)
        out[u] = frozenset(chain)
    return out


def two_disjoint_paths(g, s, t):
    """Definitional check: (s,t) edge, or no single vertex besides s,t
    meets every s->t path."""
    if t in g.out_adj[s]:
        return True

    def reachable(banned):
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.out_adj[u]:
                if w != banned and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return t in seen

    if not reachable(None):
        return False
    return all(reachable(x) for x in range(g.n) if x not in (s, t))


def test_fig1_tree(fig1):
    t = dominator_tree(fig1, 0)
    assert set(t.children[0]) == {3, 4, 5, 6, 7}
    assert t.idom[1] == 4
    assert t.idom[2] == 1


def test_c3_chain(c3):
    t = dominator_tree(c3, 0)
    assert t.idom == {1: 0, 2: 1}


def test_tri_star(tri):
    t = dominator_tree(tri, 0)
    assert set(t.children[0]) == {1, 2}
    assert nontrivial_dominators(t) == set()


def test_nontrivial_dominators_fig1(fig1):
    assert nontrivial_dominators(dominator_tree(fig1, 0)) == {1, 4}
    assert nontrivial_dominators(dominator_tree(reverse(fig1), 0)) == {2, 3}


def test_root_children(fig1, c3):
    assert root_children(dominator_tree(fig1, 0)) == {3, 4, 5, 6, 7}
    assert root_children(dominator_tree(reverse(fig1), 0)) == {3, 4, 5, 6, 7}
    assert root_children(dominator_tree(c3, 0)) == {1}


def test_tree_children(fig1, tri):
    t = dominator_tree(fig1, 0)
    assert tree_children(t, 4) == {1}
    assert tree_children(t, 2) == set()
    assert tree_children(dominator_tree(tri, 0), 0) == {1, 2}
    with pytest.raises(VertexOutOfRange):
        tree_children(t, 8)


def test_not_a_flowgraph():
    g = from_edge_list(3, [(0, 1)])
    with pytest.raises(NotAFlowgraph):
        dominator_tree(g, 0)
    with pytest.raises(VertexOutOfRange):
        dominator_tree(g, 3)


def test_children_inverse_of_idom(fig1):
    t = dominator_tree(fig1, 0)
    for w, children in enumerate(t.children):
        for c in children:
            assert t.idom[c] == w


def test_matches_brute_dominators():
    rng = random.Random(4242)
    checked = 0
    for g in mixed_corpus(300, base_seed=5000):
        if g.n == 0:
            continue
        root = rng.randrange(g.n)
        try:
            expected = brute_dominators(g, root)
        except NotAFlowgraph:
            with pytest.raises(NotAFlowgraph):
                dominator_tree(g, root)
            continue
        tree = dominator_tree(g, root)
        assert implied_dom_sets(tree) == expected
        checked += 1
    assert checked > 50


def test_dom_relation_is_partial_order():
    for g in mixed_corpus(60, base_seed=8100):
        if g.n == 0:
            continue
        try:
            dom = brute_dominators(g, 0)
        except NotAFlowgraph:
            continue
        for u in range(g.n):
            assert u in dom[u]  # reflexive
            for w in dom[u]:
                assert dom[w] <= dom[u]  # transitive along chains
                if u in dom[w] and w in dom[u]:
                    assert u == w  # antisymmetric


def test_root_children_are_edge_or_two_disjoint_paths():
    rng = random.Random(99)
    for g in mixed_corpus(120, base_seed=9000):
        if g.n < 2:
            continue
        root = rng.randrange(g.n)
        try:
            tree = dominator_tree(g, root)
        except NotAFlowgraph:
            continue
        kids = root_children(tree)
        for w in range(g.n):
            if w == root:
                continue
            assert (w in kids) == two_disjoint_paths(g, root, w)
