import random

import pytest

from vconn import (
    DiGraph,
    format_edge_list,
    from_edge_list,
    induced_subgraph,
    read_edge_list,
    remove_vertices,
    reverse,
    underlying_undirected,
)
from vconn.errors import EdgeListFormatError, VertexOutOfRange

from conftest import FIG1_EDGES, mixed_corpus


def test_from_edge_list_c3(c3):
    assert c3.n == 3
    assert c3.m == 3
    assert c3.edges == ((0, 1), (1, 2), (2, 0))


def test_from_edge_list_fig1(fig1):
    assert fig1.n == 8
    assert fig1.m == 18
    assert set(fig1.edges) == set(FIG1_EDGES)


def test_from_edge_list_drops_loops_and_duplicates():
    g = from_edge_list(2, [(0, 1), (0, 1), (1, 1)])
    assert g.edges == ((0, 1),)


def test_from_edge_list_rejects_out_of_range():
    with pytest.raises(VertexOutOfRange):
        from_edge_list(2, [(0, 2)])
    with pytest.raises(VertexOutOfRange):
        from_edge_list(1, [(-1, 0)])


def test_origin_labels_must_be_injective():
    with pytest.raises(VertexOutOfRange):
        DiGraph(2, [(0, 1)], origin_labels=(5, 5))
    with pytest.raises(VertexOutOfRange):
        DiGraph(2, [(0, 1)], origin_labels=(5,))


def test_adjacency_is_transpose(fig1):
    pairs_out = {(u, v) for u in range(fig1.n) for v in fig1.out_adj[u]}
    pairs_in = {(u, v) for v in range(fig1.n) for u in fig1.in_adj[v]}
    assert pairs_out == pairs_in


def test_reverse_c3(c3):
    assert reverse(c3).edges == ((0, 2), (1, 0), (2, 1))


def test_reverse_bidirected_is_identity(tri):
    assert reverse(tri) == tri


def test_reverse_is_involution(fig1):
    assert reverse(reverse(fig1)) == fig1


def test_induced_subgraph_triangle(fig1):
    sub = induced_subgraph(fig1, {0, 6, 7})
    assert sub.n == 3
    assert sub.m == 6
    assert sub.origin_labels == (0, 6, 7)


def test_induced_subgraph_four_cycle(fig1):
    sub = induced_subgraph(fig1, {0, 3, 4, 5})
    # 0<->3, 3<->5, 4<->5, 0<->4 in original ids.
    relabel = dict(enumerate(sub.origin_labels))
    edges = {(relabel[u], relabel[v]) for u, v in sub.edges}
    expected = {(0, 3), (3, 0), (3, 5), (5, 3), (4, 5), (5, 4), (0, 4), (4, 0)}
    assert edges == expected


def test_induced_subgraph_full_set_is_identity(fig1):
    sub = induced_subgraph(fig1, range(fig1.n))
    assert sub == fig1
    assert sub.origin_labels == tuple(range(8))


def test_induced_subgraph_rejects_bad_vertex(fig1):
    with pytest.raises(VertexOutOfRange):
        induced_subgraph(fig1, {0, 9})


def test_remove_vertices_complement_equivalence(fig1):
    assert remove_vertices(fig1, {0}) == induced_subgraph(fig1, {1, 2, 3, 4, 5, 6, 7})
    assert remove_vertices(fig1, {0}).n == 7


def test_remove_vertices_nothing(c3):
    assert remove_vertices(c3, set()) == c3


def test_remove_vertices_tri(tri):
    g = remove_vertices(tri, {2})
    assert g.n == 2
    assert set(g.edges) == {(0, 1), (1, 0)}


def test_underlying_undirected_counts(c3, tri, fig1):
    assert underlying_undirected(c3).m == 3
    assert underlying_undirected(tri).m == 3
    assert underlying_undirected(fig1).m == 11


def test_label_composition(fig1):
    sub = induced_subgraph(fig1, {0, 3, 4, 5})
    subsub = induced_subgraph(sub, {0, 2})  # local ids for original 0 and 4
    assert subsub.origin_labels == (0, 4)


def test_random_invariants():
    for g in mixed_corpus(40, base_seed=900):
        rng = random.Random(g.n * 1000 + g.m)
        s = {v for v in range(g.n) if rng.random() < 0.5}
        sub = induced_subgraph(g, s)
        outside = sum(1 for u, v in g.edges if u not in s or v not in s)
        assert sub.m + outside == g.m
        assert set(sub.origin_labels) == s
        r = reverse(g)
        assert (r.n, r.m) == (g.n, g.m)
        assert underlying_undirected(g).edges == underlying_undirected(r).edges


def test_edge_list_roundtrip(fig1):
    text = format_edge_list(fig1)
    assert text.splitlines()[0] == "8 18"
    assert read_edge_list(text) == fig1


def test_edge_list_comments_and_errors():
    g = read_edge_list("# a comment\n2 1\n# another\n0 1\n# trailing\n")
    assert g.edges == ((0, 1),)
    with pytest.raises(EdgeListFormatError):
        read_edge_list("")
    with pytest.raises(EdgeListFormatError):
        read_edge_list("2 2\n0 1\n")
    with pytest.raises(EdgeListFormatError):
        read_edge_list("2\n")
    with pytest.raises(EdgeListFormatError):
        read_edge_list("2 1\n0 x\n")


def test_edges_sorted_in_output():
    g = DiGraph(3, [(2, 0), (0, 2), (1, 0)])
    lines = format_edge_list(g).splitlines()
    assert lines[1:] == ["0 2", "1 0", "2 0"]
