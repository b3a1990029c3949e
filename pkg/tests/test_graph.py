import pytest

from domkernel.errors import FormatError, InvalidVertexError
from domkernel.graph import Graph, format_edge_list, parse_edge_list


def test_basic_construction():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.live_count == 4
    assert g.edge_count == 3
    assert g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.neighbors(1) == frozenset({0, 2})
    assert g.closed_neighborhood(1) == frozenset({0, 1, 2})
    assert g.degree(0) == 1
    assert g.minimum_degree() == 1


def test_edge_validation():
    with pytest.raises(InvalidVertexError):
        Graph(3, [(0, 3)])
    with pytest.raises(InvalidVertexError):
        Graph(3, [(-1, 0)])
    # self-loops are rejected as malformed data, not as a bad vertex id
    with pytest.raises(FormatError):
        Graph(3, [(1, 1)])


def test_vertices_and_edges_sorted():
    g = Graph(5, [(4, 0), (3, 1)])
    assert list(g.vertices()) == [0, 1, 2, 3, 4]
    assert g.edges() == [(0, 4), (1, 3)]


def test_delete_vertices_tombstones():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    h = g.delete_vertices({1, 3})
    assert h.live_count == 3
    assert sorted(h.vertices()) == [0, 2, 4]
    assert h.deleted == frozenset({1, 3})
    assert h.edge_count == 0
    assert not h.has_vertex(1)
    # original untouched
    assert g.live_count == 5
    # deleting nothing returns the same object
    assert g.delete_vertices(set()) is g
    with pytest.raises(InvalidVertexError):
        h.neighbors(1)


def test_compact_relabels_densely():
    g = Graph(6, [(0, 2), (2, 4), (4, 5)]).delete_vertices({1, 3})
    c, mapping = g.compact()
    assert c.live_count == 4
    assert mapping == {0: 0, 2: 1, 4: 2, 5: 3}
    assert c.edges() == [(0, 1), (1, 2), (2, 3)]


def test_distance_and_components():
    g = Graph(6, [(0, 1), (1, 2), (3, 4)])
    assert g.distance(0, 2) == 2
    assert g.distance(0, 0) == 0
    assert g.distance(0, 3) is None
    comps = g.connected_components()
    assert sorted(sorted(c) for c in comps) == [[0, 1, 2], [3, 4], [5]]


def test_equality():
    a = Graph(3, [(0, 1)])
    b = Graph(3, [(0, 1)])
    c = Graph(3, [(0, 2)])
    assert a == b
    assert a != c
    assert a != Graph(4, [(0, 1)])


def test_round_trip_bytes():
    g = Graph(4, [(0, 1), (0, 3), (2, 3)])
    text = format_edge_list(g)
    assert text.startswith("p 4 3\n")
    again = parse_edge_list(text)
    assert again == g
    assert format_edge_list(again) == text


def test_parse_accepts_comments_and_validates_counts():
    text = "c a remark\np 3 2\ne 0 1\nc another\ne 1 2\n"
    g = parse_edge_list(text)
    assert g.edge_count == 2
    with pytest.raises(FormatError):
        parse_edge_list("p 3 2\ne 0 1\n")  # fewer edges than declared
    with pytest.raises(FormatError):
        parse_edge_list("p 3 1\ne 0 1\ne 1 2\n")
    with pytest.raises(FormatError):
        parse_edge_list("p 2 2\ne 0 1\ne 1 0\n")  # duplicate edge
    with pytest.raises(FormatError):
        parse_edge_list("e 0 1\n")  # missing header
    with pytest.raises(FormatError):
        parse_edge_list("p 2 1\ne 0 2\n")  # vertex out of range


def test_format_compacts_tombstones():
    g = Graph(5, [(0, 2), (2, 4)]).delete_vertices({1, 3})
    text = format_edge_list(g)
    assert text.splitlines()[0] == "p 3 2"
    back = parse_edge_list(text)
    assert back.live_count == 3
    assert back.edges() == [(0, 1), (1, 2)]
