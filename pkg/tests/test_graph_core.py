import networkx as nx
import pytest
from hypothesis import given, strategies as st

from ecclap.graph_core import (
    Graph,
    GraphError,
    GraphFamily,
    ParseError,
    connected_masks,
    enumerate_connected,
    generate_family,
    pair_list,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from ecclap.metrics import bfs_distances
from oracles import count_labeled_connected


# ---------------------------------------------------------------------------
# Graph type
# ---------------------------------------------------------------------------

def test_graph_normalizes_edge_orientation():
    assert Graph.from_edges(3, [(1, 0), (2, 1)]) == Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.mark.parametrize("n, edges", [(0, []), (2, [(0, 0)]), (2, [(0, 2)]), (3, [(-1, 1)])])
def test_graph_rejects_invalid(n, edges):
    with pytest.raises(GraphError):
        Graph.from_edges(n, edges)


def test_degree_sum_is_twice_edge_count():
    g = generate_family(GraphFamily("complete_bipartite", (3, 4)))
    assert sum(g.degrees()) == 2 * g.m


def test_graph_is_hashable_and_immutable(p3):
    assert len({p3, Graph.from_edges(3, [(1, 2), (0, 1)])}) == 1
    with pytest.raises(AttributeError):
        p3.n = 4


def test_relabel():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert g.relabel([1, 0, 2]).edges == {(0, 1), (0, 2)}
    with pytest.raises(GraphError):
        g.relabel([0, 0, 1])


def test_mask_roundtrip():
    for mask in range(1 << 6):
        assert Graph.from_mask(4, mask).to_mask() == mask


# ---------------------------------------------------------------------------
# Edge lists
# ---------------------------------------------------------------------------

def test_parse_edge_list_path(p3):
    assert parse_edge_list("3 2\n0 1\n1 2") == p3


def test_parse_edge_list_single_vertex():
    g = parse_edge_list("1 0")
    assert g.n == 1 and g.m == 0


def test_parse_edge_list_comments_and_blanks():
    text = "# header comment\n3 2   # n m\n\n0 1\n2 1 # reversed is fine\n"
    assert parse_edge_list(text).edges == {(0, 1), (1, 2)}


@pytest.mark.parametrize(
    "text, match",
    [
        ("3 2\n0 1\n1 0", "duplicate"),
        ("3 2\n0 1\n1 3", "out of range"),
        ("3 1\n1 1", "self-loop"),
        ("3 2\n0 1", "declares 2"),
        ("3 2\n0 1\n1 x", "non-integer"),
        ("3 2\n0 1 2\n1 2", "expected 2"),
        ("# only a comment\n", "header"),
    ],
)
def test_parse_edge_list_errors(text, match):
    with pytest.raises(ParseError, match=match):
        parse_edge_list(text)


def test_edge_list_roundtrip():
    g = generate_family(GraphFamily("cycle", (6,)))
    assert parse_edge_list(write_edge_list(g)) == g


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def test_pair_order_is_column_major():
    assert pair_list(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


@pytest.mark.parametrize(
    "text, n, edges",
    [
        # frozen from networkx.from_graph6_bytes
        ("@", 1, set()),
        ("A_", 2, {(0, 1)}),
        ("B_", 3, {(0, 1)}),
        ("BW", 3, {(0, 2), (1, 2)}),
        ("Bw", 3, {(0, 1), (0, 2), (1, 2)}),
    ],
)
def test_parse_graph6_known(text, n, edges):
    g = parse_graph6(text)
    assert (g.n, set(g.edges)) == (n, edges)


@pytest.mark.parametrize("g, expected", [
    (Graph(1), "@"),
    (Graph.from_edges(2, [(0, 1)]), "A_"),
    (Graph.from_edges(3, [(0, 2), (1, 2)]), "BW"),
])
def test_write_graph6_known(g, expected):
    assert write_graph6(g) == expected


def test_graph6_agrees_with_networkx(corpus):
    for g in corpus[5][::7]:
        h = nx.from_graph6_bytes(write_graph6(g).encode())
        assert set(map(tuple, map(sorted, h.edges()))) == set(g.edges)
        assert parse_graph6(nx.to_graph6_bytes(h, header=False).decode()) == g


def test_graph6_header_and_newline():
    assert parse_graph6(">>graph6<<A_\n") == Graph.from_edges(2, [(0, 1)])


@pytest.mark.parametrize(
    "text, match",
    [
        ("", "empty"),
        ("A", "truncated"),
        ("A_?", "trailing"),
        ("A ", "truncated"),
        ("A\x7f", "invalid"),
        ("?", "empty graph"),
        ("~?", "long-form"),
        ("A`", "padding"),
    ],
)
def test_parse_graph6_errors(text, match):
    with pytest.raises(ParseError, match=match):
        parse_graph6(text)


def test_write_graph6_rejects_large():
    with pytest.raises(GraphError):
        write_graph6(Graph(63))


@given(st.integers(1, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, (1 << (n * (n - 1) // 2)) - 1))))
def test_graph6_roundtrip_property(arg):
    n, mask = arg
    g = Graph.from_mask(n, mask)
    assert parse_graph6(write_graph6(g)) == g


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

def test_complete_family():
    g = generate_family(GraphFamily("complete", (4,)))
    assert g.m == 6
    assert g.degrees() == [3, 3, 3, 3]


def test_complete_bipartite_family():
    g = generate_family(GraphFamily("complete_bipartite", (2, 3)))
    assert (g.n, g.m) == (5, 6)
    assert not g.has_edge(0, 1) and not g.has_edge(2, 3) and g.has_edge(1, 4)


def test_cycle_family():
    g = generate_family(GraphFamily("cycle", (5,)))
    assert g.m == 5 and set(g.degrees()) == {2}


def test_path_and_star_families():
    assert generate_family(GraphFamily("path", (1,))) == Graph(1)
    star = generate_family(GraphFamily("star", (4,)))
    assert star.n == 5 and star.degrees()[0] == 4


@pytest.mark.parametrize("kind, params", [
    ("cycle", (2,)), ("complete", (0,)), ("complete_bipartite", (3,)), ("wheel", (5,)),
    ("path", (2.5,)),
])
def test_family_invalid(kind, params):
    with pytest.raises(GraphError):
        GraphFamily(kind, params)


@pytest.mark.parametrize("n", range(1, 12))
def test_complete_family_degrees(n):
    g = generate_family(GraphFamily("complete", (n,)))
    assert all(d == n - 1 for d in g.degrees())


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_count_matches_oracle(n):
    assert sum(1 for _ in enumerate_connected(n)) == count_labeled_connected(n)


def test_enumeration_small_values():
    assert [sum(1 for _ in enumerate_connected(n)) for n in (1, 3, 4)] == [1, 4, 38]


def test_enumeration_unique_and_ordered(corpus):
    masks = [g.to_mask() for g in corpus[5]]
    assert masks == sorted(set(masks))


def test_enumerated_graphs_are_connected(corpus):
    for n, graphs in corpus.items():
        for g in graphs:
            assert None not in bfs_distances(g, 0)


def test_connected_masks_ranges_partition():
    whole = list(connected_masks(5))
    parts = [m for s in range(0, 1 << 10, 100) for m in connected_masks(5, s, s + 100)]
    assert parts == whole


@pytest.mark.parametrize("n", [0, 8])
def test_enumeration_limit(n):
    with pytest.raises(GraphError):
        next(enumerate_connected(n))
