import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclecount.errors import ParameterError, ParseError
from cyclecount.graph import (
    LabeledGraph,
    bridge,
    broom,
    build_composite,
    coalesce,
    complement,
    delete_vertices,
    disjoint_union,
    family,
    parse_family,
    parse_graph,
    serialize_graph,
)


def as_nx(g: LabeledGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges)
    return h


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    r = draw(st.integers(0, n))
    return LabeledGraph.from_edges(n, edges, r)


def test_path_labeling():
    g = family("path:4")
    assert g.n == 4 and g.sorted_edges() == [(1, 2), (2, 3), (3, 4)]


def test_wheel_has_hub_and_eight_edges():
    g = family("wheel:4")
    assert g.n == 5 and len(g.edges) == 8
    assert g.neighbors(1) == [2, 3, 4, 5]


def test_star_center_first_and_last():
    assert family("star:4").sorted_edges() == [(1, 2), (1, 3), (1, 4)]
    assert family("star:4@last").sorted_edges() == [(1, 4), (2, 4), (3, 4)]
    assert family("star:4", hub_last=True) == family("star:4@last")


def test_wheel_and_fan_hub_last():
    w = family("wheel:4", hub_last=True)
    assert w.neighbors(5) == [1, 2, 3, 4]
    f = family("fan:3", hub_last=True)
    assert f.sorted_edges() == [(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]


def test_double_star_centres():
    g = family("double_star:3,2")
    assert g.has_edge(1, 2) and g.neighbors(1) == [2, 3, 4] and g.neighbors(2) == [1, 5]
    h = family("double_star:3,2@last")
    assert h.has_edge(4, 5) and h.neighbors(4) == [1, 2, 5] and h.neighbors(5) == [3, 4]


def test_composite_families():
    t = family("tadpole:3,2")
    assert t.sorted_edges() == [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]
    b = family("barbell:3")
    assert b.n == 6 and len(b.edges) == 7 and b.has_edge(3, 4)
    lol = family("lollipop:4,1")
    assert lol.n == 5 and len(lol.edges) == 7 and lol.neighbors(5) == [4]


@pytest.mark.parametrize("n", range(1, 10))
def test_edge_counts(n):
    assert len(family(f"path:{n}").edges) == n - 1
    assert len(family(f"complete:{n}").edges) == n * (n - 1) // 2
    if n >= 3:
        assert len(family(f"cycle:{n}").edges) == n


@pytest.mark.parametrize("bad", ["cycle:2", "wheel:2", "nosuch:3", "path:x", "tadpole:3", "complete:-1"])
def test_invalid_family(bad):
    with pytest.raises(ParameterError):
        family(bad)


def test_family_r_out_of_range():
    with pytest.raises(ParameterError):
        family("path:3", r=4)


def test_parse_family_spec():
    spec = parse_family("double_star:2,3@last", r=1)
    assert spec.family == "double_star" and spec.sizes == (2, 3) and spec.hub_last and spec.r == 1
    assert str(spec) == "double_star:2,3@last"


def test_bridge_k2_k1_is_p3():
    g = bridge(family("complete:2"), family("complete:1"), 1, 1)
    assert nx.is_isomorphic(as_nx(g), nx.path_graph(3))


def test_coalesce_two_edges_is_p3():
    g = coalesce(family("path:2"), family("path:2"), 2, 1)
    assert g.sorted_edges() == [(1, 2), (2, 3)]


def test_broom_on_triangle():
    g = broom(family("cycle:3"), 1, 3)
    assert g.n == 6 and len(g.edges) == 6 and g.neighbors(1) == [2, 3, 4, 5, 6]


def test_build_composite_dispatch():
    g1, g2 = family("path:3"), family("cycle:3")
    assert build_composite("disjoint_union", g1, g2) == disjoint_union(g1, g2)
    assert build_composite("bridge", g1, g2, u=3, v=1) == bridge(g1, g2, 3, 1)
    assert build_composite("pendant", g1, w=2).n == 4
    with pytest.raises(ParameterError):
        build_composite("bridge", g1, g2, u=9, v=1)
    with pytest.raises(ParameterError):
        build_composite("coalesce", g1, u=1, v=1)
    with pytest.raises(ParameterError):
        build_composite("broom", g1, w=1)


def test_delete_vertices_examples():
    assert delete_vertices(family("cycle:3"), [3]) == family("path:2")
    assert delete_vertices(family("complete:4"), [1]) == family("complete:3")
    g = delete_vertices(family("path:4"), [2])
    assert g.n == 3 and g.sorted_edges() == [(2, 3)]
    with pytest.raises(ParameterError):
        delete_vertices(family("path:4"), [5])


def test_delete_keeps_restricted_count():
    g = family("path:5", r=3)
    assert delete_vertices(g, [2]).r == 2
    assert delete_vertices(g, [5]).r == 3


def test_complement_examples():
    assert complement(family("path:3")).sorted_edges() == [(1, 3)]
    assert complement(family("complete:4")) == family("empty:4")
    assert nx.is_isomorphic(as_nx(complement(family("cycle:5"))), nx.cycle_graph(5))


def test_parse_examples():
    g = parse_graph(b'{"n":3,"edges":[[1,2],[2,3],[1,3]],"r":1}')
    assert g == family("cycle:3", r=1)
    assert parse_graph(b'{"n":0,"edges":[],"r":0}').n == 0


@pytest.mark.parametrize("text, where", [
    (b'{"n":2,"edges":[[1,2],[2,1]]}', "$.edges[1]"),
    (b'{"n":2,"edges":[[1,3]]}', "$.edges[0]"),
    (b'{"n":2,"edges":[[1,1]]}', "$.edges[0]"),
    (b'{"n":-1,"edges":[]}', "$.n"),
    (b'{"n":2,"edges":[],"r":3}', "$.r"),
    (b'{"n":2,"edges":[],"extra":1}', "$"),
    (b'[1,2]', "$"),
    (b'{"n":2,', "line 1"),
])
def test_parse_errors_carry_location(text, where):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert where in str(info.value.location)


def test_canonical_serialization_sorts_edges():
    g = LabeledGraph.from_edges(3, [(3, 2), (1, 3)], 1)
    assert serialize_graph(g) == b'{"n":3,"edges":[[1,3],[2,3]],"r":1}'


def test_graph_invariants():
    with pytest.raises(ParameterError):
        LabeledGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ParameterError):
        LabeledGraph.from_edges(2, [(1, 3)])
    with pytest.raises(ParameterError):
        LabeledGraph.from_edges(2, [], r=3)
    assert LabeledGraph.from_edges(0, []).full_mask == 0


@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_serialization_round_trip(g):
    data = serialize_graph(g)
    assert parse_graph(data) == g
    assert serialize_graph(parse_graph(data)) == data


@settings(max_examples=50)
@given(graphs(5), graphs(5))
def test_union_and_coalesce_sizes(g1, g2):
    u = disjoint_union(g1, g2)
    assert u.n == g1.n + g2.n and len(u.edges) == len(g1.edges) + len(g2.edges)
    if g1.n and g2.n:
        c = coalesce(g1, g2, g1.n, 1)
        assert c.n == g1.n + g2.n - 1
