import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordal_braids.errors import (
    InvalidPeo,
    NotAnEdge,
    NotChordal,
    NotSimplicial,
    ParseError,
    SelfLoop,
    UnknownVertex,
)
from chordal_braids.generators import all_graphs, random_chordal_graph, random_graph
from chordal_braids.graph import (
    Graph,
    check_peo,
    chordless_cycle,
    find_peo,
    from_edges,
    is_chordal,
    is_chordal_by_cycles,
    is_peo,
    lex_bfs,
    maximal_simplices,
    parse_edge_list,
    peo_with_suffix,
    s_zero,
)


def test_construction(p3):
    assert p3.vertices == ("a", "b", "c")
    assert p3.edges == (("a", "b"), ("b", "c"))
    single = from_edges(["a"], [])
    assert single.vertices == ("a",) and single.edges == ()
    with pytest.raises(SelfLoop):
        from_edges("ab", [("a", "a")])
    with pytest.raises(UnknownVertex):
        from_edges("ab", [("a", "z")])


def test_edges_are_canonical():
    g = from_edges("abc", [("c", "a"), ("b", "a"), ("a", "b")])
    assert g.edges == (("a", "b"), ("a", "c"))
    assert g.edge("c", "a") == ("a", "c")
    with pytest.raises(NotAnEdge):
        g.edge("b", "c")


def test_neighbors(p3, k4):
    assert p3.neighbors("b") == {"a", "c"}
    assert p3.neighbors("a") == {"b"}
    for v in k4.vertices:
        assert k4.neighbors(v) == set(k4.vertices) - {v}


def test_is_simplicial(p3, k4):
    assert p3.is_simplicial("a")
    assert not p3.is_simplicial("b")
    assert all(k4.is_simplicial(v) for v in k4.vertices)


def test_is_chordal_examples(c4, k4):
    assert not is_chordal(c4)
    tree = from_edges(range(6), [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert is_chordal(tree)
    diamond = Graph(k4.vertices, [e for e in k4.edges if e != (1, 2)])
    assert is_chordal(diamond) and is_chordal_by_cycles(diamond)


def test_find_peo(p3, k3, c4):
    peo = find_peo(p3)
    assert sorted(peo) == ["a", "b", "c"] and is_peo(p3, peo)
    # [a, c, b] is another valid answer
    assert is_peo(p3, ["a", "c", "b"])
    assert not is_peo(p3, ["b", "a", "c"])
    import itertools

    assert all(is_peo(k3, order) for order in itertools.permutations(k3.vertices))
    with pytest.raises(NotChordal):
        find_peo(c4)


def test_check_peo(p3):
    assert check_peo(p3, ["a", "b", "c"]) == ("a", "b", "c")
    with pytest.raises(InvalidPeo):
        check_peo(p3, ["b", "a", "c"])
    with pytest.raises(InvalidPeo):
        check_peo(p3, ["a", "b"])


def test_peo_with_suffix(p3, k3, c4):
    assert peo_with_suffix(p3, {"b", "c"}) == ("a", "b", "c")
    assert peo_with_suffix(k3, {"x", "y"}) == ("z", "x", "y")
    with pytest.raises(NotChordal):
        peo_with_suffix(c4, {"a", "b"})


def test_maximal_simplices(p3, k3):
    assert maximal_simplices(p3) == [("a", "b"), ("b", "c")]
    assert maximal_simplices(k3) == [("x", "y", "z")]
    star = from_edges("rxy", [("r", "x"), ("r", "y")])
    assert maximal_simplices(star) == [("r", "x"), ("r", "y")]


def test_s_zero(p3, k4):
    assert s_zero(p3, "a") == (("a", "b"), ("a",))
    assert s_zero(k4, 2) == ((1, 2, 3, 4), (1, 2, 3, 4))
    star = from_edges("rxyz", [("r", "x"), ("r", "y"), ("r", "z")])
    assert s_zero(star, "x") == (("r", "x"), ("x",))
    with pytest.raises(NotSimplicial):
        s_zero(p3, "b")


def test_induced_and_delete(k4, p3, c4):
    k3 = k4.induced([1, 2, 3])
    assert k3.is_complete() and len(k3.vertices) == 3
    two = p3.induced({"a", "c"})
    assert two.vertices == ("a", "c") and two.edges == ()
    p = c4.delete_vertex("d")
    assert p.edges == (("a", "b"), ("b", "c")) and is_chordal(p)


def test_chordless_cycle(c4, p3):
    cyc = chordless_cycle(c4)
    assert sorted(cyc) == ["a", "b", "c", "d"]
    assert chordless_cycle(p3) is None


def test_lex_bfs_visits_everything(c4):
    assert sorted(lex_bfs(c4)) == sorted(c4.vertices)


def test_exhaustive_small_graphs_agree_with_cycle_oracle():
    for n in range(6):
        for g in all_graphs(n):
            assert is_chordal(g) == is_chordal_by_cycles(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 9))
def test_random_chordal_graphs(seed, n):
    g = random_chordal_graph(random.Random(seed), n)
    assert is_chordal(g)
    peo = find_peo(g)
    assert is_peo(g, peo)
    cliques = maximal_simplices(g)
    assert len(cliques) <= len(g.vertices)
    for c in cliques:
        assert g.is_simplex(c)
        assert not any(g.is_simplex(set(c) | {v}) for v in g.vertices if v not in c)
    for s in cliques:
        suffix = peo_with_suffix(g, s)
        assert is_peo(g, suffix) and set(suffix[len(suffix) - len(s):]) == set(s)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_random_graph_chordality_matches_oracle(seed):
    g = random_graph(random.Random(seed), 7)
    assert is_chordal(g) == is_chordal_by_cycles(g)


def test_json_round_trip(p3):
    assert Graph.from_json(p3.to_json()) == p3
    assert Graph.from_json('{"edges": [["a", "b"], ["b", "c"]]}') == p3


def test_edge_list_round_trip(p3):
    assert parse_edge_list(p3.to_edge_list()) == p3
    text = "# a path\na b\nb c  # trailing\nd\n"
    g = parse_edge_list(text)
    assert g.vertices == ("a", "b", "c", "d") and g.degree("d") == 0
    with pytest.raises(ParseError):
        parse_edge_list("a b c\n")


def test_dot_output(p3):
    dot = p3.to_dot()
    assert dot.startswith("graph G {") and '"a" -- "b";' in dot
    clique_dot = p3.clique_diagram_dot()
    assert '"{a,b}" -- "{b,c}" [label="{b}"];' in clique_dot


def test_digest_is_stable(p3):
    again = from_edges("abc", [("b", "c"), ("a", "b")])
    assert p3.digest == again.digest
    assert p3.digest != p3.delete_vertex("c").digest
