import pytest
from hypothesis import given, settings, strategies as st

from modk import graph as gr
from modk.colouring import (ColouringMismatch, EdgeColouring, ExactStatus, Violation,
                            colouring_from_dict, colouring_to_dict, exact_chi,
                            is_ell_k_graph, verify)

from conftest import brute_chi, class_degrees, graphs, naive_valid


def test_single_edge_valid():
    g = gr.path(2)
    assert verify(g, EdgeColouring(1, {(0, 1): 1}), 5) == []


def test_monochromatic_star_has_one_violation():
    g = gr.star(3)
    c = EdgeColouring(1, {e: 1 for e in g.edges})
    assert verify(g, c, 3) == [Violation(colour=1, vertex=0, degree_in_class=3)]


def test_rainbow_star_valid():
    g = gr.star(3)
    c = EdgeColouring(3, {e: i + 1 for i, e in enumerate(g.edges)})
    assert verify(g, c, 3) == []


def test_verify_rejects_mismatched_edges():
    g = gr.path(3)
    with pytest.raises(ColouringMismatch):
        verify(g, EdgeColouring(1, {(0, 1): 1}), 2)
    with pytest.raises(ColouringMismatch):
        verify(g, EdgeColouring(1, {(0, 1): 1, (1, 2): 1, (0, 2): 1}), 2)


def test_colouring_rejects_bad_palette():
    with pytest.raises(ValueError):
        EdgeColouring(2, {(0, 1): 3})
    with pytest.raises(ValueError):
        EdgeColouring(2, {(1, 0): 1})


@given(graphs(max_n=6), st.integers(2, 4), st.data())
def test_verify_agrees_with_naive_recount(g, k, data):
    palette = data.draw(st.integers(1, 4))
    colours = data.draw(st.lists(st.integers(1, palette), min_size=g.edge_count, max_size=g.edge_count))
    assignment = dict(zip(g.edges, colours))
    bad = verify(g, EdgeColouring(palette, assignment), k)
    assert (bad == []) == naive_valid(g, assignment, k)
    expected = sorted((c, v, d) for (c, v), d in class_degrees(assignment).items() if (d - 1) % k)
    assert [(b.colour, b.vertex, b.degree_in_class) for b in bad] == expected


def test_colours_used_counts_distinct():
    c = EdgeColouring(5, {(0, 1): 2, (1, 2): 2, (2, 3): 5})
    assert c.colours_used == 2


@pytest.mark.parametrize("g, edges, ell, k, expected", [
    (gr.complete(3), gr.complete(3).edges, 0, 2, True),
    (gr.complete(4), gr.complete(4).edges, 0, 3, True),
    (gr.path(2), [(0, 1)], 1, 7, True),
    (gr.path(3), gr.path(3).edges, 1, 2, False),
    (gr.path(3), gr.path(3).edges, 0, 2, False),
    (gr.star(4), gr.star(4).edges, 1, 3, True),
])
def test_is_ell_k_graph(g, edges, ell, k, expected):
    assert is_ell_k_graph(g, edges, ell, k) is expected


def test_is_ell_k_graph_ignores_untouched_vertices():
    g = gr.empty(5)
    assert is_ell_k_graph(g, [], 0, 3)
    h = gr.Graph.from_edges(5, [(0, 1)])
    assert is_ell_k_graph(h, [(0, 1)], 1, 3)


@pytest.mark.parametrize("k", [2, 3])
def test_exact_star(k):
    res = exact_chi(gr.star(k), k, 10, 10**6)
    assert (res.status, res.value) == (ExactStatus.EXACT, k)


def test_exact_tripartite():
    res = exact_chi(gr.complete_tripartite(1, 2, 2), 2, 10, 10**6)
    assert (res.status, res.value) == (ExactStatus.EXACT, 4)


def test_exact_triangle_matches_enumeration():
    # 3^3 assignments enumerated: two colours never work, three do
    assert brute_chi(gr.complete(3), 2) == 3
    assert exact_chi(gr.complete(3), 2, 10, 10**6).value == 3


def test_exact_edgeless_and_k1():
    assert exact_chi(gr.empty(4), 3, 5, 10).value == 0
    assert exact_chi(gr.complete(5), 1, 5, 10**4).value == 1


def test_exact_palette_cap_and_budget():
    res = exact_chi(gr.star(4), 4, 3, 10**6)
    assert (res.status, res.value) == (ExactStatus.LOWER_BOUND_ONLY, 4)
    res = exact_chi(gr.complete(6), 3, 10, 1)
    assert res.status is ExactStatus.BUDGET_EXHAUSTED
    with pytest.raises(ValueError):
        exact_chi(gr.star(2), 2, 0, 10)


@settings(max_examples=40)
@given(graphs(max_n=5), st.integers(2, 3))
def test_exact_agrees_with_enumeration(g, k):
    if g.edge_count > 7:
        g = g.edge_subgraph(g.edges[:7])
    res = exact_chi(g, k, 8, 10**7)
    assert res.status is ExactStatus.EXACT
    assert res.value == brute_chi(g, k)
    assert verify(g, res.witness, k) == []
    assert res.witness.colours_used == res.value


@settings(max_examples=25)
@given(graphs(min_n=1, max_n=5), st.integers(2, 3))
def test_isolated_vertex_does_not_change_exact(g, k):
    bigger = gr.Graph.from_edges(g.vertex_count + 1, g.edges)
    assert exact_chi(g, k, 8, 10**7).value == exact_chi(bigger, k, 8, 10**7).value


def test_json_roundtrip():
    g = gr.parse_graph("a b\nb c\nc a\n")
    c = EdgeColouring(3, {(0, 1): 1, (1, 2): 2, (0, 2): 3})
    data = colouring_to_dict(g, c, 2, seed=4)
    assert data["edges"][0] == {"u": "a", "v": "b", "colour": 1}
    assert data["seed"] == 4 and "certificate" not in data
    assert colouring_from_dict(g, data) == c
    with pytest.raises(ValueError):
        colouring_from_dict(g, {"palette_size": 1, "edges": [{"u": "a", "v": "zz", "colour": 1}]})
