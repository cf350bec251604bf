from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from safecolor import (
    ATTACKERS_HOLD_ALL_COLORS,
    NO_RAINBOW_COMPONENT,
    Coloring,
    Graph,
    GraphFormatError,
    complete_graph,
    component_color_sets,
    construct_safe_3_coloring,
    gen_double_windmill,
    gen_random_min_deg3,
    parse_coloring,
    path_graph,
    petersen_graph,
    remove_vertices,
    to_coloring_text,
    verify_safe,
)

from conftest import colorings, graphs
from oracles import naive_verify, to_nx


def test_petersen_constructed_coloring_is_safe():
    p = petersen_graph()
    c = construct_safe_3_coloring(p)
    assert verify_safe(p, c, 2).safe
    assert naive_verify(to_nx(p), c.assignment, 3, 2)[0]


def test_two_colors_never_safe():
    g = gen_random_min_deg3(9, 0.4, 3)
    c = Coloring(3, (1, 2) * 4 + (1,))
    res = verify_safe(g, c, 2)
    assert not res.safe
    assert res.violated_condition == NO_RAINBOW_COMPONENT
    assert res.witness == (0, 1)


@pytest.mark.parametrize("adjacent", [True, False])
def test_windmill_centers_are_first_witness(adjacent):
    g = gen_double_windmill(4, adjacent)
    for assignment in [(1, 2, 3) * 3 + (1,), (3,) * 10, (1, 1, 1, 2, 3, 1, 2, 3, 2, 3)]:
        res = verify_safe(g, Coloring(3, assignment), 2)
        assert not res.safe and res.witness == (0, 1)


def test_k4_always_unsafe():
    from itertools import product

    k4 = complete_graph(4)
    assert not any(verify_safe(k4, Coloring(3, c), 2).safe for c in product((1, 2, 3), repeat=4))


def test_condition_one_reported():
    # three attackers can hold all three colors
    g = complete_graph(6)
    res = verify_safe(g, Coloring(3, (1, 2, 3, 1, 2, 3)), 3)
    assert res.witness == (0, 1, 2) and res.violated_condition == ATTACKERS_HOLD_ALL_COLORS


def test_all_removed_is_unsafe():
    g = path_graph(3)
    res = verify_safe(g, Coloring(1, (1, 1, 1)), 3)
    # the attackers hold the single color, condition 1 fires first
    assert res.violated_condition == ATTACKERS_HOLD_ALL_COLORS
    res = verify_safe(g, Coloring(3, (1, 1, 2)), 3)
    assert res.violated_condition == NO_RAINBOW_COMPONENT


def test_zero_attackers():
    tri = complete_graph(3)
    assert verify_safe(tri, Coloring(3, (1, 2, 3)), 0).safe
    assert not verify_safe(tri, Coloring(3, (1, 2, 2)), 0).safe


def test_errors():
    with pytest.raises(ValueError, match="entries"):
        verify_safe(path_graph(3), Coloring(3, (1, 2)), 1)
    with pytest.raises(ValueError, match="exceeds"):
        verify_safe(path_graph(3), Coloring(3, (1, 2, 3)), 4)
    with pytest.raises(ValueError):
        Coloring(3, (1, 4))


class TestComponentColorSets:
    def test_triangle(self):
        assert component_color_sets(complete_graph(3), Coloring(3, (1, 2, 3))) == [{1, 2, 3}]

    def test_two_edges(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert component_color_sets(g, Coloring(3, (1, 1, 2, 3))) == [{1}, {2, 3}]

    def test_windmill_blades(self):
        g, _ = remove_vertices(gen_double_windmill(3), {0, 1})
        sets = component_color_sets(g, Coloring(3, (1, 2, 2, 3, 1, 3)))
        assert sets == [{1, 2}, {2, 3}, {1, 3}]

    def test_mismatch(self):
        with pytest.raises(ValueError):
            component_color_sets(complete_graph(3), Coloring(3, (1,)))


@st.composite
def graph_and_coloring(draw, max_n=10, k=3):
    g = draw(graphs(min_n=1, max_n=max_n))
    return g, Coloring(k, draw(colorings(g.n, k)))


@given(graph_and_coloring(), st.integers(0, 3))
def test_agrees_with_naive(gc, a):
    g, c = gc
    a = min(a, g.n)
    res = verify_safe(g, c, a)
    assert (res.safe, res.witness, res.violated_condition) == naive_verify(to_nx(g), c.assignment, 3, a)


@given(graph_and_coloring(max_n=9), st.permutations([1, 2, 3]))
def test_color_permutation_invariance(gc, perm):
    g, c = gc
    a = min(2, g.n)
    assert verify_safe(g, c, a).safe == verify_safe(g, c.permute_colors(perm), a).safe


@given(graph_and_coloring(max_n=9), st.data())
def test_vertex_relabel_invariance(gc, data):
    g, c = gc
    perm = data.draw(st.permutations(range(g.n)))
    a = min(2, g.n)
    assert verify_safe(g, c, a).safe == verify_safe(g.relabel(perm), c.relabel(perm), a).safe


@given(graph_and_coloring(max_n=10))
def test_monotone_in_attackers(gc):
    g, c = gc
    flags = [verify_safe(g, c, a).safe for a in range(min(3, g.n) + 1)]
    for a in range(1, len(flags)):
        assert not flags[a] or flags[a - 1]


@given(graph_and_coloring(max_n=10), st.integers(0, 2))
def test_condition_one_vacuous_below_k(gc, a):
    g, c = gc
    res = verify_safe(g, c, min(a, g.n))
    assert res.violated_condition != ATTACKERS_HOLD_ALL_COLORS


def test_constructed_colorings_monotone_on_random_graphs():
    for seed in range(20):
        g = gen_random_min_deg3(12, 0.25, seed)
        c = construct_safe_3_coloring(g)
        assert verify_safe(g, c, 2).safe and verify_safe(g, c, 1).safe and verify_safe(g, c, 0).safe


class TestColoringFile:
    def test_round_trip(self):
        c = Coloring(3, (1, 3, 2, 2))
        assert parse_coloring(to_coloring_text(c)) == c

    def test_comments_and_order(self):
        c = parse_coloring("# n k\n3 2\n2 1\n0 2\n# x\n1 1\n")
        assert c == Coloring(2, (2, 1, 1))

    @pytest.mark.parametrize("text", [
        "", "2 3\n0 1\n", "2 3\n0 1\n0 2\n1 1\n", "2 3\n0 4\n1 1\n", "2 3\n5 1\n", "2 3\n0 a\n", "2 0\n",
    ])
    def test_rejects(self, text):
        with pytest.raises(GraphFormatError):
            parse_coloring(text)

    def test_all_permutations_helper(self):
        c = Coloring(3, (1, 2, 3))
        seen = {c.permute_colors(p).assignment for p in permutations([1, 2, 3])}
        assert len(seen) == 6
