import pytest
from hypothesis import given

from diachromatic.digraph import (
    DGRFormatError,
    Digraph,
    adjacent,
    complement,
    condensation,
    converse,
    format_dgr,
    induced,
    is_acyclic,
    is_tournament,
    parse_dgr,
    remove_arc,
    remove_vertex,
    strong_components,
    underlying_graph_edges,
)
from diachromatic.families import complete_symmetric, transitive_tournament

from strategies import digraphs, tournaments


def test_from_arcs(c3):
    assert c3.n == 3 and c3.arcs == {(0, 1), (1, 2), (2, 0)}
    assert Digraph(2, []).m == 0
    assert Digraph(3, [(0, 1), (0, 1)]).m == 1


@pytest.mark.parametrize("n, arcs", [(2, [(0, 0)]), (2, [(0, 2)]), (2, [(-1, 0)])])
def test_from_arcs_rejects(n, arcs):
    with pytest.raises(ValueError):
        Digraph(n, arcs)


def test_converse(c3):
    assert converse(c3).arcs == {(1, 0), (2, 1), (0, 2)}
    k3 = complete_symmetric(3)
    assert converse(k3) == k3
    tt3 = transitive_tournament(3)
    assert converse(tt3).arcs == {(1, 0), (2, 0), (2, 1)}


def test_complement(c3):
    # non-loop pairs of 3 vertices: 01 02 10 12 20 21; C3 holds 01 12 20
    assert complement(c3).arcs == {(0, 2), (1, 0), (2, 1)}
    assert complement(c3) == converse(c3)
    assert complement(complete_symmetric(4)).m == 0
    assert complement(Digraph(4)) == complete_symmetric(4)


def test_is_acyclic(c3):
    assert not is_acyclic(c3)
    assert is_acyclic(transitive_tournament(5))
    assert not is_acyclic(Digraph(2, [(0, 1), (1, 0)]))


def test_induced(c3):
    sub, labels = induced(c3, {0, 1})
    assert sub.arcs == {(0, 1)} and labels == [0, 1]
    same, _ = induced(c3, range(3))
    assert same == c3
    tt3, labels = induced(transitive_tournament(5), {0, 2, 4})
    assert tt3 == transitive_tournament(3) and labels == [0, 2, 4]
    with pytest.raises(ValueError):
        induced(c3, {5})


def test_removal(c3):
    assert remove_vertex(c3, 0).arcs == {(0, 1)}  # 1->2 relabelled
    assert remove_arc(c3, (0, 1)).arcs == {(1, 2), (2, 0)}
    assert remove_arc(Digraph(2, [(0, 1)]), (0, 1)).m == 0
    with pytest.raises(ValueError):
        remove_arc(c3, (1, 0))
    with pytest.raises(ValueError):
        remove_vertex(c3, 3)


def test_strong_components(c3):
    assert strong_components(c3) == [frozenset({0, 1, 2})]
    assert condensation(c3)[0].n == 1
    tt3 = transitive_tournament(3)
    assert strong_components(tt3) == [frozenset({0}), frozenset({1}), frozenset({2})]
    assert condensation(tt3)[0] == tt3
    t = Digraph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])
    cond, comps = condensation(t)
    assert comps == [frozenset({0, 1, 2}), frozenset({3})]
    assert cond.arcs == {(0, 1)}


def test_adjacent_and_tournament(c3):
    assert not adjacent(c3, 0, 1)
    two = Digraph(2, [(0, 1), (1, 0)])
    assert adjacent(two, 0, 1)
    assert not adjacent(Digraph(3, [(0, 1)]), 0, 2)
    assert is_tournament(c3)
    assert not is_tournament(two)
    assert underlying_graph_edges(two) == {frozenset({0, 1})}


def test_dgr_roundtrip(c3):
    text = format_dgr(c3)
    assert text == "3\n0 1\n1 2\n2 0\n"
    assert parse_dgr("# comment\n3\n\n2 0\n0 1\n1 2\n") == c3


@pytest.mark.parametrize("text", ["", "x\n", "3\n0\n", "3\n0 a\n", "2\n0 0\n", "2\n0 5\n"])
def test_dgr_errors(text):
    with pytest.raises(DGRFormatError):
        parse_dgr(text)


@given(digraphs(max_n=6))
def test_involutions(d):
    assert converse(converse(d)) == d
    assert complement(complement(d)) == d


@given(digraphs(max_n=6))
def test_acyclic_iff_singleton_components(d):
    assert is_acyclic(d) == (len(strong_components(d)) == d.n)
    cond, _ = condensation(d)
    assert is_acyclic(cond)


@given(digraphs(max_n=6))
def test_components_in_topological_order(d):
    comps = strong_components(d)
    where = {v: i for i, c in enumerate(comps) for v in c}
    assert all(where[u] <= where[v] for u, v in d.arcs)


@given(tournaments(max_n=7))
def test_tournament_condensation_is_transitive(t):
    cond, _ = condensation(t)
    assert cond == transitive_tournament(cond.n)


@given(digraphs(max_n=6), digraphs(max_n=6))
def test_induced_arc_count(d, other):
    s = set(range(0, d.n, 2)) | {v for v in range(d.n) if v < other.n}
    sub, _ = induced(d, s)
    assert sub.m == sum(1 for u, v in d.arcs if u in s and v in s)
