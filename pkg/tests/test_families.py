import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diachromatic.coloring import Coloring, is_acyclic_coloring, is_complete_coloring
from diachromatic.digraph import Digraph, is_acyclic, is_tournament
from diachromatic.families import (
    CirculantSpec,
    arc_scores,
    circulant_coloring,
    circulant_tournament,
    complete_symmetric,
    discordant_bound,
    discordant_partition_coloring,
    discordant_subtournament,
    is_discordant,
    matching_coloring,
    oriented_matching,
    random_digraph,
    random_tournament,
    transitive_coloring,
    transitive_tournament,
    two_transitive_coloring,
    xi2_exact,
)
from diachromatic.solver import diachromatic_number, size_bound

import _oracle
from strategies import tournaments


def test_generators():
    assert transitive_tournament(4).sorted_arcs() == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert oriented_matching(2).sorted_arcs() == [(0, 1), (2, 3)]
    assert complete_symmetric(3).m == 6
    c5 = circulant_tournament(CirculantSpec(2, [1, 2]))
    assert is_tournament(c5) and c5.has_arc(3, 0) and c5.has_arc(4, 1)
    assert is_tournament(random_tournament(9, 3))
    assert random_tournament(9, 3) == random_tournament(9, random.Random(3))
    assert random_digraph(5, 0.0, 1).m == 0
    assert random_digraph(5, 1.0, 1) == complete_symmetric(5)
    with pytest.raises(ValueError):
        random_digraph(3, 1.5)


def test_circulant_spec_validation():
    assert CirculantSpec(3, [1, -2, 3]).jumps == frozenset({1, 5, 3})
    with pytest.raises(ValueError):
        CirculantSpec(1, [1, -1])
    with pytest.raises(ValueError):
        CirculantSpec(2, [1])
    with pytest.raises(ValueError):
        CirculantSpec(2, [0, 1, 2])
    with pytest.raises(ValueError):
        CirculantSpec(0, [])


def test_matching_coloring_small():
    cert = matching_coloring(2)
    assert cert.coloring == Coloring([1, 2, 2, 1])
    assert cert.acyclic and cert.complete
    assert matching_coloring(1).coloring == Coloring([1, 1])


@pytest.mark.parametrize("m", range(1, 21))
def test_matching_coloring_reaches_size_bound(m):
    cert = matching_coloring(m)
    assert cert.k == size_bound(m)
    assert cert.acyclic and cert.complete and cert.recheck()


def test_circulant_coloring_classes():
    cert = circulant_coloring(CirculantSpec(2, [1, 2]))
    assert sorted(map(sorted, cert.coloring.classes())) == [[0], [1, 4], [2, 3]]
    assert cert.acyclic and cert.complete


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_circulant_coloring_all_jump_sets(m):
    n = 2 * m + 1
    for signs in range(2**m):
        jumps = [j if signs >> (j - 1) & 1 else n - j for j in range(1, m + 1)]
        cert = circulant_coloring(CirculantSpec(m, jumps))
        assert cert.k == m + 1 and cert.acyclic and cert.complete


@pytest.mark.parametrize("n", range(1, 12))
def test_transitive_coloring(n):
    cert = transitive_coloring(n)
    assert cert.k == (n + 1) // 2
    assert cert.acyclic and cert.complete


def test_two_transitive_coloring():
    # two disjoint transitive pieces of a random tournament
    t = random_tournament(10, 5)
    cert = two_transitive_coloring(t, [0], [1])
    assert cert.acyclic and cert.complete
    tt = transitive_tournament(9)
    cert = two_transitive_coloring(tt, [0, 1], [2, 3, 4, 5, 6, 7, 8])
    assert cert.acyclic and cert.complete
    assert cert.k >= 2 + (7 - 2) // 2
    with pytest.raises(ValueError):
        two_transitive_coloring(tt, [0, 1], [1, 2])
    with pytest.raises(ValueError):
        two_transitive_coloring(Digraph(3, [(0, 1), (1, 2), (2, 0)]), [0, 1, 2], [])


def test_two_transitive_rejects_cyclic_set(c3):
    t = Digraph(4, [*c3.arcs, (0, 3), (1, 3), (2, 3)])
    with pytest.raises(ValueError):
        two_transitive_coloring(t, [0, 1, 2], [3])


def test_discordant_on_c3(c3):
    res = discordant_subtournament(c3)
    assert res.anchor_arc == (0, 1)
    assert (res.c3, res.tt_star) == (1, 0)
    assert res.vertices == frozenset({0, 1})
    assert res.acyclic_order == (0, 1)
    assert xi2_exact(c3) == 2
    assert xi2_exact(transitive_tournament(3)) == 2


def test_discordant_rejects_small_or_non_tournament():
    with pytest.raises(ValueError):
        discordant_subtournament(transitive_tournament(2))
    with pytest.raises(ValueError):
        discordant_subtournament(Digraph(3, [(0, 1)]))


def test_discordant_partition_on_c3(c3):
    cert = discordant_partition_coloring(c3)
    assert sorted(map(sorted, cert.coloring.classes())) == [[0, 1], [2]]
    assert cert.acyclic and cert.complete


@settings(deadline=None)
@given(tournaments(min_n=3, max_n=7))
def test_arc_scores_count_triangles(t):
    cyc, trans = _oracle.triangle_counts(t.n, t.arcs)
    total = sum(a + b for a, b in arc_scores(t).values())
    assert cyc + trans == comb(t.n, 3)
    assert total == comb(t.n, 3) + 2 * cyc


@settings(deadline=None)
@given(tournaments(min_n=3, max_n=9))
def test_discordant_properties(t):
    res = discordant_subtournament(t)
    assert is_discordant(t, res.vertices)
    assert not res.notes
    assert len(res.vertices) <= discordant_bound(t.n)
    order = res.acyclic_order
    assert sorted(order) == sorted(res.vertices)
    assert all(t.has_arc(a, b) for i, a in enumerate(order) for b in order[i + 1:])


@settings(deadline=None, max_examples=60)
@given(tournaments(min_n=3, max_n=9))
def test_xi2_within_bound(t):
    assert xi2_exact(t) <= discordant_bound(t.n)


@settings(deadline=None)
@given(tournaments(min_n=1, max_n=9))
def test_partition_coloring_complete(t):
    cert = discordant_partition_coloring(t)
    assert cert.acyclic and cert.complete and not cert.notes
    assert is_acyclic_coloring(t, cert.coloring) and is_complete_coloring(t, cert.coloring)


@pytest.mark.parametrize("seed", range(5))
def test_partition_coloring_large(seed):
    t = random_tournament(60, seed)
    cert = discordant_partition_coloring(t)
    assert cert.acyclic and cert.complete
    assert cert.k >= 60 / discordant_bound(60) - 1


def test_constructions_match_solver_values():
    assert diachromatic_number(circulant_tournament(CirculantSpec(3, [1, 2, 3]))).value == 4
    assert diachromatic_number(transitive_tournament(8)).value == 4
    assert not is_acyclic(circulant_tournament(CirculantSpec(1, [1])))


@settings(deadline=None)
@given(st.integers(0, 2**31))
def test_random_tournament_deterministic(seed):
    assert random_tournament(6, seed) == random_tournament(6, seed)
