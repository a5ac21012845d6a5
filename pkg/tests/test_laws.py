import pytest

from diachromatic import laws
from diachromatic.digraph import Digraph, format_dgr
from diachromatic.families import complete_symmetric, transitive_tournament


def test_corpus_sizes():
    assert len(list(laws.all_digraphs(3))) == 64
    assert len(list(laws.all_tournaments(4))) == 64
    assert len(laws.exhaustive_corpus(3)) == 1 + 4 + 64
    assert len(laws.parse_corpus("tournaments:3")) == 1 + 2 + 8


def test_random_corpus_deterministic():
    a = laws.parse_corpus("random:5,40,7")
    assert a == laws.random_corpus(5, 40, 7)
    assert all(1 <= d.n <= 5 for d in a)
    ts = laws.parse_corpus("random-tournament:6,10,1")
    assert len(ts) == 10 and all(3 <= t.n <= 6 for t in ts)


def test_corpus_from_file(tmp_path):
    p = tmp_path / "g.dgr"
    p.write_text(format_dgr(transitive_tournament(3)))
    assert laws.parse_corpus(str(p)) == [transitive_tournament(3)]


@pytest.mark.parametrize("spec", ["random:5,x,1", "nowhere.dgr", "exhaustive:"])
def test_bad_corpus(spec):
    with pytest.raises(laws.CorpusSpecError):
        laws.parse_corpus(spec)


def test_unknown_law():
    with pytest.raises(KeyError):
        laws.run_laws(["chain", "nope"], [])


SOUND = [
    "chain",
    "size_bound",
    "converse",
    "asymmetric_half",
    "dac_dc_gap_asymmetric",
    "removal",
    "bipartition",
    "half_bound",
    "greedy",
    "interpolation",
    "nordhaus_gaddum",
    "k_minimal",
    "dihom_dc",
    "dihom_complement",
    "dihom_dac",
    "dihom_interpolation",
    "tournament_bounds",
]


@pytest.mark.parametrize("law_id", SOUND)
def test_sound_laws_hold_up_to_order_three(law_id):
    (report,) = laws.run_laws([law_id], laws.exhaustive_corpus(3))
    assert report.passed, report.violations[:2]
    assert report.tested + report.skipped == 69


def test_gap_law_fails_on_symmetric_pair():
    (report,) = laws.run_laws(["dac_dc_gap"], [complete_symmetric(2)])
    assert not report.passed
    assert report.line().startswith("FAIL dac_dc_gap")
    assert laws.failing([report]) == [report]


def test_gap_law_holds_for_asymmetric_pair_free_cases():
    (report,) = laws.run_laws(["dac_dc_gap_asymmetric"], [complete_symmetric(2)])
    assert report.tested == 0 and report.passed


def test_dc_equality_counterexample():
    path = Digraph(3, [(0, 1), (1, 2)])
    (report,) = laws.run_laws(["dihom_dc_equality"], [path])
    assert not report.passed


def test_tournament_law_skips_non_tournaments():
    (report,) = laws.run_laws(["tournament_bounds"], [Digraph(3, [(0, 1)]), transitive_tournament(6)])
    assert (report.tested, report.skipped) == (1, 1)
    assert report.passed


def test_informational_probe_never_fails_a_run():
    (report,) = laws.run_laws(["ng_dac_dac"], laws.exhaustive_corpus(3))
    assert report.informational
    assert laws.failing([report]) == []


def test_report_lines_are_deterministic():
    corpus = laws.parse_corpus("random:4,30,3")
    a = [r.line() for r in laws.run_laws(list(laws.LAWS), corpus)]
    b = [r.line() for r in laws.run_laws(list(laws.LAWS), corpus)]
    assert a == b
    assert len(a) == len(laws.LAWS)
