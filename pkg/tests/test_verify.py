import pytest

from equimatch import verify
from equimatch.graph import Graph, cycle_graph, path_graph


def text(report):
    return "\n".join(report.lines(timing=False))


def test_parallel_matches_serial():
    one = verify.exhaustive_suite(5, jobs=1)
    two = verify.exhaustive_suite(5, jobs=2)
    assert text(one) == text(two)
    assert one.ok and one.tally.counts["n5"] == 728


def test_criterion_sample_parallel_and_seeded():
    a = verify.criterion_sample_suite(9, 3000, seed=11, jobs=1)
    b = verify.criterion_sample_suite(9, 3000, seed=11, jobs=2)
    assert text(a) == text(b) and a.ok
    c = verify.criterion_sample_suite(9, 3000, seed=12)
    assert text(a) != text(c)
    with pytest.raises(ValueError):
        verify.criterion_sample_suite(8, 10)


def test_mismatches_are_reported_with_graph6():
    tally = verify.Tally()
    tally.fail("classify", cycle_graph(4), "note")
    report = verify.SuiteReport("demo", ["x"], tally, 0.0)
    assert not report.ok
    assert "  mismatch classify: Cl (note)" in report.lines()
    assert "  failures classify: 1" in report.lines()


def test_tally_merge_caps_examples():
    a, b = verify.Tally(), verify.Tally()
    for _ in range(verify.MAX_LISTED):
        a.fail("k", Graph(1))
    b.fail("k", Graph(2))
    a.merge(b)
    assert a.failures["k"] == verify.MAX_LISTED + 1 and len(a.examples) == verify.MAX_LISTED


def test_small_matchings():
    ms = list(verify.small_matchings(path_graph(4), 2))
    assert sorted(ms) == sorted([(), ((0, 1),), ((1, 2),), ((2, 3),), ((0, 1), (2, 3))])


def test_isolating_check():
    assert verify.isolating_violation(cycle_graph(7)) is None
    assert verify.isolating_violation(path_graph(5)) is None
    # P7 is not equimatchable: matching {12, 45} strands 0, 3 and 6
    assert verify.isolating_violation(path_graph(7)) is not None


def test_graph6_suite_small():
    r = verify.graph6_suite(max_n=4, samples=50, seed=1)
    assert r.ok and r.tally.counts["graphs"] == 1 + 1 + 2 + 8 + 64 + 50


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify.run(["nope"])
