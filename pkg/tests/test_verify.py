import pytest

from extremal_graphs import (
    InvalidParameterError,
    check_equality,
    decode_graph6,
    encode_graph6,
    enumerate_connected,
    invariant_report,
    verify_classification,
    verify_sequences,
)
from extremal_graphs import verify as verify_mod
from extremal_graphs.verify import VerificationSummary, graph_from_mask, predicted_tuples

from conftest import naive_connected, naive_graphs

# connected labelled graphs, computed by the subset oracle in conftest
NAIVE_COUNTS = {}


def naive_count(n):
    if n not in NAIVE_COUNTS:
        NAIVE_COUNTS[n] = sum(naive_connected(n, e) for e, _ in naive_graphs(n))
    return NAIVE_COUNTS[n]


@pytest.mark.parametrize("n", range(2, 7))
def test_connected_counts_match_oracle(n):
    assert sum(1 for _ in enumerate_connected(n)) == naive_count(n)


def test_frozen_counts():
    # values produced by the subset oracle above
    assert [naive_count(n) for n in range(2, 6)] == [1, 4, 38, 728]


def test_enumeration_order_and_content():
    graphs = list(enumerate_connected(3))
    assert len(graphs) == 4
    assert [g.num_edges() for g in graphs] == [2, 2, 2, 3]
    pairs = [(i, j) for j in range(1, 5) for i in range(j)]

    def mask(g):
        return sum(1 << k for k, (i, j) in enumerate(pairs) if j < g.n and g.has_edge(i, j))

    masks = [mask(g) for g in enumerate_connected(5)]
    assert masks == sorted(masks) and len(set(masks)) == len(masks)


def test_graph_from_mask_uses_graph6_pair_order():
    for mask in range(64):
        g = graph_from_mask(mask, 4)
        assert encode_graph6(g)[1] - 63 == int(f"{mask:06b}"[::-1], 2)


@pytest.mark.parametrize("n, allow", [(1, False), (8, False), (9, True)])
def test_range_checks(n, allow):
    with pytest.raises(InvalidParameterError):
        list(enumerate_connected(n, allow_n8=allow))
    with pytest.raises(InvalidParameterError):
        verify_classification(n, allow_n8=allow)


def test_summary_n3():
    s = verify_classification(3)
    assert (s.total_graphs, s.connected, s.non_complete_connected, s.extremal, s.gd_members, s.fq_members) == (
        8, 4, 3, 3, 3, 0)
    assert s.ok and s.realized_tuples == {(3, 1, 2, 2)}


def test_summary_n4():
    s = verify_classification(4)
    assert s.total_graphs == 64 and s.connected == 38
    assert s.ok
    assert s.extremal == s.gd_members + s.fq_members


def test_jobs_do_not_change_the_result():
    one = verify_classification(5, jobs=1)
    two = verify_classification(5, jobs=2)
    assert one.to_json() == two.to_json()
    assert one.to_text() == two.to_text()


def test_progress_callback():
    calls = []
    verify_classification(4, progress=lambda done, total: calls.append((done, total)))
    assert calls == [(k, 64) for k in range(1, 65)]


def test_sequences():
    check = verify_sequences(3)
    assert check.agree and check.predicted == {(3, 1, 2, 2)}
    assert predicted_tuples(4) == {(4, 1, 3, 2), (4, 1, 2, 3), (4, 2, 2, 2)}
    assert verify_sequences(4).agree
    assert verify_sequences(6).agree


def test_summary_merge_is_fieldwise():
    a = VerificationSummary(5, total_graphs=2, extremal=1, mismatches=["b"], realized_tuples={(5, 1, 4, 2)})
    b = VerificationSummary(5, total_graphs=3, mismatches=["a"], realized_tuples={(5, 2, 3, 2)})
    m = a.merge(b)
    assert m.total_graphs == 5 and m.extremal == 1
    assert m.mismatches == ["a", "b"]
    assert m.realized_tuples == {(5, 1, 4, 2), (5, 2, 3, 2)}
    assert not m.ok
    with pytest.raises(ValueError):
        a.merge(VerificationSummary(6))


def test_reported_mismatches_reproduce(monkeypatch):
    # a recognizer that never finds a member turns every extremal graph into a mismatch
    monkeypatch.setattr(verify_mod, "recognize", lambda adj, n, free: None)
    s = verify_classification(4)
    assert len(s.mismatches) == s.extremal > 0
    assert s.mismatches == sorted(s.mismatches)
    for g6 in s.mismatches:
        assert check_equality(decode_graph6(g6))


def test_summary_serialization():
    s = verify_classification(3)
    assert s.to_text().splitlines()[-2:] == ["realized_tuples: (3,1,2,2)", "verdict: ok"]
    rec = s.to_record()
    assert rec["realized_tuples"] == [[3, 1, 2, 2]] and rec["mismatches"] == []


def test_realized_tuples_match_reports():
    s = verify_classification(4)
    seen = set()
    for g in enumerate_connected(4):
        r = invariant_report(g)
        if r.gap == 0:
            seen.add((4, r.kappa, r.free_count, r.diameter))
    assert seen == s.realized_tuples
