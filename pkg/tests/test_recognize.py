import pytest

from extremal_graphs import (
    FqMember,
    FqSpec,
    GdMember,
    GdSpec,
    Graph,
    InvalidSequenceError,
    NotExtremal,
    PreconditionError,
    build_fq,
    build_gamma,
    build_gd,
    build_omega,
    certificate_problems,
    check_equality,
    classify,
    complete_graph,
    cycle_graph,
    disjoint_union,
    invariant_report,
    parse_gd_spec,
    path_graph,
    predicted_depth,
    realizable_sequence,
    witness_for_sequence,
)
from extremal_graphs.graph import relabel
from extremal_graphs.recognize import Attached, FqCertificate, GdCertificate

from conftest import connected_noncomplete
from grids import fq_grid, gd_grid

FIG3 = build_gd(parse_gd_spec("d=7; hv=2; hw=0; H1=1,1; H5=2,1,1,1; H23=2,1; H34=2"))
FIG7 = build_fq(FqSpec(3, (1, 1, 2)))


def test_classify_worked_graphs():
    c = classify(FIG3)
    assert isinstance(c, GdMember) and c.d == 7
    assert c.certificate.path == tuple(range(8))
    assert certificate_problems(FIG3, c) == []
    c = classify(FIG7)
    assert isinstance(c, FqMember) and c.q == 3
    assert c.certificate.core == (0, 1, 2)
    assert c.certificate.parts == ((3,), (4,), (5, 6))
    assert certificate_problems(FIG7, c) == []


def test_classify_not_extremal():
    assert classify(cycle_graph(5)) == NotExtremal(3)
    assert classify(cycle_graph(4)) == NotExtremal(2)


def test_classify_reuses_report():
    g = cycle_graph(6)
    assert classify(g, invariant_report(g)) == classify(g)


@pytest.mark.parametrize("g", [complete_graph(4), disjoint_union(path_graph(2), path_graph(2)), path_graph(2)])
def test_preconditions(g):
    with pytest.raises(PreconditionError):
        classify(g)
    with pytest.raises(PreconditionError):
        check_equality(g)


def test_text_forms():
    assert classify(path_graph(4)).to_text() == "GD d=3 path=1,2,3,4 components=({1};{2}),({4};{3})"
    assert classify(build_omega(2, 1, 1)).to_text() == "FQ q=2 core=1,2 parts={3},{4}"
    assert classify(cycle_graph(5)).to_text() == "NOT_EXTREMAL gap=3"
    rec = classify(path_graph(3)).to_record()
    assert rec == {"class": "GD", "d": 2, "path": [1, 2, 3],
                   "components": [{"vertices": [1], "attachment": [2]},
                                  {"vertices": [3], "attachment": [2]}]}


def test_orientation_puts_lowest_endpoint_clique_first():
    # non-free 0 and 1; leaf 2 hangs off 1, leaf 3 off 0
    g = Graph.from_edges(4, [(0, 1), (0, 3), (1, 2)])
    c = classify(g)
    assert c.certificate.path == (2, 1, 0, 3)
    assert certificate_problems(g, c) == []


def test_d2_needs_two_cliques_on_the_cut_vertex():
    bowtie = build_gd(GdSpec(2, 1, 1))
    c = classify(bowtie)
    assert isinstance(c, GdMember) and c.d == 2
    assert c.certificate.path == (0, 1, 2)
    assert [comp.vertices for comp in c.certificate.components] == [(0, 3), (2, 4)]


def test_pair_cliques_do_not_fake_endpoints():
    # K_2 joined to two disjoint cliques: both path vertices see both cliques
    g = build_fq(FqSpec(2, (1, 2)))
    assert isinstance(classify(g), FqMember)


@pytest.mark.parametrize("g, expected", [
    (build_gamma(3, 3), True),
    (cycle_graph(4), False),
    (build_fq(FqSpec(2, (2, 2))), True),
    (cycle_graph(5), False),
])
def test_check_equality(g, expected):
    assert check_equality(g) is expected


@pytest.mark.parametrize("tup, expected", [
    ((4, 1, 3, 2), True),
    ((5, 1, 4, 2), True),
    ((5, 1, 3, 3), True),
    ((6, 2, 4, 2), True),
    ((7, 2, 4, 3), False),
    ((3, 1, 2, 2), True),
    ((4, 2, 2, 2), True),
    ((4, 1, 4, 1), False),
    ((4, 3, 1, 2), False),
    ((3, 2, 1, 2), False),
])
def test_realizable_sequence(tup, expected):
    assert realizable_sequence(*tup) is expected


def test_realizable_sequence_rejects_off_hyperplane():
    with pytest.raises(InvalidSequenceError):
        realizable_sequence(5, 1, 3, 2)


@pytest.mark.parametrize("tup", [(4, 1, 3, 2), (4, 2, 2, 2), (3, 1, 2, 2), (6, 1, 3, 4), (7, 3, 4, 2)])
def test_witness_examples(tup):
    g = witness_for_sequence(*tup)
    r = invariant_report(g)
    assert (r.n, r.kappa, r.free_count, r.diameter) == tup


def test_witness_small_cases():
    assert witness_for_sequence(3, 1, 2, 2) == path_graph(3)
    assert witness_for_sequence(4, 2, 2, 2) == build_omega(2, 1, 1)
    assert witness_for_sequence(4, 1, 3, 2) == build_gamma(2, 3)
    with pytest.raises(InvalidSequenceError):
        witness_for_sequence(7, 2, 4, 3)


def test_every_realizable_tuple_has_a_matching_witness():
    for n in range(3, 13):
        for q in range(1, n):
            for d in range(1, n + 2 - q):
                f = n + 2 - q - d
                if realizable_sequence(n, q, f, d):
                    r = invariant_report(witness_for_sequence(n, q, f, d))
                    assert (r.n, r.kappa, r.free_count, r.diameter, r.gap) == (n, q, f, d, 0)


def test_predicted_depth():
    assert predicted_depth(classify(FIG3), FIG3.n) == 23
    assert predicted_depth(classify(FIG7), FIG7.n) == 6
    assert predicted_depth(classify(cycle_graph(5)), 5) is None


def test_certificate_checker_catches_tampering():
    c = classify(FIG3)
    cert = c.certificate
    bad_path = GdMember(GdCertificate(cert.path[:-1] + (9,), cert.components), 7)
    assert certificate_problems(FIG3, bad_path)
    merged = GdMember(GdCertificate(cert.path, cert.components[1:]), 7)
    assert certificate_problems(FIG3, merged)
    wrong_attach = GdMember(GdCertificate(cert.path, (Attached((0, 8, 9), (2,)),) + cert.components[1:]), 7)
    assert certificate_problems(FIG3, wrong_attach)
    fq = classify(FIG7)
    assert certificate_problems(FIG7, FqMember(FqCertificate((0, 1), fq.certificate.parts), 2))
    assert certificate_problems(FIG7, FqMember(fq.certificate, 4))


@pytest.mark.parametrize("n", range(3, 7))
def test_classification_agrees_with_equality(n):
    for g in connected_noncomplete(n):
        c = classify(g)
        assert isinstance(c, (GdMember, FqMember)) == check_equality(g), g
        assert certificate_problems(g, c) == []
        if not isinstance(c, NotExtremal):
            r = invariant_report(g)
            assert r.is_chordal
            if isinstance(c, GdMember):
                assert (r.kappa, r.diameter) == (1, c.d)
            else:
                assert (r.diameter, r.kappa) == (2, c.q)


def test_classification_is_label_invariant():
    g = build_gd(GdSpec.from_families(4, 1, 2, {2: (2,)}, {1: (1,)}))
    perm = list(range(g.n))[::-1]
    c = classify(relabel(g, perm))
    assert isinstance(c, GdMember) and c.d == 4


def test_round_trip_on_grids():
    for spec in gd_grid(max_d=5, max_n=9):
        c = classify(build_gd(spec))
        assert isinstance(c, GdMember) and c.d == spec.d
    for spec in fq_grid():
        c = classify(build_fq(spec))
        assert isinstance(c, FqMember) and c.q == spec.q
