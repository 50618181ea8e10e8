import pytest
from django.test import override_settings

from .. import conf, fixtures
from ..bpd import all_bpds, grassmannian_to_ssyt
from ..exceptions import ClassTooLarge
from ..insertion import PlacticBiword, phi
from ..knuth import (
    KnuthMove,
    apply_move,
    diameter,
    fiber,
    iter_plactic_biwords,
    knuth_class,
    knuth_graph,
    knuth_path,
    neighbors,
    to_dot,
    verify_connectivity,
)
from ..permutation import Permutation
from ..tableau import knuth_class_words

W = PlacticBiword.from_rows


def test_neighbors_r1():
    found = dict(neighbors(W((2, 1, 2), (4, 4, 4))))
    assert found[W((2, 2, 1), (4, 4, 4))] == KnuthMove("R1", 0, "forward")


def test_label_moves():
    found = dict(neighbors(W((1, 2), (2, 2))))
    assert found[W((1, 2), (3, 2))] == KnuthMove("R3", 0, "forward")

    found = dict(neighbors(W((2, 1), (2, 2))))
    assert found[W((2, 1), (2, 1))] == KnuthMove("R4", 0, "forward")

    found = dict(neighbors(W((2, 1), (2, 1))))
    assert found[W((2, 1), (2, 2))] == KnuthMove("R4", 0, "backward")


def test_moves_are_reversible():
    for length in range(4):
        for Q in iter_plactic_biwords(length, 3):
            for other, move in neighbors(Q):
                assert apply_move(other, move.inverse()) == Q


def test_apply_move_rejects_missing_move():
    with pytest.raises(ValueError):
        apply_move(W((1,), (1,)), KnuthMove("R1", 0))


def test_moves_preserve_phi():
    for length in range(5):
        for Q in iter_plactic_biwords(length, 3):
            D = phi(Q)
            for other, move in neighbors(Q):
                assert phi(other) == D, f"{move} on {Q}"


def test_iter_plactic_biwords():
    assert len(list(iter_plactic_biwords(2, 2))) == 7
    assert list(iter_plactic_biwords(0, 3)) == [PlacticBiword()]


def test_classical_class_inserts_to_one_tableau():
    D = phi(PlacticBiword.k_biword(fixtures.ABSORB_WORD, 4))
    assert grassmannian_to_ssyt(D, 4) == fixtures.ABSORB_TABLEAU
    for word in knuth_class_words(fixtures.ABSORB_WORD):
        assert phi(PlacticBiword.k_biword(word, 4)) == D


def test_absorbing_a_biletter():
    before = PlacticBiword.k_biword(fixtures.ABSORB_WORD, 4) + W((2,), (2,))
    assert grassmannian_to_ssyt(phi(before), 4) == fixtures.ABSORBED_TABLEAU


def test_fiber_of_single_blank():
    for k in range(1, 4):
        for D in all_bpds(Permutation.simple(k)):
            ((b, _),) = D.blanks()
            assert fiber(D) == {W((b,), (k,))}


def test_small_graph():
    Q = W((1, 2), (2, 2))
    graph = knuth_graph(Q)
    assert set(graph.nodes) == knuth_class(Q)
    assert Q in graph.nodes
    dot = to_dot(graph)
    assert dot.startswith("graph knuth {")
    assert dot.count(" -- ") == len(graph.edges)


def test_knuth_path():
    Q = W((1, 2), (2, 2))
    target = W((1, 2), (3, 2))
    path = knuth_path(Q, target)
    assert [move.rule for move, _ in path] == ["R3"]
    assert path[-1][1] == target
    assert knuth_path(Q, W((1,), (1,))) is None
    assert knuth_path(Q, Q) == []


def test_diameter():
    assert diameter({W((1,), (1,))}) == 0
    assert diameter(set()) == 0


def test_class_size_limit():
    Q = W((1, 2, 1, 2), (3, 3, 3, 3))
    with override_settings(PIPEDREAMS={**conf.DEFAULTS, "NODE_LIMIT": 2}):
        with pytest.raises(ClassTooLarge):
            knuth_class(Q)


def test_label_bound_is_checked_in_debug():
    with pytest.raises(AssertionError):
        knuth_class(W((1, 1), (1, 1)), label_bound=1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fibers_are_knuth_classes(n):
    for p in Permutation.all_of_size(n):
        report = verify_connectivity(p)
        assert report.ok, report.failures


@pytest.mark.slow
def test_fibers_are_knuth_classes_in_s4():
    for p in Permutation.all_of_size(4):
        report = verify_connectivity(p)
        assert report.ok, report.failures


@pytest.mark.slow
def test_example_equivalence():
    path = knuth_path(fixtures.EXTENDED, fixtures.EXTENDED_MAXWORD)
    assert path is not None
    assert path[-1][1] == fixtures.EXTENDED_MAXWORD


@pytest.mark.slow
def test_example_fiber(example_bpd):
    report = verify_connectivity(fixtures.PI, example_bpd)
    if not report.ok:
        pytest.fail("\n".join(report.failures))
