import pytest

from ..bpd import (
    BPD,
    all_bpds,
    droops,
    exhaustive_bpds,
    grassmannian_to_ssyt,
    rothe_bpd,
    ssyt_to_bpd,
    validate,
    weight,
)
from ..exceptions import BoundaryMismatch, DanglingStrand, DoubleCrossing, EntryExceedsK, ParseError
from ..permutation import Permutation, grassmannian_from_shape
from ..polynomial import IntPolynomial
from ..tableau import SSYT, semistandard_tableaux

P = Permutation.parse
x = IntPolynomial.variable


def test_rothe_small():
    assert rothe_bpd(P("21")).grid == (".r", "r+")
    assert BPD.identity(2).grid == ("r-", "|r")
    assert BPD.identity(3).grid == ("r--", "|r-", "||r")


def test_rothe_counts(pi):
    D = rothe_bpd(pi)
    assert D.blank_counts() == (0, 1, 2, 3, 1, 2, 1, 0)
    assert D.cross_counts() == (0, 0, 0, 0, 2, 0, 2, 6)
    assert weight(D) == IntPolynomial.monomial((0, 1, 2, 3, 1, 2, 1))


def test_rothe_round_trip():
    for p in Permutation.all_of_size(5):
        assert rothe_bpd(p).perm == p
        assert weight(rothe_bpd(p)) == IntPolynomial.monomial(p.code)


def test_parse():
    assert BPD.parse(".r\nr+\n") == rothe_bpd(P("21"))
    assert BPD.parse(".r\nr+").perm == P("21")
    with pytest.raises(ParseError):
        BPD([".r", "r"])
    with pytest.raises(ParseError):
        BPD(["ab", "cd"])


def test_identity_pipes_do_not_change_equality():
    D = rothe_bpd(P("21"))
    bigger = D.enlarged(4)
    assert bigger.n == 4
    assert bigger == D
    assert hash(bigger) == hash(D)
    assert bigger.perm == D.perm
    assert BPD.identity(3) == BPD.identity()


def test_invalid_grids():
    with pytest.raises(BoundaryMismatch):
        validate(BPD(["r-", "|."]))
    with pytest.raises(DanglingStrand):
        validate(BPD(["r-", "-r"]))


def test_double_crossing():
    D = BPD(["..r--", ".r+--", "r+jr-", "||r+-", "||||r"])
    with pytest.raises(DoubleCrossing):
        D.perm


def test_simple_transposition_bpds():
    for k in range(1, 4):
        s = Permutation.simple(k)
        found = all_bpds(s)
        assert len(found) == k
        assert sorted(D.blanks() for D in found) == [[(b, b)] for b in range(1, k + 1)]
        total = IntPolynomial.zero()
        for D in found:
            total = total + weight(D)
        assert total == sum((x(b) for b in range(2, k + 1)), x(1))


def test_droops():
    assert droops(rothe_bpd(Permutation.simple(1))) == []

    (drooped,) = droops(rothe_bpd(Permutation.simple(2)))
    assert drooped.blanks() == [(1, 1)]
    assert drooped.perm == Permutation.simple(2)


def test_identity_has_one_bpd():
    assert all_bpds(Permutation.identity()) == {BPD.identity()}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_droop_closure_matches_exhaustive_search(n):
    for p in Permutation.all_of_size(n):
        assert all_bpds(p) == exhaustive_bpds(p)
        assert all_bpds(p, method="exhaustive") == all_bpds(p)


def test_every_bpd_has_the_right_blank_count():
    for p in Permutation.all_of_size(4):
        for D in all_bpds(p):
            assert len(D.blanks()) == p.length


def test_pipes_are_paths():
    D = rothe_bpd(P("21"))
    pipes = D.pipes()
    assert pipes[1] == ((2, 1), (2, 2))
    assert pipes[2] == ((2, 2), (1, 2))


def test_single_cell_tableau():
    for k in range(1, 4):
        for b in range(1, k + 1):
            D = ssyt_to_bpd(SSYT([[b]]), k)
            assert D.perm == Permutation.simple(k)
            assert D.blanks() == [(b, b)]

    assert ssyt_to_bpd(SSYT(), 2) == BPD.identity()
    with pytest.raises(EntryExceedsK):
        ssyt_to_bpd(SSYT([[3]]), 2)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_grassmannian_bijection(k):
    for shape in [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)]:
        if len(shape) > k:
            continue
        p = grassmannian_from_shape(shape, k)
        tableaux = list(semistandard_tableaux(shape, k))
        images = {ssyt_to_bpd(T, k) for T in tableaux}
        assert images == set(all_bpds(p))
        for T in tableaux:
            D = ssyt_to_bpd(T, k)
            assert D.perm == p
            assert grassmannian_to_ssyt(D, k) == T
