import pytest

from ..exceptions import CodeNotRealizable, DeltaUndefined, IdentityHasNoDescent, NotACover, NotGrassmannian
from ..permutation import (
    DecoratedChain,
    Permutation,
    bruhat_le,
    cover_up,
    delta,
    h,
    is_cover,
    iter_chains,
    k_bruhat_covers,
    maxword_chain,
    minword_chain,
    perm_from_code,
    shape_of,
)
from .. import fixtures

P = Permutation.parse


def _trim(values):
    values = list(values)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def test_trailing_fixed_points_are_dropped():
    assert P("2134") == P("21")
    assert P("1234").is_identity()
    assert hash(P("213")) == hash(P("21"))
    assert P("21")(5) == 5


def test_parse_formats():
    assert P("1,3,2") == P("132") == P("[1, 3, 2]") == P([1, 3, 2])


@pytest.mark.parametrize("text", ["1224", "abc", "[1, 1]", "0"])
def test_parse_rejects_non_permutations(text):
    with pytest.raises(ValueError):
        P(text)


def test_code_and_maxcode(pi):
    assert pi.code == (0, 1, 2, 3, 1, 2, 1, 0)
    assert pi.maxcode == (0, 0, 0, 0, 2, 0, 2, 6)
    assert P("21").code == (1, 0)
    assert P("21").maxcode == (0, 1)
    assert Permutation.identity().code == ()


def test_perm_from_code(pi):
    assert perm_from_code((0, 1, 2, 3, 1, 2, 1, 0)) == pi
    assert perm_from_code((0, 0, 0)).is_identity()
    assert perm_from_code((0, 0, 1)) == Permutation.simple(3)


def test_code_round_trip():
    for p in Permutation.all_of_size(5):
        assert perm_from_code(p.code) == p


def test_unrealizable_code():
    with pytest.raises(CodeNotRealizable):
        perm_from_code((0, 2), n=2)


def test_descents(pi):
    assert (pi.d1, pi.d2) == (4, 7)
    assert P("321").descents == {1, 2}
    s3 = Permutation.simple(3)
    assert s3.d1 == s3.d2 == 3
    with pytest.raises(IdentityHasNoDescent):
        Permutation.identity().d1


def test_length_is_inversions():
    for p in Permutation.all_of_size(4):
        inversions = sum(1 for i in range(1, 5) for j in range(i + 1, 5) if p(i) > p(j))
        assert p.length == inversions == len(p.reduced_word())


def test_covers():
    cover = cover_up(P("123"), 1, 2)
    assert (cover.m_alpha, cover.m_beta) == (0, 0)
    assert P("123").t(1, 2) == P("213")
    assert is_cover(P("13254"), 1, 3)
    assert P("13254").t(1, 3) == P("23154")

    with pytest.raises(NotACover):
        cover_up(P("123"), 1, 3)


def test_cover_predicts_code_change():
    for p in Permutation.all_of_size(4):
        for beta in range(2, 6):
            for alpha in range(1, beta):
                if not is_cover(p, alpha, beta):
                    continue
                cover = cover_up(p, alpha, beta)
                up = p.t(alpha, beta)
                assert cover.predicted_code(p.code) == _trim(up.code)
                assert cover.predicted_maxcode(p.maxcode) == _trim(up.maxcode)
                assert up.length == p.length + 1
                assert bruhat_le(p, up)


def test_k_bruhat_covers():
    identity = Permutation.identity()
    assert [(c.alpha, c.beta) for c in k_bruhat_covers(identity, 1)] == [(1, 2)]
    assert [(c.alpha, c.beta) for c in k_bruhat_covers(P("213"), 1)] == [(1, 3)]
    assert P("213").t(1, 3) == P("312")
    assert all(c.label == 2 for c in k_bruhat_covers(P("132"), 2))


def test_h(pi):
    assert h(pi) == fixtures.H_OF_PI
    s2 = Permutation.simple(2)
    assert h(s2) == s2
    for p in Permutation.all_of_size(4):
        if len(p.descents) == 1:
            assert h(p) == p


def test_delta_builds_minword_chain(pi):
    perms = [Permutation.identity()]
    while perms[-1] != pi:
        perms.append(delta(perms[-1], pi))
    assert perms == fixtures.MINWORD_CHAIN.perms
    assert minword_chain(pi) == fixtures.MINWORD_CHAIN


def test_delta_edge_cases():
    assert delta(Permutation.identity(), Permutation.simple(3)) == Permutation.simple(3)
    with pytest.raises(DeltaUndefined):
        delta(P("21"), P("21"))


def test_maxword_chain(pi):
    assert maxword_chain(pi) == fixtures.MAXWORD_CHAIN
    assert maxword_chain(pi).labels == (7, 7, 7, 7, 7, 7, 6, 6, 4, 4)



def test_maxword_chain_fixture_is_a_chain_of_covers():
    perms = fixtures.MAXWORD_CHAIN.perms
    assert perms[3] == P("12346785")
    for before, after in zip(perms, perms[1:]):
        moved = [i for i in range(1, 9) if before(i) != after(i)]
        assert len(moved) == 2
        assert after.length == before.length + 1

    misprinted = [P(p) for p in ("12345678", "12345687", "12345786", "12346875")]
    with pytest.raises(NotACover) as raised:
        DecoratedChain.from_perms(misprinted, (7, 7, 7))
    assert raised.value.error.startswith("12345786")
    assert not hasattr(raised.value, "status")

def test_shape():
    assert shape_of(fixtures.H_OF_PI, 4) == (3, 2, 1)
    assert shape_of(Permutation.identity()) == ()
    assert shape_of(Permutation.simple(2)) == (1,)
    with pytest.raises(NotGrassmannian):
        shape_of(P("321"))


def test_iter_chains():
    chains = list(iter_chains(P("321"), (2, 2, 1)))
    assert chains
    for chain in chains:
        assert isinstance(chain, DecoratedChain)
        assert chain.is_valid()
        assert chain.end == P("321")
        assert chain.labels == (2, 2, 1)
