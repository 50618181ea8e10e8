import pytest
from django.test import override_settings

from .. import conf
from ..bpd import all_bpds
from ..exceptions import DescentConditionViolated, NoAdmissibleChain, NoExpansion
from ..permutation import Permutation
from ..polynomial import IntPolynomial
from ..schubert import (
    admissible_chains,
    chain_endpoints,
    compositions,
    count_chains,
    expand_schubert,
    product_identity_holds,
    product_of_simple,
    schubert,
    schubert_bpd,
    schubert_divdiff,
    separated_descent_constant,
    structure_constants,
)
from ..verification import verify_constants

P = Permutation.parse
x = IntPolynomial.variable


def test_small_schubert_polynomials():
    assert schubert(Permutation.identity()) == 1
    assert schubert(P("21")) == x(1)
    assert schubert(P("132")) == x(1) + x(2)
    assert schubert(P("231")) == x(1) * x(2)
    assert schubert(P("312")) == x(1) * x(1)
    assert schubert(P("321")) == x(1) * x(1) * x(2)


def test_example_rothe_weight_is_a_term(pi):
    assert schubert(pi).coefficient(pi.code) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bpd_weights_match_divided_differences(n):
    for p in Permutation.all_of_size(n):
        assert schubert_bpd(p) == schubert_divdiff(p) == schubert(p)


def test_divided_differences_run_along_w0_times_p():
    # 231 and 312 are inverse to each other, so the order of the operators shows
    assert (Permutation.longest(3) * P("231")).reduced_word() == [1]
    assert schubert_divdiff(P("231")) == x(1) * x(2)
    assert schubert_divdiff(P("312")) == x(1) * x(1)
    assert schubert_divdiff(Permutation.longest(3)) == x(1) * x(1) * x(2)


def test_compositions():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(1, 0)) == []
    assert len(list(compositions(3, 3))) == 10


def test_expand_schubert():
    assert expand_schubert(x(1) * x(1)) == {P("312"): 1}
    assert expand_schubert(x(1) * (x(1) + x(2))) == {P("312"): 1, P("231"): 1}
    assert expand_schubert(x(2)) == {P("132"): 1, P("21"): -1}
    assert expand_schubert(IntPolynomial.zero()) == {}


def test_expand_schubert_rejects():
    with pytest.raises(NoExpansion):
        expand_schubert(x(1) + IntPolynomial.one())
    with override_settings(PIPEDREAMS={**conf.DEFAULTS, "MAX_EXPANSION_VARS": 2}):
        with pytest.raises(NoExpansion):
            expand_schubert(x(3))


def test_expansion_of_every_schubert_polynomial():
    for p in Permutation.all_of_size(4):
        if not p.is_identity():
            assert expand_schubert(schubert(p)) == {p: 1}


def test_chains():
    assert count_chains(P("321"), (2, 2, 1)) == 1
    assert count_chains(P("321"), (1, 1)) == 0
    assert chain_endpoints((1, 2)) == {P("312"): 1, P("231"): 1}
    assert product_of_simple((1, 2)) == x(1) * (x(1) + x(2))


@pytest.mark.parametrize("labels", [(), (1,), (2, 1), (1, 2), (2, 2, 1), (3, 1, 2), (1, 1, 1)])
def test_product_identity(labels):
    assert product_identity_holds(labels)


def test_structure_constants():
    assert structure_constants(P("21"), P("21")) == {P("312"): 1}
    assert structure_constants(P("132"), P("132")) == {P("1423"): 1, P("231"): 1}


def test_descent_condition():
    with pytest.raises(DescentConditionViolated):
        admissible_chains(P("21"), P("132"))
    with pytest.raises(DescentConditionViolated):
        separated_descent_constant(P("21"), P("132"), P("231"))


def test_separated_descent_constant_small():
    assert separated_descent_constant(P("21"), P("21"), P("312")) == 1
    assert separated_descent_constant(P("21"), P("21"), P("231")) == 0
    assert separated_descent_constant(P("21"), P("21"), P("21")) == 0


def test_separated_descent_constant_without_chains(monkeypatch):
    monkeypatch.setattr("pipedreams.schubert.admissible_chains", lambda p, r: ([], []))
    assert separated_descent_constant(P("21"), P("21"), P("231")) == 0
    with pytest.raises(NoAdmissibleChain):
        separated_descent_constant(P("21"), P("21"), P("312"))


def test_constant_is_independent_of_choices():
    p, r = P("132"), P("21")
    oracle = structure_constants(p, r)
    left, right = admissible_chains(p, r)
    assert left and right
    for s, expected in oracle.items():
        for D in all_bpds(s):
            for chain_p in left:
                for chain_r in right:
                    assert separated_descent_constant(p, r, s, D, chain_p, chain_r) == expected


@pytest.mark.slow
def test_constants_in_s4():
    report = verify_constants(4)
    assert report.ok, report.failures
