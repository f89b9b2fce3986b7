# test tauweave.models: presentations of the model algebras, selectors
# and the ideal model of the preprojective algebra
#
import pytest
from tauweave.algebra import build_algebra
from tauweave.errors import BudgetError, UsageError
from tauweave.models import (gamma, ideal_product, idempotent_ideal, lambda_m, mizuno_map,
                             mizuno_node_map, preprojective, presentation_from_selector,
                             tau_rigid_count, whole_algebra, word_ideal)
from tauweave.silting import build_isomorphism, build_poset
from tauweave.weak_order import identity, longest

PI2 = build_algebra(preprojective(2))

def test_preprojective_presentation():
    assert len(preprojective(2).relations) == 2
    p = preprojective(3)
    assert len(p.relations) == 3
    assert sorted(len(r) for r in p.relations) == [1, 1, 2]
    one = preprojective(1)
    assert one.arrows == [] and one.relations == []
    with pytest.raises(UsageError):
        preprojective(0)

def test_lambda_presentation():
    assert len(lambda_m(2, 1).arrows) == 2
    p = lambda_m(3, 2)
    assert len(p.loops()) == 3
    assert build_algebra(lambda_m(2, 1)).dim == build_algebra(preprojective(2)).dim

def test_gamma_presentation():
    p = gamma()
    assert p.n == 2 and len(p.loops()) == 4 and len(p.relations) == 14

def test_selectors():
    assert presentation_from_selector("preprojective:3").n == 3
    assert presentation_from_selector("lambda:3:2").name == "lambda:3:2"
    assert presentation_from_selector("gamma").n == 2
    assert presentation_from_selector("oriented:4").n == 4
    for bad in ["bogus", "preprojective:x", "lambda:3", "gamma:2", "file:/no/such/file"]:
        with pytest.raises(UsageError):
            presentation_from_selector(bad)

def test_ideals():
    whole = whole_algebra(PI2)
    assert whole.dim == 4 and whole.is_two_sided()
    I1 = idempotent_ideal(PI2, 1)
    assert I1.dim == 3 and I1.is_two_sided()
    assert ideal_product(PI2, I1, whole) == I1
    assert word_ideal(PI2, []) == whole

def test_braid_relation():
    left = word_ideal(PI2, [1, 2, 1])
    right = word_ideal(PI2, [2, 1, 2])
    assert left == right
    assert left.dim == 0

def test_mizuno_rank_two():
    model = mizuno_map(2)
    assert len(set(model.ideals.values())) == 6
    assert model.ideals[identity(2)].dim == 4
    poset = build_poset(2)
    mapping = mizuno_node_map(model, poset)
    assert sorted(mapping.values()) == list(range(6))
    assert mapping[identity(2)] == poset.minimum
    assert mapping[longest(2)] == poset.maximum
    rho = build_isomorphism(poset)
    assert set(rho.values()) == set(mapping.values())

def test_mizuno_budget():
    with pytest.raises(BudgetError):
        mizuno_map(4)

def test_tau_rigid_count():
    assert tau_rigid_count(2) == 4
