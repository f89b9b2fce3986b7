# test tauweave.modules over the preprojective algebras of rank 2 and 3
#
# The homotopy computations are compared with the combinatorial
# criterion on every ordered pair at rank 2; rank 3 and the other model
# algebras are covered by `tauweave verify`.
#
import pytest
import numpy as np
from sympy import Matrix
from tauweave.algebra import build_algebra
from tauweave.errors import UsageError, VerificationError
from tauweave.models import preprojective
from tauweave.modules import (ConcreteTwoTerm, RightModule, SupportPair, cyclic_quotient_module,
                              direct_sum, endomorphism_dimension, homotopy_vanishes,
                              is_local_endomorphism, minimal_presentation, oracle_poset,
                              oracle_vanishing_matrix, projective_module, realize, sum_complexes,
                              support_tau_tilting_order, validate_support_pair)
from tauweave.silting import build_poset
from tauweave.xi import enumerate_xi, vanishing_matrix

PI2 = build_algebra(preprojective(2))
PI3 = build_algebra(preprojective(3))

def test_projectives():
    P1 = projective_module(PI2, 1)
    assert P1.dim == 2 and P1.support() == [1, 2]
    assert P1.relations_vanish()
    assert projective_module(PI3, 2).dim == 4

def test_cyclic_quotients():
    S1 = cyclic_quotient_module(PI2, 1, [1])
    assert S1.dim == 1 and S1.support() == [1]
    M = cyclic_quotient_module(PI3, 1, [1, 2])
    assert M.dim == 2 and M.support() == [1, 2]
    assert M.relations_vanish()
    with pytest.raises(UsageError):
        cyclic_quotient_module(PI2, 3, [1])

def test_direct_sum():
    M = direct_sum(PI3, [projective_module(PI3, 1), cyclic_quotient_module(PI3, 2, [2])])
    assert M.dim == 4
    assert M.dims[2] == 2
    assert M.relations_vanish()

def test_action_shape_checked():
    action = {"a1": Matrix([[1]]), "a1*": Matrix([[1, 0]])}
    with pytest.raises(UsageError):
        RightModule(PI2, {1: 1, 2: 1}, action)

def test_simple_presentation():
    X = minimal_presentation(PI2, cyclic_quotient_module(PI2, 1, [1]), tau_rigid=True)
    assert X.minus_one == [2] and X.zero == [1]
    assert list(X.g_vector(2)) == [1, -1]

def test_cyclic_presentation():
    X = minimal_presentation(PI3, cyclic_quotient_module(PI3, 1, [1, 2]), tau_rigid=True)
    assert X.minus_one == [3] and X.zero == [1]

def test_projective_presentation():
    X = minimal_presentation(PI3, projective_module(PI3, 2))
    assert X.minus_one == [] and X.zero == [2]

def test_realize():
    X = realize(PI2, (0, 1, 2))
    assert X.minus_one == [2] and X.zero == [1]
    assert X.differential == {(0, 0): PI2.path(("a1",))}
    Y = realize(PI3, (0, 1, 2, 3, 4))
    assert Y.minus_one == [2] and Y.zero == [1, 3]
    assert len(Y.differential) == 2

def test_oracle_matches_criterion():
    oracle = oracle_vanishing_matrix(PI2)
    criterion = vanishing_matrix(2)
    xi = enumerate_xi(2)
    for a, b in zip(*np.nonzero(oracle != criterion)):
        pytest.fail("criterion and oracle disagree on {} {}".format(xi[a], xi[b]))

def test_stalks_vanish():
    P = ConcreteTwoTerm.stalk([1, 2])
    for i in enumerate_xi(2):
        assert homotopy_vanishes(PI2, P, realize(PI2, i))

def test_indecomposable():
    for A in [PI2, PI3]:
        for i in enumerate_xi(A.n):
            assert is_local_endomorphism(A, realize(A, i)), "X_{} over Pi_{}".format(i, A.n)

def test_decomposable():
    X = sum_complexes([realize(PI2, (1,)), realize(PI2, (2,))])
    assert endomorphism_dimension(PI2, X) == 4
    assert not is_local_endomorphism(PI2, X)

def test_support_pairs():
    full = SupportPair([projective_module(PI2, 1), projective_module(PI2, 2)], [])
    empty = SupportPair([], [1, 2])
    assert support_tau_tilting_order(PI2, full, empty)
    assert not support_tau_tilting_order(PI2, empty, full)
    assert support_tau_tilting_order(PI2, full, full)
    # the two atoms (S_1, P_2) and (S_2, P_1) are incomparable
    first = SupportPair([cyclic_quotient_module(PI2, 1, [1])], [2])
    second = SupportPair([cyclic_quotient_module(PI2, 2, [2])], [1])
    assert not support_tau_tilting_order(PI2, first, second)
    assert not support_tau_tilting_order(PI2, second, first)
    S = validate_support_pair(PI2, empty)
    assert S.minus_one == [1, 2] and S.zero == []

def test_bad_support_pairs():
    with pytest.raises(VerificationError):
        validate_support_pair(PI2, SupportPair([projective_module(PI2, 1)], []))
    with pytest.raises(VerificationError):
        validate_support_pair(PI2, SupportPair([projective_module(PI2, 1)], [1]))

def test_oracle_poset():
    oracle = oracle_poset(PI2)
    criterion = build_poset(2)
    assert oracle.nodes == criterion.nodes
    assert np.array_equal(oracle.order, criterion.order)
    assert set(oracle.edges) == set(criterion.edges)
