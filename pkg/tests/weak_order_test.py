# test tauweave.weak_order on small symmetric groups
#
# Lengths, canonical words, the Hasse quiver and the lattice operations
# are compared with breadth-first searches over covers.
#
from __future__ import division
import pytest
import numpy as np
from tauweave.errors import BudgetError, UsageError
from tauweave.weak_order import (check_parabolic_joins, exchange_drop, generator, hasse,
                                 identity, inverse, inversions, is_reduced,
                                 is_reversal_antiautomorphism, join, left_descents, left_multiply,
                                 leq, longest, longest_parabolic, meet, reduced_word,
                                 reduced_words, right_descents, upper_set, word_product)
from tauweave.samples import random_permutation, random_word

RANKS = [1, 2, 3, 4]
EDGES = {1: 1, 2: 6, 3: 36}

def setup_function(_):
    np.random.seed(0)

def test_identity_and_longest():
    assert identity(2) == (1, 2, 3)
    assert longest(2) == (3, 2, 1)
    assert inversions(longest(4)) == 10

def test_canonical_word():
    assert reduced_word((3, 1, 2)) == [2, 1]
    assert word_product([2, 1], 2) == (3, 1, 2)
    assert reduced_word(identity(3)) == []

def test_word_product_inverts_reduced_word():
    for n in RANKS:
        for _ in range(20):
            w = random_permutation(n)
            word = reduced_word(w)
            assert word_product(word, n) == w, "{} -> {}".format(w, word)
            assert len(word) == inversions(w)

def test_left_multiply():
    w, delta = left_multiply(1, identity(2))
    assert w == (2, 1, 3) and delta == 1
    assert left_multiply(1, w) == (identity(2), -1)
    with pytest.raises(UsageError):
        left_multiply(3, identity(2))

def test_is_reduced():
    assert is_reduced([1, 2, 1], 2)
    assert not is_reduced([1, 1], 2)
    assert not is_reduced([2, 1, 2, 1], 2)

def test_exchange_drop():
    for n in RANKS:
        for _ in range(20):
            word = random_word(n, 8)
            if is_reduced(word, n):
                continue
            k, j, shorter = exchange_drop(word, n)
            assert k < j and len(shorter) == len(word) - 2
            assert word_product(shorter, n) == word_product(word, n), \
                "exchange changed the product of {}".format(word)
    assert exchange_drop([1, 1], 2)[2] == []
    k, j, shorter = exchange_drop([2, 1, 2, 1], 2)
    assert len(shorter) == 2 and word_product(shorter, 2) == word_product([2, 1, 2, 1], 2)
    assert exchange_drop(exchange_drop([1, 2, 2, 1], 2)[2], 2)[2] == []
    with pytest.raises(UsageError):
        exchange_drop([1, 2, 1], 2)

def test_reduced_words():
    assert reduced_words(longest(2)) == [[1, 2, 1], [2, 1, 2]]
    assert len(reduced_words(longest(3))) == 16

def test_hasse_sizes():
    for n, edges in EDGES.items():
        lattice = hasse(n)
        assert len(lattice) == np.prod(range(1, n + 2))
        assert lattice.graph.number_of_edges() == edges, \
            "expected {} covers at rank {}, got {}".format(
                edges, n, lattice.graph.number_of_edges())

def test_hasse_regular():
    for n in RANKS:
        lattice = hasse(n)
        for w in lattice.nodes:
            degree = lattice.graph.in_degree(w) + lattice.graph.out_degree(w)
            assert degree == n, "{} has degree {}".format(w, degree)

def test_hasse_errors():
    with pytest.raises(UsageError):
        hasse(0)
    with pytest.raises(BudgetError):
        hasse(4, budget_nodes=100)

def test_order_matrix_matches_leq():
    lattice = hasse(3)
    for a, u in enumerate(lattice.nodes):
        for b, v in enumerate(lattice.nodes):
            assert bool(lattice.order[a, b]) == leq(u, v), "{} <= {}".format(u, v)

def test_extremes():
    n = 3
    for w in hasse(n).nodes:
        assert leq(identity(n), w) and leq(w, longest(n))
    assert upper_set(longest(n)) == frozenset([longest(n)])

def test_join_meet():
    lattice = hasse(3)
    for u in lattice.nodes:
        for v in lattice.nodes:
            assert lattice.join([u, v]) == join([u, v])
            assert lattice.meet([u, v]) == meet([u, v])
    assert join([generator(1, 2), generator(2, 2)]) == longest(2)

def test_left_descents():
    assert left_descents(identity(3)) == []
    assert left_descents(longest(3)) == [1, 2, 3]
    w = (3, 1, 2)
    assert left_descents(w) == [2] and right_descents(w) == [1]
    for v in hasse(3).nodes:
        assert right_descents(v) == left_descents(inverse(v))

def test_longest_parabolic():
    assert longest_parabolic([1, 2], 3) == (3, 2, 1, 4)
    assert longest_parabolic([1, 3], 3) == (2, 1, 4, 3)
    assert longest_parabolic([1, 2, 3], 3) == longest(3)

def test_parabolic_identities():
    for n in [1, 2, 3]:
        failures = check_parabolic_joins(n)
        assert failures == [], "rank {}: {}".format(n, failures[:3])

def test_reversal():
    for n in [1, 2, 3]:
        assert is_reversal_antiautomorphism(n)

def test_leq_mismatch():
    with pytest.raises(UsageError):
        leq(identity(2), identity(3))
