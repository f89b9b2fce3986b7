# test tauweave.silting: silting sets from compatibility cliques, the
# mutation quiver and the isomorphism rho from the weak order
#
from __future__ import division
from math import factorial
import pytest
import numpy as np
import networkx as nx
from tauweave.errors import BudgetError, UsageError
from tauweave.silting import (atom, build_isomorphism, build_poset, enumerate_silting,
                              g_vectors, hasse_by_reduction, interval_graph, mutate,
                              pair_readout, silting_geq, verify_isomorphism)
from tauweave.weak_order import generator, hasse, identity, longest
from tauweave.samples import random_pairs

RANKS = [1, 2, 3]

def setup_function(_):
    np.random.seed(0)

def test_node_counts():
    for n in RANKS + [4]:
        poset = build_poset(n)
        assert len(poset) == factorial(n + 1), "rank {}: {} nodes".format(n, len(poset))
        assert poset.is_regular()
        assert len(poset.edges) == n * factorial(n + 1) // 2

def test_budget():
    with pytest.raises(BudgetError):
        enumerate_silting(6, max_rank=5)

def test_extremes():
    for n in RANKS:
        poset = build_poset(n)
        assert poset.maximum is not None and poset.minimum is not None
        top, bottom = poset.maximum, poset.minimum
        assert all(poset.geq(top, a) and poset.geq(a, bottom) for a in range(len(poset)))
        assert pair_readout(poset.nodes[bottom], n).support == []
        assert pair_readout(poset.nodes[top], n).shifted == []

def test_g_vectors_form_a_basis():
    for n in RANKS:
        for node in build_poset(n).nodes:
            g = g_vectors(node, n)
            assert g.shape == (n, n)
            assert abs(round(np.linalg.det(g))) == 1, "{} is not unimodular".format(node)

def test_order_against_pairs():
    n = 2
    poset = build_poset(n)
    for a, T in enumerate(poset.nodes):
        for b, T2 in enumerate(poset.nodes):
            assert poset.geq(a, b) == silting_geq(T, T2, n)

def test_hasse_is_transitive_reduction():
    poset = build_poset(3)
    assert set(hasse_by_reduction(poset.order).edges()) == set(poset.edges)

def test_mutation():
    n = 3
    poset = build_poset(n)
    undirected = poset.graph.to_undirected()
    for a, node in enumerate(poset.nodes):
        for member in node:
            b = mutate(poset, a, member)
            assert undirected.has_edge(a, b), "{} and {} are not neighbours".format(a, b)
            assert mutate(poset, b, (set(poset.nodes[b]) - set(node)).pop()) == a
    with pytest.raises(UsageError):
        mutate(poset, poset.minimum, (0, 1, 4))

def test_rho():
    for n in RANKS:
        poset = build_poset(n)
        lattice = hasse(n)
        rho = build_isomorphism(poset, lattice)
        assert rho[identity(n)] == poset.minimum
        assert rho[longest(n)] == poset.maximum
        assert rho[generator(1, n)] == poset.index[atom(1, n)]
        assert verify_isomorphism(poset, rho, lattice) == []

def test_rho_sampled():
    n = 4
    poset = build_poset(n)
    lattice = hasse(n)
    rho = build_isomorphism(poset, lattice)
    assert verify_isomorphism(poset, rho, lattice, random_pairs(lattice.nodes, 500)) == []

def test_atom_join_is_top():
    poset = build_poset(2)
    rho = build_isomorphism(poset)
    assert poset.join([rho[generator(1, 2)], rho[generator(2, 2)]]) == poset.maximum

def test_interval_shapes():
    n = 3
    poset = build_poset(n)
    rho = build_isomorphism(poset)
    for i, j, size in [(1, 2, 6), (2, 3, 6), (1, 3, 4)]:
        top = poset.join([rho[generator(i, n)], rho[generator(j, n)]])
        graph = interval_graph(poset, poset.minimum, top)
        assert nx.is_isomorphic(graph, nx.cycle_graph(size)), \
            "interval of s_{} v s_{} is not a {}-cycle".format(i, j, size)
