# -*- coding: utf-8 -*-
"""Silting

support tau-tilting posets built from Xi-compatibility.

A silting set is a maximal set of pairwise compatible indices, stored as
a tuple of indices in enumerate_xi order. T >= T' when Hom(X_a, X_b[1])
vanishes for every a in T and b in T'. Two sets sharing all but one
member are a mutation pair and form an edge of the Hasse quiver, drawn
from the larger set to the smaller one.

"""
from __future__ import division
import logging
from collections import defaultdict, namedtuple
from itertools import combinations
import numpy as np
import networkx as nx
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from .errors import BudgetError, CriterionError, UsageError
from .weak_order import (generator, hasse, identity, inversions, left_descents,
                         left_multiply, reduced_word)
from .xi import enumerate_xi, g_vector, hom_vanishes, vanishing_matrix

log = logging.getLogger(__name__)

DEFAULT_MAX_RANK = 5

PairReadout = namedtuple("PairReadout", ["modules", "shifted", "support"])

def _positions(xi):
    return {i: k for k, i in enumerate(xi)}

def maximal_compatible_sets(n, xi, vanish, usable=None, strict=True):
    """maximal cliques of the compatibility graph on xi.

    Parameters
    ----------
    n : int
        rank
    xi : list of tuple
        the labels, in the row order of vanish
    vanish : ndarray of bool
        vanish[a, b] iff Hom(X_a, X_b[1]) = 0
    usable : ndarray of bool
        optional mask of labels allowed as members
    strict : bool
        raise CriterionError on a maximal clique whose size is not n
        instead of skipping it

    Returns
    -------
    list of tuple
        silting sets sorted by the positions of their members

    """
    compat = vanish & vanish.T
    keep = [a for a in range(len(xi))
            if compat[a, a] and (usable is None or usable[a])]
    graph = nx.Graph()
    graph.add_nodes_from(keep)
    graph.add_edges_from((a, b) for a, b in combinations(keep, 2) if compat[a, b])
    found = []
    for clique in nx.find_cliques(graph):
        if len(clique) != n:
            if strict:
                raise CriterionError(
                    "maximal_compatible_sets: clique of size {} at rank {}: {}".format(
                        len(clique), n, [xi[a] for a in sorted(clique)]))
            continue
        found.append(tuple(sorted(clique)))
    found.sort()
    return [tuple(xi[a] for a in clique) for clique in found]

def enumerate_silting(n, max_rank=DEFAULT_MAX_RANK, direct=False):
    """all silting sets of rank n, by clique search over Xi"""
    if n < 1:
        raise UsageError("enumerate_silting: n must be at least 1, got {}".format(n))
    if n > max_rank:
        raise BudgetError(
            "enumerate_silting: rank {} is above the budget {}".format(n, max_rank))
    nodes = maximal_compatible_sets(n, enumerate_xi(n), vanishing_matrix(n, direct))
    log.info("enumerate_silting: %d silting sets at rank %d", len(nodes), n)
    return nodes

def silting_geq(T, T2, n, vanish=None):
    """T >= T2: Hom(X_a, X_b[1]) = 0 for all a in T, b in T2"""
    if vanish is None:
        return all(hom_vanishes(a, b, n) for a in T for b in T2)
    pos = _positions(enumerate_xi(n))
    return all(vanish[pos[a], pos[b]] for a in T for b in T2)

def order_matrix(xi, nodes, vanish):
    """order[a, b] iff nodes[a] >= nodes[b], from the vanishing matrix"""
    pos = _positions(xi)
    incidence = np.zeros((len(nodes), len(xi)), dtype=int)
    for a, node in enumerate(nodes):
        incidence[a, [pos[i] for i in node]] = 1
    failures = incidence @ (~vanish).astype(int) @ incidence.T
    return failures == 0

def mutation_edges(nodes, order):
    """Hasse edges from mutation pairs.

    Every set minus one member must be completed by exactly two silting
    sets; the pair is oriented from the larger to the smaller set.

    Returns
    -------
    list of (int, int)
        sorted (larger, smaller) node positions

    """
    groups = defaultdict(list)
    for a, node in enumerate(nodes):
        for member in node:
            groups[frozenset(node) - {member}].append(a)
    edges = []
    for key, group in groups.items():
        if len(group) != 2:
            raise CriterionError("mutation_edges: {} completions of {}".format(
                len(group), sorted(key)))
        a, b = group
        if order[a, b] and not order[b, a]:
            edges.append((a, b))
        elif order[b, a] and not order[a, b]:
            edges.append((b, a))
        else:
            raise CriterionError("mutation_edges: {} and {} are not strictly comparable".format(
                nodes[a], nodes[b]))
    return sorted(edges)

def hasse_by_reduction(order):
    """Hasse quiver of an order matrix by transitive reduction"""
    size = len(order)
    if np.any(order & order.T & ~np.eye(size, dtype=bool)):
        raise CriterionError("hasse_by_reduction: relation is not antisymmetric")
    strict = nx.DiGraph()
    strict.add_nodes_from(range(size))
    rows, cols = np.nonzero(order & ~np.eye(size, dtype=bool))
    strict.add_edges_from((int(a), int(b)) for a, b in zip(rows, cols))
    return nx.transitive_reduction(strict)

def is_connected(size, edges):
    if not edges:
        return size <= 1
    rows, cols = zip(*edges)
    adjacency = coo_matrix((np.ones(len(edges)), (rows, cols)), shape=(size, size))
    count, _ = connected_components(adjacency, directed=True, connection="weak")
    return count == 1


class SttiltPoset(object):
    """silting sets of one rank with their order and Hasse quiver.

    order[a, b] iff nodes[a] >= nodes[b]; graph has an edge a -> b when
    nodes[a] covers nodes[b].

    """
    def __init__(self, n, xi, nodes, order, graph):
        self.n = n
        self.xi = xi
        self.nodes = nodes
        self.index = {node: a for a, node in enumerate(nodes)}
        self.order = order
        self.graph = graph
        self.maximum = self.index.get(tuple((0, k, n + 1) for k in range(1, n + 1)))
        self.minimum = self.index.get(tuple((k,) for k in range(1, n + 1)))

    def __len__(self):
        return len(self.nodes)

    @property
    def edges(self):
        return sorted(self.graph.edges())

    def geq(self, a, b):
        return bool(self.order[a, b])

    def upper_covers(self, a):
        return sorted(self.graph.predecessors(a))

    def lower_covers(self, a):
        return sorted(self.graph.successors(a))

    def join(self, indices):
        """least upper bound of node positions, by intersecting upper sets"""
        indices = list(indices)
        bounds = np.flatnonzero(np.all(self.order[:, indices], axis=1))
        least = [c for c in bounds if np.all(self.order[bounds, c])]
        if len(least) != 1:
            raise CriterionError("join: {} least upper bounds for {}".format(
                len(least), [self.nodes[a] for a in indices]))
        return int(least[0])

    def interval(self, a, b):
        """positions c with nodes[b] >= nodes[c] >= nodes[a]"""
        return [int(c) for c in np.flatnonzero(self.order[b, :] & self.order[:, a])]

    def is_regular(self):
        return all(self.graph.in_degree(a) + self.graph.out_degree(a) == self.n
                   for a in self.graph.nodes())

def build_poset(n, max_rank=DEFAULT_MAX_RANK, direct=False, check_reduction=None):
    """support tau-tilting poset of rank n from the Xi criterion.

    Parameters
    ----------
    n : int
        rank
    max_rank : int
        largest rank accepted
    direct : bool
        passed to the criterion (mirrored pairs without relabelling)
    check_reduction : bool
        compare the mutation quiver with the transitive reduction of
        the order; defaults to n <= 3

    Returns
    -------
    SttiltPoset

    """
    xi = enumerate_xi(n)
    vanish = vanishing_matrix(n, direct)
    nodes = enumerate_silting(n, max_rank, direct)
    order = order_matrix(xi, nodes, vanish)
    edges = mutation_edges(nodes, order)
    if not is_connected(len(nodes), edges):
        raise CriterionError("build_poset: mutation graph at rank {} is disconnected".format(n))
    if check_reduction is None:
        check_reduction = n <= 3
    if check_reduction:
        reduced = set(hasse_by_reduction(order).edges())
        if reduced != set(edges):
            raise CriterionError(
                "build_poset: mutation edges differ from the Hasse quiver at rank {}".format(n))
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(nodes)))
    graph.add_edges_from(edges)
    log.info("build_poset: %d nodes and %d edges at rank %d", len(nodes), len(edges), n)
    return SttiltPoset(n, xi, nodes, order, graph)

def mutate(poset, a, member):
    """the other silting set containing nodes[a] without member"""
    node = poset.nodes[a]
    if member not in node:
        raise UsageError("mutate: {} is not a member of {}".format(member, node))
    rest = set(node) - {member}
    others = [b for b, other in enumerate(poset.nodes) if b != a and rest <= set(other)]
    if len(others) != 1:
        raise CriterionError("mutate: {} completions of {}".format(len(others) + 1, sorted(rest)))
    return others[0]

def atom(i, n):
    """the silting set of (X_(i-1,i,i+1), P_k[1] for k != i)"""
    members = [(k,) for k in range(1, n + 1) if k != i] + [(i - 1, i, i + 1)]
    pos = _positions(enumerate_xi(n))
    return tuple(sorted(members, key=pos.get))

def build_isomorphism(poset, lattice=None):
    """the order isomorphism rho from (S_{n+1}, <=) onto the poset.

    rho sends the identity to the minimum and s_i to the atom of
    X_(i-1,i,i+1). An element v of length l+1 is handled through its
    smallest left descent j, v = s_j w, and the leftmost letter i of the
    canonical word of w, w = s_i x. With w' = s_j x, either l(w') = l
    and rho(v) is the unique upper cover of rho(w) below
    rho(w) v rho(w'), or l(w') = l-2 and rho(v) is
    rho(s_i w') v rho(s_j w').

    Returns
    -------
    dict
        permutation -> node position

    """
    n = poset.n
    lattice = lattice or hasse(n)
    rho = {identity(n): poset.minimum}
    for i in range(1, n + 1):
        node = atom(i, n)
        if node not in poset.index:
            raise CriterionError("build_isomorphism: {} is not a silting set".format(node))
        rho[generator(i, n)] = poset.index[node]
    for level in lattice.levels[2:]:
        for v in level:
            j = left_descents(v)[0]
            w = left_multiply(j, v)[0]
            i = reduced_word(w)[0]
            x = left_multiply(i, w)[0]
            w2 = left_multiply(j, x)[0]
            if inversions(w2) == inversions(w):
                bound = poset.join([rho[w], rho[w2]])
                candidates = [c for c in poset.upper_covers(rho[w]) if poset.order[bound, c]]
            else:
                candidates = [poset.join([rho[left_multiply(i, w2)[0]],
                                          rho[left_multiply(j, w2)[0]]])]
            if len(candidates) != 1:
                raise CriterionError("build_isomorphism: {} candidates for {}".format(
                    len(candidates), v))
            rho[v] = candidates[0]
    if len(set(rho.values())) != len(poset.nodes) or len(rho) != len(poset.nodes):
        raise CriterionError("build_isomorphism: not a bijection at rank {}".format(n))
    log.info("build_isomorphism: rho defined on %d elements", len(rho))
    return rho

def verify_isomorphism(poset, rho, lattice, pairs=None):
    """compare u <= v with rho(v) >= rho(u).

    Parameters
    ----------
    pairs : iterable of (tuple, tuple)
        pairs to check; all ordered pairs when omitted

    Returns
    -------
    list of (tuple, tuple)
        pairs on which the two orders disagree

    """
    if pairs is None:
        pairs = ((u, v) for u in lattice.nodes for v in lattice.nodes)
    order = lattice.order
    failures = []
    for u, v in pairs:
        if bool(order[lattice.index[u], lattice.index[v]]) != poset.geq(rho[v], rho[u]):
            failures.append((u, v))
    return failures

def pair_readout(T, n):
    """split a silting set into module summands and shifted projectives.

    Returns
    -------
    PairReadout
        modules: non-singleton members; shifted: labels k of members
        (k,); support: the labels 1..n that are not shifted.

    """
    shifted = sorted(i[0] for i in T if len(i) == 1)
    modules = [i for i in T if len(i) > 1]
    support = [k for k in range(1, n + 1) if k not in shifted]
    return PairReadout(modules, shifted, support)

def g_vectors(T, n):
    """g-vectors of the members of T as rows of an integer matrix"""
    return np.array([g_vector(i, n) for i in T], dtype=int)

def interval_graph(poset, a, b):
    """undirected Hasse graph of the interval [a, b]"""
    return poset.graph.subgraph(poset.interval(a, b)).to_undirected()
