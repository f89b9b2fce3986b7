# -*- coding: utf-8 -*-
"""Weak order

the symmetric group S_{n+1} under the left weak order.

A permutation is a tuple in one-line notation, ``w[a - 1] == w(a)``.
The generator s_i acts on the left, (s_i w)(a) = s_i(w(a)), so it swaps
the values i and i+1. A word lists its letters leftmost-applied-last:
[i_l, ..., i_1] stands for s_{i_l} ... s_{i_1}.

"""
from __future__ import division
import logging
from functools import lru_cache
from itertools import permutations
from math import factorial
import numpy as np
import networkx as nx
from .errors import BudgetError, UsageError

log = logging.getLogger(__name__)

DEFAULT_BUDGET_NODES = factorial(8)

def identity(n):
    """identity element of S_{n+1}"""
    return tuple(range(1, n + 2))

def longest(n):
    """the longest element w_0 = (n+1, n, ..., 1) of S_{n+1}"""
    return tuple(range(n + 1, 0, -1))

def rank(w):
    """n, for w in S_{n+1}"""
    return len(w) - 1

def check_permutation(w):
    """return w as a tuple, or raise UsageError if it is not a bijection
    of 1..len(w)"""
    if sorted(w) != list(range(1, len(w) + 1)):
        raise UsageError(
            "check_permutation: not a permutation of 1..{}: {}".format(len(w), w))
    return tuple(w)

def compose(u, v):
    """the product u v, i.e. the permutation a -> u(v(a))"""
    return tuple(u[b - 1] for b in v)

def inverse(w):
    inv = [0] * len(w)
    for a, b in enumerate(w, 1):
        inv[b - 1] = a
    return tuple(inv)

def inversions(w):
    """count the inversions of a permutation.

    Parameters
    ----------
    w : tuple of int
        permutation in one-line notation

    Returns
    -------
    int
        #{(a, b) : a < b, w(a) > w(b)}, which is the length of w.

    """
    w = np.asarray(w)
    return int(np.count_nonzero(np.triu(w[:, None] > w[None, :], 1)))

length = inversions

def left_multiply(i, w):
    """multiply w on the left by the generator s_i.

    Parameters
    ----------
    i : int
        generator index, 1 <= i <= n
    w : tuple of int
        permutation of 1..n+1

    Returns
    -------
    (tuple of int, int)
        s_i w and the change in length, +1 when w^-1(i) < w^-1(i+1),
        otherwise -1.

    """
    n = rank(w)
    if not 1 <= i <= n:
        raise UsageError(
            "left_multiply: generator index {} outside 1..{}".format(i, n))
    pos = inverse(w)
    delta = 1 if pos[i - 1] < pos[i] else -1
    swap = {i: i + 1, i + 1: i}
    return tuple(swap.get(b, b) for b in w), delta

def generator(i, n):
    """the simple transposition s_i of S_{n+1}"""
    return left_multiply(i, identity(n))[0]

def left_descents(w):
    """generators i with l(s_i w) < l(w), ascending"""
    pos = inverse(w)
    return [i for i in range(1, len(w)) if pos[i - 1] > pos[i]]

def right_descents(w):
    """generators i with l(w s_i) < l(w), ascending"""
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]

def word_product(word, n):
    """the permutation s_{i_l} ... s_{i_1} of S_{n+1} for word [i_l, ..., i_1]"""
    w = identity(n)
    for i in reversed(list(word)):
        w = left_multiply(i, w)[0]
    return w

def is_reduced(word, n):
    """True when the word has as many letters as its product has inversions"""
    return len(word) == inversions(word_product(word, n))

def exchange_drop(word, n):
    """shorten a non-reduced word by two letters, keeping its product.

    The word is scanned from its rightmost letter. At the first letter
    s_a whose multiplication lowers the length of the (reduced) suffix
    product u, the exchange condition provides a letter of u whose
    deletion gives s_a u; both letters are dropped.

    Parameters
    ----------
    word : sequence of int
        letters in 1..n, not reduced
    n : int
        rank

    Returns
    -------
    (int, int, list of int)
        zero-based positions k < j of the deleted letters, and the
        shortened word.

    """
    word = list(word)
    if is_reduced(word, n):
        raise UsageError("exchange_drop: word {} is already reduced".format(word))
    suffix = identity(n)
    for k in range(len(word) - 1, -1, -1):
        product, delta = left_multiply(word[k], suffix)
        if delta < 0:
            break
        suffix = product
    for j in range(k + 1, len(word)):
        if word_product(word[k + 1:j] + word[j + 1:], n) == product:
            return k, j, word[:k] + word[k + 1:j] + word[j + 1:]
    raise AssertionError("exchange_drop: no exchange letter in {}".format(word))

def reduced_word(w):
    """canonical reduced word of w.

    At each step the smallest left descent i is taken, so that
    w = s_i w' with l(w') = l(w) - 1, and i becomes the next letter
    from the left.

    Returns
    -------
    list of int

    """
    w = check_permutation(w)
    word = []
    descents = left_descents(w)
    while descents:
        word.append(descents[0])
        w = left_multiply(descents[0], w)[0]
        descents = left_descents(w)
    return word

@lru_cache(maxsize=None)
def _reduced_words(w):
    descents = left_descents(w)
    if not descents:
        return ((),)
    return tuple((i,) + rest for i in descents
                 for rest in _reduced_words(left_multiply(i, w)[0]))

def reduced_words(w):
    """every reduced word of w, in lexicographic order"""
    return [list(word) for word in _reduced_words(check_permutation(w))]

def leq(w, v):
    """left weak order: w <= v iff l(v) = l(w) + l(v w^-1)"""
    if len(w) != len(v):
        raise UsageError(
            "leq: order mismatch, S_{} against S_{}".format(len(w), len(v)))
    return inversions(v) == inversions(w) + inversions(compose(v, inverse(w)))

@lru_cache(maxsize=8192)
def _closure(w, direction):
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            for i in range(1, len(u)):
                v, delta = left_multiply(i, u)
                if delta == direction and v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(seen)

def upper_set(w):
    """all v with w <= v, by breadth-first search over covers (cached)"""
    return _closure(tuple(w), +1)

def lower_set(w):
    """all v with v <= w"""
    return _closure(tuple(w), -1)

def interval(u, v):
    """the interval [u, v] of the weak order"""
    return upper_set(u) & lower_set(v)

def join(elements):
    """least upper bound of a nonempty set of permutations.

    Computed as the shortest element of the intersection of the upper
    sets, which in a lattice is below every other member.

    """
    elements = [check_permutation(w) for w in elements]
    if not elements:
        raise UsageError("join: empty set")
    common = frozenset.intersection(*[upper_set(w) for w in elements])
    best = min(common, key=lambda u: (inversions(u), u))
    assert upper_set(best) == common
    return best

def meet(elements):
    """greatest lower bound of a nonempty set of permutations"""
    elements = [check_permutation(w) for w in elements]
    if not elements:
        raise UsageError("meet: empty set")
    common = frozenset.intersection(*[lower_set(w) for w in elements])
    best = max(common, key=lambda u: (inversions(u), u))
    assert lower_set(best) == common
    return best

def _blocks(J):
    run = []
    for j in sorted(J):
        if run and j != run[-1] + 1:
            yield run
            run = []
        run.append(j)
    if run:
        yield run

def longest_parabolic(J, n):
    """w_0(J), the longest element of the subgroup generated by s_j, j in J.

    Each maximal run a..b of consecutive indices in J reverses the
    positions a..b+1 of the identity.

    """
    w = list(identity(n))
    for block in _blocks(J):
        lo, hi = block[0] - 1, block[-1] + 1
        w[lo:hi] = reversed(w[lo:hi])
    return tuple(w)

def parabolic_subgroup(J, n):
    """the subgroup <s_j | j in J> of S_{n+1}"""
    seen = {identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for u in frontier:
            for j in J:
                v = left_multiply(j, u)[0]
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(seen)

def parabolic_interval_check(J, n):
    """True when [1, w_0(J)] equals <s_j | j in J> elementwise"""
    J = sorted(set(J))
    if not J:
        raise UsageError("parabolic_interval_check: J must be nonempty")
    return interval(identity(n), longest_parabolic(J, n)) == parabolic_subgroup(J, n)

def check_parabolic_joins(n, lattice=None):
    """check the three parabolic identities on every nonempty J in 1..n.

    (1) the join of {s_j : j in J} is w_0(J); (2) [1, w_0(J)] is the
    parabolic subgroup; (3) whenever w <= s_j w for every j in J, the
    join of {s_j w : j in J} is w_0(J) w.

    Parameters
    ----------
    n : int
        rank
    lattice : WeakOrderLattice
        optional prebuilt lattice; its order matrix makes (3) fast.

    Returns
    -------
    list of str
        descriptions of the failures, empty when all identities hold.

    """
    lattice = lattice or hasse(n)
    failures = []
    subsets = range(1, 2 ** n)
    for mask in subsets:
        J = [j for j in range(1, n + 1) if mask >> (j - 1) & 1]
        w0J = longest_parabolic(J, n)
        if join([generator(j, n) for j in J]) != w0J:
            failures.append("join of generators {} is not w_0(J)".format(J))
        if not parabolic_interval_check(J, n):
            failures.append("[1, w_0({})] is not the parabolic subgroup".format(J))
        for w in lattice.nodes:
            lifted = [left_multiply(j, w) for j in J]
            if all(delta > 0 for _, delta in lifted):
                if lattice.join([v for v, _ in lifted]) != compose(w0J, w):
                    failures.append("join of s_j {} for J={} is not w_0(J) w".format(w, J))
    return failures

def is_reversal_antiautomorphism(n):
    """check that w -> w w_0 is an order reversing bijection of S_{n+1}"""
    w0 = longest(n)
    nodes = list(permutations(range(1, n + 2)))
    images = set(compose(w, w0) for w in nodes)
    if len(images) != len(nodes):
        return False
    return all(leq(u, v) == leq(compose(v, w0), compose(u, w0))
               for u in nodes for v in nodes)


class WeakOrderLattice(object):
    """Hasse quiver of (S_{n+1}, <=).

    Nodes are grouped by length; the graph has an edge w -> v when v
    covers w, i.e. v = s_i w with l(v) = l(w) + 1.

    """
    def __init__(self, n, levels, graph):
        self.n = n
        self.levels = levels
        self.nodes = [w for level in levels for w in level]
        self.index = {w: k for k, w in enumerate(self.nodes)}
        self.lengths = np.array([inversions(w) for w in self.nodes])
        self.graph = graph
        self._order = None

    def __len__(self):
        return len(self.nodes)

    @property
    def edges(self):
        return sorted(self.graph.edges(), key=lambda e: (self.index[e[0]], self.index[e[1]]))

    def predecessors(self, w):
        """direct predecessors: the elements w covers"""
        return sorted(self.graph.predecessors(w), key=self.index.get)

    def successors(self, w):
        """direct successors: the elements covering w"""
        return sorted(self.graph.successors(w), key=self.index.get)

    @property
    def order(self):
        """boolean matrix, order[a, b] iff nodes[a] <= nodes[b]"""
        if self._order is None:
            size = len(self.nodes)
            order = np.eye(size, dtype=bool)
            # nodes are sorted by length, so covers are filled in first
            for a in range(size - 1, -1, -1):
                for v in self.graph.successors(self.nodes[a]):
                    order[a] |= order[self.index[v]]
            self._order = order
        return self._order

    def join(self, elements):
        """least upper bound using the order matrix"""
        rows = [self.index[tuple(w)] for w in elements]
        bounds = np.flatnonzero(np.all(self.order[rows, :], axis=0))
        best = bounds[np.argmin(self.lengths[bounds])]
        assert np.all(self.order[best, bounds])
        return self.nodes[best]

    def meet(self, elements):
        """greatest lower bound using the order matrix"""
        cols = [self.index[tuple(w)] for w in elements]
        bounds = np.flatnonzero(np.all(self.order[:, cols], axis=1))
        best = bounds[np.argmax(self.lengths[bounds])]
        assert np.all(self.order[bounds, best])
        return self.nodes[best]

def hasse(n, budget_nodes=DEFAULT_BUDGET_NODES):
    """build the Hasse quiver of the left weak order on S_{n+1}.

    Parameters
    ----------
    n : int
        rank, n >= 1
    budget_nodes : int
        refuse to enumerate more than this many permutations

    Returns
    -------
    WeakOrderLattice

    """
    if n < 1:
        raise UsageError("hasse: n must be at least 1, got {}".format(n))
    size = factorial(n + 1)
    if size > budget_nodes:
        raise BudgetError(
            "hasse: S_{} has {} elements, budget is {}".format(n + 1, size, budget_nodes))
    levels = [[] for _ in range(n * (n + 1) // 2 + 1)]
    for w in permutations(range(1, n + 2)):
        levels[inversions(w)].append(w)
    levels = [sorted(level) for level in levels]
    graph = nx.DiGraph()
    for level in levels:
        graph.add_nodes_from(level)
    for level in levels:
        for w in level:
            for i in range(1, n + 1):
                v, delta = left_multiply(i, w)
                if delta > 0:
                    graph.add_edge(w, v)
    log.info("hasse: S_%d has %d elements and %d covers",
             n + 1, graph.number_of_nodes(), graph.number_of_edges())
    return WeakOrderLattice(n, levels, graph)
