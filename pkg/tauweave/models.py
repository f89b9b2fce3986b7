# -*- coding: utf-8 -*-
"""Models

presentations of the model algebras and the ideal model of the support
tau-tilting poset of the preprojective algebra.

Arrow names: a{i}: i -> i+1 and a{i}*: i+1 -> i on the double line,
loops l{i} (and l{i}' for gamma).

"""
from __future__ import division
import logging
from collections import namedtuple
from sympy import Rational
from .algebra import DEFAULT_DEGREE_CAP, as_matrix, build_algebra, span_rank
from .errors import BudgetError, UsageError, VerificationError
from .modules import (SupportPair, minimal_presentation, prepare_pair,
                      submodule_of_projective, support_tau_tilting_order)
from .quiver import QuiverPresentation, read_presentation
from .silting import g_vectors
from .weak_order import compose, hasse, longest, reduced_word, reduced_words

log = logging.getLogger(__name__)

MIZUNO_MAX_RANK = 3

MizunoModel = namedtuple("MizunoModel", ["algebra", "lattice", "ideals", "pairs"])
MizunoModel.__doc__ = """ideals I_w of the preprojective algebra.

ideals maps w to I_w; pairs maps w to the prepared support tau-tilting
pair of I_{w w_0}.
"""

def _double_line(n):
    arrows = [("a{}".format(i), i, i + 1) for i in range(1, n)]
    arrows += [("a{}*".format(i), i + 1, i) for i in range(1, n)]
    return arrows

def preprojective(n):
    """Pi_n: the double line modulo the vertexwise parts of
    sum(a* a - a a*)"""
    if n < 1:
        raise UsageError("preprojective: n must be at least 1, got {}".format(n))
    relations = []
    for k in range(1, n + 1):
        terms = []
        if k > 1:
            terms.append((1, ("a{}*".format(k - 1), "a{}".format(k - 1))))
        if k < n:
            terms.append((-1, ("a{}".format(k), "a{}*".format(k))))
        if terms:
            relations.append(terms)
    return QuiverPresentation(n, _double_line(n), relations, name="preprojective:{}".format(n))

def lambda_m(n, m):
    """the double line with loops l_i, l_i^m = 0 and every mixed length
    two path zero; m = 1 has no loops"""
    if n < 1 or m < 1:
        raise UsageError("lambda_m: need n, m >= 1, got {} and {}".format(n, m))
    arrows = _double_line(n)
    relations = []
    if m >= 2:
        arrows += [("l{}".format(i), i, i) for i in range(1, n + 1)]
        relations += [[(1, ("l{}".format(i),) * m)] for i in range(1, n + 1)]
    for i in range(1, n):
        a, b = "a{}".format(i), "a{}*".format(i)
        relations += [[(1, (a, b))], [(1, (b, a))]]
        if m >= 2:
            li, lj = "l{}".format(i), "l{}".format(i + 1)
            relations += [[(1, (li, a))], [(1, (lj, b))], [(1, (a, lj))], [(1, (b, li))]]
    return QuiverPresentation(n, arrows, relations, name="lambda:{}:{}".format(n, m))

def gamma():
    """the two vertex algebra with arrows al: 1 -> 2, be: 2 -> 1 and two
    loops at each vertex"""
    arrows = [("al", 1, 2), ("be", 2, 1),
              ("l1", 1, 1), ("l1'", 1, 1), ("l2", 2, 2), ("l2'", 2, 2)]
    relations = [
        [(1, ("al", "be", "al", "be"))],
        [(1, ("be", "al", "be", "al"))],
        [(1, ("l1", "al")), (-1, ("al", "l2")), (-1, ("al", "l2'"))],
        [(1, ("l1'", "al")), (-1, ("al", "l2'"))],
        [(1, ("l2", "be")), (-1, ("be", "l1'"))],
        [(1, ("l2'", "be")), (-1, ("be", "l1"))],
    ]
    for i in (1, 2):
        l, lp = "l{}".format(i), "l{}'".format(i)
        relations += [[(1, (l, l))], [(1, (lp, lp))], [(1, (l, lp))], [(1, (lp, l))]]
    return QuiverPresentation(2, arrows, relations, name="gamma")

def oriented_line(n):
    """path algebra of 1 -> 2 -> ... -> n"""
    if n < 1:
        raise UsageError("oriented_line: n must be at least 1, got {}".format(n))
    arrows = [("a{}".format(i), i, i + 1) for i in range(1, n)]
    return QuiverPresentation(n, arrows, name="oriented:{}".format(n))

def radical_square_zero_double(n):
    """the double line with every path of length two set to zero"""
    if n < 1:
        raise UsageError("radical_square_zero_double: n must be at least 1, got {}".format(n))
    arrows = _double_line(n)
    relations = [[(1, (a[0], b[0]))] for a in arrows for b in arrows if a[2] == b[1]]
    return QuiverPresentation(n, arrows, relations, name="radical-square-zero:{}".format(n))

def _int_args(selector, args, count):
    if len(args) != count:
        raise UsageError("presentation_from_selector: {} needs {} integer(s)".format(
            selector, count))
    try:
        return [int(x) for x in args]
    except ValueError:
        raise UsageError("presentation_from_selector: bad integer in {}".format(selector))

def presentation_from_selector(selector):
    """QuiverPresentation for preprojective:n, lambda:n:m, gamma,
    oriented:n, radical-square-zero:n or file:<path>"""
    kind, _, rest = selector.partition(":")
    args = rest.split(":") if rest else []
    if kind == "preprojective":
        return preprojective(*_int_args(selector, args, 1))
    if kind == "lambda":
        return lambda_m(*_int_args(selector, args, 2))
    if kind == "gamma" and not args:
        return gamma()
    if kind == "oriented":
        return oriented_line(*_int_args(selector, args, 1))
    if kind == "radical-square-zero":
        return radical_square_zero_double(*_int_args(selector, args, 1))
    if kind == "file" and rest:
        try:
            return read_presentation(rest)
        except (IOError, OSError) as e:
            raise UsageError("presentation_from_selector: cannot read {}: {}".format(rest, e))
    raise UsageError("presentation_from_selector: unknown algebra {!r}".format(selector))

def algebra_from_selector(selector, degree_cap=DEFAULT_DEGREE_CAP):
    return build_algebra(presentation_from_selector(selector), degree_cap)


class TwoSidedIdeal(object):
    """an ideal of A stored by the reduced row echelon form of its basis"""

    def __init__(self, A, vectors):
        self.A = A
        vectors = [v for v in vectors if v]
        self.basis = []
        if vectors:
            reduced, pivots = as_matrix(vectors, range(A.dim)).rref()
            self.basis = [{q: reduced[k, q] for q in range(A.dim) if reduced[k, q] != 0}
                          for k in range(len(pivots))]
        self.key = tuple(tuple(sorted(v.items())) for v in self.basis)

    def __repr__(self):
        return "TwoSidedIdeal(dim={})".format(self.dim)

    def __eq__(self, other):
        return isinstance(other, TwoSidedIdeal) and self.key == other.key

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key)

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, vec):
        if not vec:
            return True
        return span_rank(self.basis + [vec], range(self.A.dim)) == self.dim

    def is_two_sided(self):
        units = [{k: Rational(1)} for k in range(self.A.dim)]
        return all(self.contains(self.A.multiply(u, v)) and self.contains(self.A.multiply(v, u))
                   for u in units for v in self.basis)

    def right_summand(self, i):
        """e_i I as a right submodule of e_i A"""
        vectors = [self.A.multiply(self.A.idempotent(i), v) for v in self.basis]
        return submodule_of_projective(self.A, i, vectors, name="e{}I".format(i))

def whole_algebra(A):
    return TwoSidedIdeal(A, [{k: Rational(1)} for k in range(A.dim)])

def idempotent_ideal(A, i):
    """I_i = A (1 - e_i) A, spanned by the products x y through a vertex
    other than i"""
    vectors = [A.basis_product(x, y) for x, bx in enumerate(A.basis)
               for y, by in enumerate(A.basis) if bx.target == by.source != i]
    return TwoSidedIdeal(A, vectors)

def ideal_product(A, J, K):
    """J K, spanned by the pairwise products of basis elements"""
    return TwoSidedIdeal(A, [A.multiply(u, v) for u in J.basis for v in K.basis])

def word_ideal(A, word, cache=None):
    """I_{word[0]} ... I_{word[-1]}; the whole algebra for the empty word"""
    cache = {} if cache is None else cache
    word = tuple(word)
    if word not in cache:
        if not word:
            cache[word] = whole_algebra(A)
        elif len(word) == 1:
            cache[word] = idempotent_ideal(A, word[0])
        else:
            cache[word] = ideal_product(A, word_ideal(A, word[:1], cache),
                                       word_ideal(A, word[1:], cache))
    return cache[word]

def ideal_pair(A, ideal):
    """the support tau-tilting pair (I, P) with I split by vertices and P
    the projectives off the support"""
    summands = [M for M in (ideal.right_summand(i) for i in range(1, A.n + 1)) if M.dim]
    support = set(v for M in summands for v in M.support())
    return SupportPair(summands, [k for k in range(1, A.n + 1) if k not in support])

def mizuno_map(n, check_words=None, check_order=True, lattice=None):
    """ideals I_w of Pi_n and the pairs of I_{w w_0}.

    Parameters
    ----------
    n : int
        rank, at most MIZUNO_MAX_RANK
    check_words : bool
        compute I_w along every reduced word; defaults to n <= 3
    check_order : bool
        compare w <= v with I_{w w_0} <= I_{v w_0} on all pairs
    lattice : WeakOrderLattice

    Returns
    -------
    MizunoModel

    """
    if n > MIZUNO_MAX_RANK:
        raise BudgetError("mizuno_map: rank {} exceeds {}".format(n, MIZUNO_MAX_RANK))
    A = build_algebra(preprojective(n))
    lattice = lattice or hasse(n)
    if check_words is None:
        check_words = n <= 3
    cache = {}
    ideals = {}
    for w in lattice.nodes:
        ideals[w] = word_ideal(A, reduced_word(w), cache)
        if check_words:
            for word in reduced_words(w):
                if word_ideal(A, word, cache) != ideals[w]:
                    raise VerificationError("mizuno_map: I_w for w = {} depends on the word {}"
                                            .format(w, word))
    if len(set(ideals.values())) != len(lattice):
        raise VerificationError("mizuno_map: {} distinct ideals for {} elements".format(
            len(set(ideals.values())), len(lattice)))
    w0 = longest(n)
    pairs = {w: prepare_pair(A, ideal_pair(A, ideals[compose(w, w0)])) for w in lattice.nodes}
    model = MizunoModel(A, lattice, ideals, pairs)
    if check_order:
        failures = mizuno_order_failures(model)
        if failures:
            raise VerificationError("mizuno_map: order differs on {} pairs, first {}".format(
                len(failures), failures[0]))
    log.info("mizuno_map: %d ideals of %s", len(ideals), A.presentation.name)
    return model

def mizuno_order_failures(model):
    """pairs (u, v) where u <= v disagrees with I_{u w_0} <= I_{v w_0}"""
    A, lattice = model.algebra, model.lattice
    failures = []
    for a, u in enumerate(lattice.nodes):
        for b, v in enumerate(lattice.nodes):
            if bool(lattice.order[a, b]) != support_tau_tilting_order(
                    A, model.pairs[v], model.pairs[u]):
                failures.append((u, v))
    return failures

def pair_g_vectors(A, prepared):
    """set of g-vectors of the summands of S(M, P)"""
    gs = [tuple(int(x) for x in minimal_presentation(A, M).g_vector(A.n))
          for M in prepared.pair.summands]
    gs += [tuple(-int(k == v) for v in range(1, A.n + 1)) for k in prepared.pair.projectives]
    return frozenset(gs)

def mizuno_node_map(model, poset):
    """w -> position of the node of poset with the g-vectors of I_{w w_0}"""
    by_g = {frozenset(tuple(int(x) for x in g) for g in g_vectors(node, poset.n)): a
            for a, node in enumerate(poset.nodes)}
    mapping = {}
    for w, prepared in model.pairs.items():
        key = pair_g_vectors(model.algebra, prepared)
        if key not in by_g:
            raise VerificationError("mizuno_node_map: no node has the g-vectors {} of w = {}"
                                    .format(sorted(key), w))
        mapping[w] = by_g[key]
    return mapping

def tau_rigid_count(n):
    """distinct nonzero summands e_i I_w of Pi_n, told apart by g-vector"""
    if n > MIZUNO_MAX_RANK:
        raise BudgetError("tau_rigid_count: rank {} exceeds {}".format(n, MIZUNO_MAX_RANK))
    A = build_algebra(preprojective(n))
    cache = {}
    seen = set()
    for w in hasse(n).nodes:
        ideal = word_ideal(A, reduced_word(w), cache)
        for i in range(1, n + 1):
            M = ideal.right_summand(i)
            if M.dim:
                seen.add(tuple(int(x) for x in minimal_presentation(A, M).g_vector(n)))
    return len(seen)
