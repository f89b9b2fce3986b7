# -*- coding: utf-8 -*-
"""Acceptance

the end to end checks run by `tauweave verify`. Each check returns
(passed, detail); run_acceptance times them and turns raised
verification errors into failures.

"""
from __future__ import division
import logging
import time
from collections import namedtuple
from math import factorial
import numpy as np
import networkx as nx
from .algebra import build_algebra, check_condition, check_radical_symmetry
from .errors import BudgetError, CriterionError, VerificationError
from .models import (algebra_from_selector, mizuno_map, mizuno_node_map, preprojective,
                     tau_rigid_count)
from .modules import is_local_endomorphism, oracle_poset, oracle_vanishing_matrix, realize
from .samples import random_pairs
from .silting import build_isomorphism, build_poset, interval_graph, verify_isomorphism
from .weak_order import (generator, hasse, inversions, join, meet, reduced_word,
                         check_parabolic_joins)
from .xi import enumerate_xi, g_vector, hom_vanishes, tau_rigid_bound, vanishing_matrix

log = logging.getLogger(__name__)

CheckResult = namedtuple("CheckResult", ["name", "passed", "seconds", "detail"])

WEAK_ORDER_MAX_RANK = 5
CENSUS_MAX_RANK = 10
ORACLE_MAX_RANK = 3
FULL_PAIR_MAX_RANK = 3
MIRROR_MIN_RANK = 4

def default_algebras(top):
    """selectors of the algebras compared with the criterion"""
    selectors = []
    for n in range(2, min(top, ORACLE_MAX_RANK) + 1):
        selectors += ["preprojective:{}".format(n), "lambda:{}:1".format(n),
                      "lambda:{}:2".format(n)]
    return selectors + ["gamma"]

def check_weak_order(top, samples):
    """lengths, regularity, lattice operations and parabolic identities"""
    for n in range(1, min(top + 2, WEAK_ORDER_MAX_RANK) + 1):
        lattice = hasse(n)
        for w in lattice.nodes:
            if len(reduced_word(w)) != inversions(w):
                return False, "length of {} is not its inversion count".format(w)
            degree = lattice.graph.in_degree(w) + lattice.graph.out_degree(w)
            if degree != n:
                return False, "{} has degree {} at rank {}".format(w, degree, n)
        for u, v in random_pairs(lattice.nodes, min(samples, len(lattice) ** 2)):
            if lattice.join([u, v]) != join([u, v]) or lattice.meet([u, v]) != meet([u, v]):
                return False, "join or meet of {} and {} disagree".format(u, v)
        failures = check_parabolic_joins(n, lattice)
        if failures:
            return False, failures[0]
    return True, "ranks 1..{}".format(min(top + 2, WEAK_ORDER_MAX_RANK))

def check_xi_census():
    """|Xi| = 2^(n+1) - 2 and g-vectors are injective"""
    for n in range(1, CENSUS_MAX_RANK + 1):
        xi = enumerate_xi(n)
        if len(xi) != 2 ** (n + 1) - 2:
            return False, "{} indices at rank {}".format(len(xi), n)
        if len(set(tuple(g_vector(i, n)) for i in xi)) != len(xi):
            return False, "repeated g-vector at rank {}".format(n)
    return True, "ranks 1..{}".format(CENSUS_MAX_RANK)

def _oracle_matrix(selector, cache):
    """(rank, oracle vanishing matrix), computed once per selector"""
    if selector not in cache:
        A = algebra_from_selector(selector)
        cache[selector] = (A.n, oracle_vanishing_matrix(A))
    return cache[selector]

def check_oracle_agreement(algebras, criterion, cache):
    """criterion against the homotopy test on every ordered pair"""
    total = 0
    for selector in algebras:
        n, vanish = _oracle_matrix(selector, cache)
        xi = enumerate_xi(n)
        for a, i in enumerate(xi):
            for b, j in enumerate(xi):
                if bool(criterion(i, j, n)) != bool(vanish[a, b]):
                    return False, "{}: criterion and oracle disagree on {} {}".format(
                        selector, i, j)
        total += len(xi) ** 2
    return True, "{} pairs over {}".format(total, ", ".join(algebras))

def check_mirror(top):
    """the direct mirrored recursion agrees with relabelling"""
    top = max(top, MIRROR_MIN_RANK)
    for n in range(1, top + 1):
        if not np.array_equal(vanishing_matrix(n, direct=True), vanishing_matrix(n)):
            return False, "direct and relabelled criterion differ at rank {}".format(n)
    return True, "ranks 1..{}".format(top)

def check_main_theorem(top, samples, max_rank):
    """(n+1)! nodes, n-regular, rho a verified order isomorphism"""
    ranks = range(1, min(top + 1, max_rank) + 1)
    for n in ranks:
        poset = build_poset(n, max_rank)
        lattice = hasse(n)
        if len(poset) != factorial(n + 1):
            return False, "{} silting sets at rank {}".format(len(poset), n)
        if not poset.is_regular():
            return False, "Hasse quiver is not regular at rank {}".format(n)
        rho = build_isomorphism(poset, lattice)
        pairs = None
        if n > FULL_PAIR_MAX_RANK:
            pairs = random_pairs(lattice.nodes, samples)
        failures = verify_isomorphism(poset, rho, lattice, pairs)
        if failures:
            return False, "rho breaks the order on {} pairs at rank {}".format(len(failures), n)
    return True, "ranks 1..{}".format(ranks[-1])

def check_mizuno(top):
    """ideal model: word independence, order and the criterion poset"""
    for n in range(2, min(top, ORACLE_MAX_RANK) + 1):
        model = mizuno_map(n)
        poset = build_poset(n)
        mapping = mizuno_node_map(model, poset)
        if len(set(mapping.values())) != len(poset):
            return False, "ideal model is not onto the poset at rank {}".format(n)
        lattice = model.lattice
        for a, u in enumerate(lattice.nodes):
            for b, v in enumerate(lattice.nodes):
                if bool(lattice.order[a, b]) != poset.geq(mapping[v], mapping[u]):
                    return False, "ideal model breaks the order at {} {}".format(u, v)
        rho = build_isomorphism(poset, lattice)
        log.info("check_mizuno: ideal model %s rho at rank %d",
                 "equals" if mapping == rho else "differs from", n)
    return True, "ranks 2..{}".format(min(top, ORACLE_MAX_RANK))

def _isomorphic_to_weak_order(poset, n):
    lattice = hasse(n)
    return (len(poset) == len(lattice) and poset.is_regular()
            and nx.is_isomorphic(poset.graph, lattice.graph))

def check_condition_checker(top):
    """models pass the condition, failing algebras are not weak orders"""
    passing = ["preprojective:{}".format(n) for n in range(1, 5)]
    passing += ["lambda:{}:{}".format(n, m) for n in range(2, min(top, ORACLE_MAX_RANK) + 1)
                for m in (1, 2, 3)]
    passing += ["gamma"]
    for selector in passing:
        A = algebra_from_selector(selector)
        report = check_condition(A)
        if not all(report):
            return False, "{} fails the condition: {}".format(selector, report)
        if not check_radical_symmetry(A):
            return False, "{} breaks e_i Rad x = x Rad e_j".format(selector)
    expected = {"oriented:3": "a", "radical-square-zero:3": "c"}
    for selector, part in expected.items():
        report = check_condition(algebra_from_selector(selector))
        if getattr(report, part):
            return False, "{} passes part ({})".format(selector, part)
    failing = 0
    for n in range(2, min(top, ORACLE_MAX_RANK) + 1):
        for selector in ("oriented:{}".format(n), "radical-square-zero:{}".format(n)):
            A = algebra_from_selector(selector)
            if all(check_condition(A)):
                continue
            failing += 1
            try:
                same = _isomorphic_to_weak_order(oracle_poset(A), n)
            except CriterionError:
                same = False
            if same:
                return False, "{} fails the condition but its poset is S_{}".format(
                    selector, n + 1)
    return True, "{} passing models, {} failing algebras".format(len(passing), failing)

def check_tau_rigid_bound(top):
    """distinct tau-rigid summands of the ideal model reach the Xi bound"""
    for n in range(1, min(top, ORACLE_MAX_RANK) + 1):
        count, bound = tau_rigid_count(n), tau_rigid_bound(n)
        if count != bound:
            return False, "{} tau-rigid modules at rank {}, bound {}".format(count, n, bound)
    return True, "ranks 1..{}".format(min(top, ORACLE_MAX_RANK))

def check_g_vector_preservation(algebras, cache):
    """algebras of one rank share the vanishing matrix, hence the poset"""
    by_rank = {}
    for selector in algebras:
        n, _ = _oracle_matrix(selector, cache)
        by_rank.setdefault(n, []).append(selector)
    for n, selectors in sorted(by_rank.items()):
        first = selectors[0]
        for other in selectors[1:]:
            if not np.array_equal(cache[first][1], cache[other][1]):
                return False, "{} and {} differ at rank {}".format(first, other, n)
    return True, "{} ranks".format(len(by_rank))

def check_interval_shapes():
    """[min, rho(s_i) v rho(s_j)] is a square or a hexagon at rank 3"""
    n = 3
    poset = build_poset(n)
    rho = build_isomorphism(poset)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            top = poset.join([rho[generator(i, n)], rho[generator(j, n)]])
            graph = interval_graph(poset, poset.minimum, top)
            size = 4 if j - i > 1 else 6
            if not nx.is_isomorphic(graph, nx.cycle_graph(size)):
                return False, "interval for s_{} and s_{} is not a {}-cycle".format(i, j, size)
    return True, "3 pairs"

def check_indecomposable(top):
    """every realized X_i over Pi_n has a local endomorphism ring"""
    for n in range(1, min(top, ORACLE_MAX_RANK) + 1):
        A = build_algebra(preprojective(n))
        for i in enumerate_xi(n):
            if not is_local_endomorphism(A, realize(A, i)):
                return False, "X_{} over Pi_{} is decomposable".format(i, n)
    return True, "ranks 1..{}".format(min(top, ORACLE_MAX_RANK))

def _timed(name, check, *args):
    start = time.time()
    try:
        passed, detail = check(*args)
    except (VerificationError, BudgetError) as e:
        passed, detail = False, "{}: {}".format(type(e).__name__, e)
    seconds = time.time() - start
    log.info("%s %s in %.2fs", name, "passed" if passed else "failed", seconds)
    return CheckResult(name, passed, seconds, detail)

def run_acceptance(config, criterion=None):
    """run every check for the configured rank.

    Parameters
    ----------
    config : RunConfig
        n bounds the ranks; algebra, when set, replaces the default
        algebras of the oracle comparison
    criterion : callable
        (i, j, n) -> bool, defaults to xi.hom_vanishes

    Returns
    -------
    list of CheckResult

    """
    criterion = criterion or hom_vanishes
    top = config.n
    algebras = [config.algebra] if config.algebra else default_algebras(top)
    cache = {}
    np.random.seed(config.seed)
    results = [
        _timed("weak-order", check_weak_order, top, config.samples),
        _timed("xi-census", check_xi_census),
        _timed("oracle-equivalence", check_oracle_agreement, algebras, criterion, cache),
        _timed("main-theorem", check_main_theorem, top, config.samples, config.max_silting_rank),
        _timed("ideal-model", check_mizuno, top),
        _timed("condition", check_condition_checker, top),
        _timed("g-vectors", check_g_vector_preservation, algebras, cache),
        _timed("tau-rigid-bound", check_tau_rigid_bound, top),
        _timed("indecomposable", check_indecomposable, top),
    ]
    if top >= 3:
        results.insert(7, _timed("interval-shapes", check_interval_shapes))
    if config.check_mirror:
        results.append(_timed("mirror", check_mirror, top))
    return results

def format_report(results):
    """one line per check: PASS|FAIL  name  seconds  detail"""
    return "".join("{}  {}  {:.2f}s  {}\n".format("PASS" if r.passed else "FAIL",
                                                 r.name, r.seconds, r.detail)
                   for r in results)
