# -*- coding: utf-8 -*-
"""Algebra

exact finite dimensional quiver algebras kQ/I over the rationals.

Elements are sparse vectors, dicts from basis position to sympy
Rational. Basis positions 0..n-1 are the idempotents e_1..e_n, followed
by the arrows and then the higher degrees. Each basis element is the
class of a path, recorded with its source and target, so e_i A e_j is
spanned by the basis elements from i to j.

Hom(P_i, P_j) is e_j A e_i acting by left multiplication, and g f
corresponds to the product w_g w_f.

"""
from __future__ import division
import logging
from collections import defaultdict, namedtuple
from itertools import product
from sympy import Matrix, Rational
from .errors import PresentationError, UsageError

log = logging.getLogger(__name__)

DEFAULT_DEGREE_CAP = 32

BasisElement = namedtuple("BasisElement", ["path", "source", "target", "degree"])
ConditionReport = namedtuple("ConditionReport", ["a", "b", "c"])

def add_into(acc, vec, coef=1):
    """acc += coef * vec, dropping zeros; returns acc"""
    for k, c in vec.items():
        value = acc.get(k, 0) + coef * c
        if value == 0:
            acc.pop(k, None)
        else:
            acc[k] = value
    return acc

def as_matrix(vectors, indices):
    """rows of the given sparse vectors restricted to indices"""
    return Matrix(len(vectors), len(indices),
                  [v.get(k, 0) for v in vectors for k in indices])

def span_rank(vectors, indices):
    if not vectors or not indices:
        return 0
    return as_matrix(vectors, indices).rank()

def same_span(first, second, indices):
    r = span_rank(first + second, indices)
    return span_rank(first, indices) == r and span_rank(second, indices) == r


class FiniteDimAlgebra(object):
    """basis and multiplication of a presented algebra; see build_algebra"""

    def __init__(self, presentation, basis, right):
        self.presentation = presentation
        self.n = presentation.n
        self.basis = basis
        self.dim = len(basis)
        self._right = right
        self._products = {}
        top = max(b.degree for b in basis)
        self.dims = [sum(1 for b in basis if b.degree == d) for d in range(top + 1)]
        self._arrow_index = {b.path[0]: k for k, b in enumerate(basis) if b.degree == 1}
        self._corners = defaultdict(list)
        for k, b in enumerate(basis):
            self._corners[(b.source, b.target)].append(k)

    def __repr__(self):
        return "FiniteDimAlgebra({}, dims={})".format(self.presentation.name, self.dims)

    def idempotent(self, v):
        return {v - 1: Rational(1)}

    def corner(self, i, j):
        """positions of the basis of e_i A e_j"""
        return list(self._corners.get((i, j), []))

    def radical_corner(self, i, j):
        return [k for k in self.corner(i, j) if self.basis[k].degree > 0]

    def right_arrow(self, vec, name):
        """vec * a for the arrow named name"""
        images = self._right[name]
        out = {}
        for b, c in vec.items():
            add_into(out, images.get(b, {}), c)
        return out

    def path(self, names, source=None):
        """class of a path; the idempotent e_source for an empty path"""
        names = tuple(names)
        if not names:
            if source is None:
                raise UsageError("path: an empty path needs its vertex")
            return self.idempotent(source)
        vec = {self._arrow_index[names[0]]: Rational(1)}
        for name in names[1:]:
            vec = self.right_arrow(vec, name)
        return vec

    def basis_product(self, x, y):
        key = (x, y)
        if key not in self._products:
            by = self.basis[y]
            if by.degree == 0:
                out = {x: Rational(1)} if self.basis[x].target == by.source else {}
            else:
                out = {x: Rational(1)}
                for name in by.path:
                    out = self.right_arrow(out, name)
            self._products[key] = out
        return self._products[key]

    def multiply(self, u, v):
        out = {}
        for x, cx in u.items():
            for y, cy in v.items():
                add_into(out, self.basis_product(x, y), cx * cy)
        return out

    def check_associativity(self):
        """(xy)z == x(yz) on all basis triples"""
        units = [{k: Rational(1)} for k in range(self.dim)]
        for x, y, z in product(units, repeat=3):
            if self.multiply(self.multiply(x, y), z) != self.multiply(x, self.multiply(y, z)):
                return False
        return True

def _relation_rows(p, basis, right, levels, degree, col_index):
    rows = []
    for relation in p.relations:
        k = len(relation[0][1])
        if k > degree:
            continue
        source = p.endpoints(relation[0][1])[0]
        for b in levels[degree - k]:
            if basis[b].target != source:
                continue
            row = {}
            for coef, path in relation:
                vec = {b: Rational(1)}
                for name in path[:-1]:
                    nxt = {}
                    for x, c in vec.items():
                        add_into(nxt, right[name].get(x, {}), c)
                    vec = nxt
                for x, c in vec.items():
                    add_into(row, {col_index[(x, path[-1])]: c}, coef)
            if row:
                rows.append(row)
    return rows

def build_algebra(p, degree_cap=DEFAULT_DEGREE_CAP, check_associativity=True):
    """compute a basis and multiplication of kQ/I, degree by degree.

    Parameters
    ----------
    p : QuiverPresentation
        homogeneous relations of length at least 2
    degree_cap : int
        a nonzero component in this degree rejects the presentation
    check_associativity : bool
        verify associativity on every basis triple

    Returns
    -------
    FiniteDimAlgebra

    Notes
    -----
    The degree d part is spanned by pairs (b, a) of a degree d-1 basis
    element b and an arrow a leaving its target, modulo the classes of
    b' r for basis elements b' and relations r ending in degree d.
    Row reduction keeps the non-pivot pairs as the new basis and
    expresses every pair in it, which is right multiplication by a.

    """
    if degree_cap < 2:
        raise UsageError("build_algebra: degree_cap must be at least 2, got {}".format(degree_cap))
    basis = [BasisElement((), v, v, 0) for v in range(1, p.n + 1)]
    right = {a.name: {} for a in p.arrows}
    for a in p.arrows:
        right[a.name][a.source - 1] = {len(basis): Rational(1)}
        basis.append(BasisElement((a.name,), a.source, a.target, 1))
    levels = [list(range(p.n)), list(range(p.n, len(basis)))]
    degree = 1
    while levels[-1]:
        degree += 1
        if degree > degree_cap:
            raise PresentationError(
                "build_algebra: {} is not nilpotent below degree {}".format(p.name, degree_cap))
        columns = [(b, a.name) for b in levels[-1] for a in p.arrows
                   if a.source == basis[b].target]
        col_index = {c: k for k, c in enumerate(columns)}
        rows = _relation_rows(p, basis, right, levels, degree, col_index)
        pivots, reduced = (), None
        if rows and columns:
            reduced, pivots = as_matrix(rows, range(len(columns))).rref()
        free = [k for k in range(len(columns)) if k not in pivots]
        new_index = {}
        for k in free:
            b, name = columns[k]
            new_index[k] = len(basis)
            basis.append(BasisElement(basis[b].path + (name,), basis[b].source,
                                      p.arrow(name).target, degree))
        for k, (b, name) in enumerate(columns):
            if k in new_index:
                right[name][b] = {new_index[k]: Rational(1)}
            else:
                row = pivots.index(k)
                right[name][b] = {new_index[q]: -reduced[row, q]
                                  for q in free if reduced[row, q] != 0}
        levels.append(list(new_index.values()))
        log.debug("build_algebra: %s has %d basis elements in degree %d",
                  p.name, len(levels[-1]), degree)
    algebra = FiniteDimAlgebra(p, basis, right)
    log.info("build_algebra: %s has dimension %d, by degree %s",
             p.name, algebra.dim, algebra.dims)
    if check_associativity and not algebra.check_associativity():
        raise PresentationError("build_algebra: multiplication of {} is not associative".format(
            p.name))
    return algebra

def hom_space(A, i, j):
    """basis of Hom(P_i, P_j) = e_j A e_i as sparse vectors"""
    return [{k: Rational(1)} for k in A.corner(j, i)]

def shortest_path_class(A, i, j):
    """class of the shortest loopless path from i to j, or None when there
    is no unique one"""
    names = A.presentation.shortest_path(i, j)
    if names is None:
        return None
    return A.path(names, source=i)

def _arrow_generates(A, x):
    i, j = x.source, x.target
    target = A.corner(i, j)
    xvec = A.path((x.name,))
    left = [A.multiply(xvec, {b: 1}) for b in A.corner(j, j)]
    right = [A.multiply({b: 1}, xvec) for b in A.corner(i, i)]
    return (span_rank(left, target) == len(target)
            and span_rank(right, target) == len(target))

def check_condition(A):
    """evaluate the three parts of the condition on a built algebra.

    Returns
    -------
    ConditionReport
        a: the loopless quiver is the double line on 1..n;
        b: every loopless arrow x: i -> j has x A e_j = e_i A e_j = e_i A x;
        c: every shortest loopless path is nonzero (False when one is
        missing or not unique).

    """
    p = A.presentation
    a = p.is_double_line()
    b = all(_arrow_generates(A, x) for x in p.reduced_arrows())
    c = True
    for i, j in product(range(1, A.n + 1), repeat=2):
        w = shortest_path_class(A, i, j)
        if not w:
            log.debug("check_condition: no nonzero shortest path %d -> %d in %s", i, j, p.name)
            c = False
            break
    return ConditionReport(a, b, c)

def check_radical_symmetry(A):
    """e_i Rad(A) x == x Rad(A) e_j for every loopless arrow x: i -> j"""
    for x in A.presentation.reduced_arrows():
        i, j = x.source, x.target
        xvec = A.path((x.name,))
        left = [A.multiply({b: 1}, xvec) for b in A.radical_corner(i, i)]
        right = [A.multiply(xvec, {b: 1}) for b in A.radical_corner(j, j)]
        if not same_span(left, right, A.corner(i, j)):
            return False
    return True
