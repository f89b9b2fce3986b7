# -*- coding: utf-8 -*-
"""Modules

right modules, two-term complexes of projectives and the homotopy
computations that decide rigidity and order.

A map between sums of projectives P_{s_0} + ... -> P_{t_0} + ... is a
dict {(row, col): element} whose entry (row, col) lies in
e_{t_row} A e_{s_col} and acts on P_{s_col} by left multiplication.

"""
from __future__ import division
import logging
from collections import namedtuple
import numpy as np
from sympy import Matrix, Rational, eye, zeros
from .algebra import add_into, as_matrix, shortest_path_class
from .errors import UsageError, VerificationError
from .silting import SttiltPoset, hasse_by_reduction, maximal_compatible_sets, order_matrix
from .xi import enumerate_xi, shape

log = logging.getLogger(__name__)

SupportPair = namedtuple("SupportPair", ["summands", "projectives"])
SupportPair.__doc__ = """a candidate support tau-tilting pair (M, P).

summands: indecomposable RightModules whose sum is M;
projectives: vertex labels k of the projectives P_k in P.
"""

PreparedPair = namedtuple("PreparedPair", ["pair", "silting", "presentation", "support"])

def _rank(columns):
    return Matrix.hstack(*columns).rank() if columns else 0

def _extend(base, candidates):
    """candidates that enlarge the span of base, chosen greedily"""
    chosen, current = [], list(base)
    r = _rank(current)
    for c in candidates:
        r2 = _rank(current + [c])
        if r2 > r:
            chosen.append(c)
            current.append(c)
            r = r2
    return chosen

def _units(size):
    return [eye(size).col(q) for q in range(size)]


class RightModule(object):
    """a finite dimensional right module.

    dims[v] is the dimension of M e_v; action[name] is the matrix of the
    arrow acting M e_source -> M e_target on column vectors.

    """
    def __init__(self, A, dims, action, name=None):
        self.A = A
        self.dims = dict(dims)
        self.action = dict(action)
        self.name = name or "module"
        for a in A.presentation.arrows:
            shape_ = (self.dims[a.target], self.dims[a.source])
            if self.action[a.name].shape != shape_:
                raise UsageError("RightModule: action of {} has shape {}, expected {}".format(
                    a.name, self.action[a.name].shape, shape_))

    def __repr__(self):
        return "RightModule({}, dims={})".format(self.name, [self.dims[v] for v in sorted(self.dims)])

    @property
    def dim(self):
        return sum(self.dims.values())

    def support(self):
        return sorted(v for v, d in self.dims.items() if d > 0)

    def act(self, vertex, vec, b):
        """vec in M e_vertex times the basis element b"""
        element = self.A.basis[b]
        if element.source != vertex:
            return zeros(self.dims[element.target], 1)
        for name in element.path:
            vec = self.action[name] * vec
        return vec

    def relations_vanish(self):
        """every relation of the presentation acts as zero"""
        p = self.A.presentation
        for relation in p.relations:
            source, target = p.endpoints(relation[0][1])
            total = zeros(self.dims[target], self.dims[source])
            for coef, path in relation:
                mat = eye(self.dims[source])
                for name in path:
                    mat = self.action[name] * mat
                total += coef * mat
            if any(x != 0 for x in total):
                return False
        return True

def direct_sum(A, modules):
    """block diagonal sum of modules"""
    dims = {v: sum(m.dims[v] for m in modules) for v in range(1, A.n + 1)}
    action = {}
    for a in A.presentation.arrows:
        mat = zeros(dims[a.target], dims[a.source])
        r0 = c0 = 0
        for m in modules:
            block = m.action[a.name]
            if block.rows and block.cols:
                mat[r0:r0 + block.rows, c0:c0 + block.cols] = block
            r0 += block.rows
            c0 += block.cols
        action[a.name] = mat
    return RightModule(A, dims, action, name="+".join(m.name for m in modules))


class _Quotient(object):
    """a subspace of coordinates given by spanning sparse vectors, with
    the reduction onto the complement spanned by the free coordinates"""
    def __init__(self, indices, vectors):
        self.indices = list(indices)
        self.rows, self.pivots = [], ()
        if vectors and self.indices:
            reduced, self.pivots = as_matrix(vectors, self.indices).rref()
            self.rows = [list(reduced.row(k)) for k in range(len(self.pivots))]
        self.free = [q for q in range(len(self.indices)) if q not in self.pivots]

    def coordinates(self, vec):
        dense = [vec.get(k, 0) for k in self.indices]
        for row, pc in zip(self.rows, self.pivots):
            c = dense[pc]
            if c != 0:
                dense = [d - c * r for d, r in zip(dense, row)]
        return Matrix(len(self.free), 1, [dense[q] for q in self.free])

    def lift(self, q):
        return {self.indices[self.free[q]]: Rational(1)}

def cyclic_quotient_module(A, i, e_set):
    """the module e_i A / e_i A (1 - sum_{k in e_set} e_k) A.

    Parameters
    ----------
    A : FiniteDimAlgebra
    i : int
        vertex
    e_set : iterable of int
        vertices whose idempotents are kept

    Returns
    -------
    RightModule
        possibly zero; P_i itself when e_set holds every vertex

    """
    e_set = set(e_set)
    if not 1 <= i <= A.n or not e_set <= set(range(1, A.n + 1)):
        raise UsageError("cyclic_quotient_module: bad vertices {} and {}".format(i, sorted(e_set)))
    spans = {v: [] for v in range(1, A.n + 1)}
    for x, bx in enumerate(A.basis):
        if bx.source != i or bx.target in e_set:
            continue
        for y in range(A.dim):
            if A.basis[y].source == bx.target:
                prod = A.basis_product(x, y)
                if prod:
                    spans[A.basis[y].target].append(prod)
    quotients = {v: _Quotient(A.corner(i, v), spans[v]) for v in spans}
    return _module_from_quotients(A, quotients, "e{}A/({})".format(i, ",".join(
        str(k) for k in sorted(e_set))))

def projective_module(A, i):
    """P_i = e_i A"""
    return cyclic_quotient_module(A, i, range(1, A.n + 1))

def _module_from_quotients(A, quotients, name):
    dims = {v: len(q.free) for v, q in quotients.items()}
    action = {}
    for a in A.presentation.arrows:
        source, target = quotients[a.source], quotients[a.target]
        cols = [target.coordinates(A.right_arrow(source.lift(q), a.name))
                for q in range(dims[a.source])]
        action[a.name] = Matrix.hstack(*cols) if cols else zeros(dims[a.target], 0)
    return RightModule(A, dims, action, name)

def submodule_of_projective(A, i, vectors, name=None):
    """the right submodule of e_i A spanned by vectors (already closed
    under right multiplication)"""
    bases = {}
    for v in range(1, A.n + 1):
        indices = A.corner(i, v)
        parts = [A.multiply(A.multiply(A.idempotent(i), vec), A.idempotent(v)) for vec in vectors]
        parts = [p for p in parts if p]
        rows, pivots = [], ()
        if parts and indices:
            reduced, pivots = as_matrix(parts, indices).rref()
            rows = [{indices[q]: reduced[k, q] for q in range(len(indices)) if reduced[k, q] != 0}
                    for k in range(len(pivots))]
        bases[v] = (indices, rows, pivots)
    dims = {v: len(rows) for v, (_, rows, _) in bases.items()}
    action = {}
    for a in A.presentation.arrows:
        _, rows, _ = bases[a.source]
        indices, _, pivots = bases[a.target]
        cols = []
        for row in rows:
            image = A.right_arrow(row, a.name)
            # rref rows are 1 at their own pivot and 0 at the others
            cols.append(Matrix(len(pivots), 1, [image.get(indices[pc], 0) for pc in pivots]))
        action[a.name] = Matrix.hstack(*cols) if cols else zeros(dims[a.target], 0)
    return RightModule(A, dims, action, name or "sub(e{}A)".format(i))


class ConcreteTwoTerm(object):
    """P_{minus_one} -> P_{zero} with a matrix of algebra elements.

    Entry (r, c) of the differential lies in e_{zero[r]} A e_{minus_one[c]}.

    """
    def __init__(self, minus_one, zero, differential=None):
        self.minus_one = list(minus_one)
        self.zero = list(zero)
        self.differential = {key: vec for key, vec in (differential or {}).items() if vec}

    def __repr__(self):
        return "ConcreteTwoTerm({} -> {})".format(self.minus_one, self.zero)

    @classmethod
    def stalk(cls, labels):
        """projectives in degree 0"""
        return cls([], labels)

    def shifted(self, labels):
        """append shifted projectives P_k[1] for k in labels"""
        return ConcreteTwoTerm(self.minus_one + list(labels), self.zero, self.differential)

    def g_vector(self, n):
        g = np.zeros(n, dtype=int)
        for k in self.zero:
            g[k - 1] += 1
        for k in self.minus_one:
            g[k - 1] -= 1
        return g

    def has_common_summand(self):
        return bool(set(self.minus_one) & set(self.zero))

def sum_complexes(complexes):
    minus_one, zero, differential = [], [], {}
    for X in complexes:
        r0, c0 = len(zero), len(minus_one)
        for (r, c), vec in X.differential.items():
            differential[(r + r0, c + c0)] = vec
        minus_one += X.minus_one
        zero += X.zero
    return ConcreteTwoTerm(minus_one, zero, differential)


class _HomBasis(object):
    """basis of Hom(sum P_sources, sum P_targets): unit entries at (row,
    col) running over e_{targets[row]} A e_{sources[col]}"""
    def __init__(self, A, sources, targets):
        self.entries = [(r, c, k) for r, t in enumerate(targets)
                        for c, s in enumerate(sources) for k in A.corner(t, s)]
        self.position = {e: q for q, e in enumerate(self.entries)}

    def __len__(self):
        return len(self.entries)

    def units(self):
        for r, c, k in self.entries:
            yield {(r, c): {k: Rational(1)}}

    def column(self, mapping):
        col = zeros(len(self.entries), 1)
        for (r, c), vec in mapping.items():
            for k, coef in vec.items():
                col[self.position[(r, c, k)], 0] += coef
        return col

    def mapping(self, column):
        out = {}
        for q, (r, c, k) in enumerate(self.entries):
            if column[q, 0] != 0:
                out.setdefault((r, c), {})[k] = column[q, 0]
        return out

def compose(A, g, f):
    """g after f for maps given as dicts of entries"""
    out = {}
    for (r, m), gv in g.items():
        for (m2, c), fv in f.items():
            if m == m2:
                add_into(out.setdefault((r, c), {}), A.multiply(gv, fv))
    return {key: vec for key, vec in out.items() if vec}

def _subtract(f, g):
    out = {key: dict(vec) for key, vec in f.items()}
    for key, vec in g.items():
        add_into(out.setdefault(key, {}), vec, -1)
    return {key: vec for key, vec in out.items() if vec}

def homotopy_vanishes(A, X, Y):
    """decide Hom(X, Y[1]) = 0 in the homotopy category.

    Every map X^-1 -> Y^0 must be h d_X + d_Y h' for some
    h: X^0 -> Y^0 and h': X^-1 -> Y^-1, i.e. the linear map
    (h, h') -> h d_X + d_Y h' is onto Hom(X^-1, Y^0).

    Returns
    -------
    bool

    """
    target = _HomBasis(A, X.minus_one, Y.zero)
    if not len(target):
        return True
    columns = [target.column(compose(A, h, X.differential))
               for h in _HomBasis(A, X.zero, Y.zero).units()]
    columns += [target.column(compose(A, Y.differential, h))
                for h in _HomBasis(A, X.minus_one, Y.minus_one).units()]
    return _rank(columns) == len(target)

def is_presilting(A, X):
    return homotopy_vanishes(A, X, X)

def _endomorphism_basis(A, X):
    """chain endomorphisms modulo null-homotopic ones.

    Returns the coordinate bases of the two degrees, the complement
    vectors spanning End/B and the stacked basis [B | complement].
    """
    low = _HomBasis(A, X.minus_one, X.minus_one)
    high = _HomBasis(A, X.zero, X.zero)
    middle = _HomBasis(A, X.minus_one, X.zero)
    size = len(low) + len(high)

    def split(column):
        return (low.mapping(column[:len(low), :]), high.mapping(column[len(low):, :]))

    def join(f_low, f_high):
        return Matrix.vstack(low.column(f_low), high.column(f_high))

    # chain condition f0 d - d f-1 = 0
    columns = []
    for unit in _units(size):
        f_low, f_high = split(unit)
        columns.append(middle.column(_subtract(compose(A, f_high, X.differential),
                                               compose(A, X.differential, f_low))))
    if len(middle):
        cycles = Matrix.hstack(*columns).nullspace() if columns else []
    else:
        cycles = _units(size)
    boundaries = []
    for s in _HomBasis(A, X.zero, X.minus_one).units():
        boundaries.append(join(compose(A, s, X.differential), compose(A, X.differential, s)))
    boundaries = Matrix.hstack(*boundaries).columnspace() if boundaries else []
    complement = _extend(boundaries, cycles)
    return split, join, boundaries, complement

def is_local_endomorphism(A, X):
    """End(X) in the homotopy category is local.

    The radical of E = End(X) is the kernel of the trace form
    (x, y) -> tr(L_x L_y) of the left regular representation, so
    dim E/rad E is the rank of the Gram matrix. X is indecomposable
    exactly when that rank is 1.

    """
    split, join, boundaries, complement = _endomorphism_basis(A, X)
    r = len(complement)
    if r == 0:
        return False
    stacked = Matrix.hstack(*(boundaries + complement))
    offset = len(boundaries)

    def reduce_(column):
        solution, _ = stacked.gauss_jordan_solve(column)
        return solution[offset:, :]

    maps = [split(c) for c in complement]
    regular = []
    for x_low, x_high in maps:
        cols = [reduce_(join(compose(A, x_low, y_low), compose(A, x_high, y_high)))
                for y_low, y_high in maps]
        regular.append(Matrix.hstack(*cols))
    gram = Matrix(r, r, lambda a, b: (regular[a] * regular[b]).trace())
    return gram.rank() == 1

def endomorphism_dimension(A, X):
    """dimension of End(X) in the homotopy category"""
    return len(_endomorphism_basis(A, X)[3])

def projective_cover(A, M):
    """generators of M modulo its radical, as (vertex, column vector)"""
    gens = []
    for v in range(1, A.n + 1):
        if not M.dims[v]:
            continue
        radical = [M.action[a.name].col(q) for a in A.presentation.arrows if a.target == v
                   for q in range(M.dims[a.source])]
        gens += [(v, c) for c in _extend(radical, _units(M.dims[v]))]
    return gens

def minimal_presentation(A, M, tau_rigid=False):
    """minimal projective presentation P_1 -> P_0 of M.

    Parameters
    ----------
    A : FiniteDimAlgebra
    M : RightModule
    tau_rigid : bool
        M is known to be tau-rigid; then P_1 and P_0 share no summand
        and that is asserted

    Returns
    -------
    ConcreteTwoTerm

    Notes
    -----
    P_0 is built from the top of M. The kernel of P_0 -> M is computed
    vertex by vertex, and P_1 from the top of the kernel, so that both
    covers are minimal.

    """
    gens = projective_cover(A, M)
    zero = [v for v, _ in gens]
    layouts, kernels = {}, {}
    for j in range(1, A.n + 1):
        layout = [(g, k) for g, v in enumerate(zero) for k in A.corner(v, j)]
        layouts[j] = layout
        if not layout:
            kernels[j] = []
        elif not M.dims[j]:
            kernels[j] = _units(len(layout))
        else:
            pi = Matrix.hstack(*[M.act(zero[g], gens[g][1], k) for g, k in layout])
            kernels[j] = pi.nullspace()

    def components(j, column):
        out = {}
        for q, (g, k) in enumerate(layouts[j]):
            if column[q, 0] != 0:
                out.setdefault(g, {})[k] = column[q, 0]
        return out

    def times_arrow(j, column, a):
        image = zeros(len(layouts[a.target]), 1)
        position = {e: q for q, e in enumerate(layouts[a.target])}
        for g, vec in components(j, column).items():
            for k, coef in A.right_arrow(vec, a.name).items():
                image[position[(g, k)], 0] += coef
        return image

    minus_one, differential = [], {}
    for j in range(1, A.n + 1):
        if not kernels[j]:
            continue
        radical = [times_arrow(a.source, c, a) for a in A.presentation.arrows
                   if a.target == j for c in kernels[a.source]]
        for column in _extend(radical, kernels[j]):
            c = len(minus_one)
            minus_one.append(j)
            for g, vec in components(j, column).items():
                differential[(g, c)] = vec
    X = ConcreteTwoTerm(minus_one, zero, differential)
    if tau_rigid and X.has_common_summand():
        raise VerificationError(
            "minimal_presentation: {} shares a summand between degrees".format(X))
    log.debug("minimal_presentation: %s has presentation %s", M.name, X)
    return X

def prepare_pair(A, pair):
    """check a support tau-tilting pair and build S(M, P).

    Checks: every summand is nonzero, S(M, P) is presilting, Hom(P, M)
    vanishes, |M| + |P| = n and the g-vectors are independent.

    Returns
    -------
    PreparedPair

    """
    if isinstance(pair, PreparedPair):
        return pair
    presentations = []
    support = set()
    for M in pair.summands:
        if not M.dim:
            raise VerificationError("prepare_pair: zero summand {}".format(M.name))
        presentations.append(minimal_presentation(A, M))
        support.update(M.support())
    P_M = sum_complexes(presentations)
    S = P_M.shifted(sorted(pair.projectives))
    if support & set(pair.projectives):
        raise VerificationError("prepare_pair: Hom(P, M) is not zero for P = {}".format(
            sorted(pair.projectives)))
    if len(pair.summands) + len(pair.projectives) != A.n:
        raise VerificationError("prepare_pair: |M| + |P| = {} but n = {}".format(
            len(pair.summands) + len(pair.projectives), A.n))
    if not is_presilting(A, S):
        raise VerificationError("prepare_pair: {} is not tau-rigid".format(
            [M.name for M in pair.summands]))
    gs = [X.g_vector(A.n) for X in presentations] + [-np.eye(A.n, dtype=int)[k - 1]
                                                      for k in pair.projectives]
    if gs and Matrix([[int(x) for x in g] for g in gs]).rank() != len(gs):
        raise VerificationError("prepare_pair: dependent g-vectors")
    if P_M.has_common_summand():
        raise VerificationError("prepare_pair: presentation of a tau-rigid module shares a summand")
    return PreparedPair(pair, S, P_M, frozenset(support))

def validate_support_pair(A, pair):
    """S(M, P) for a support tau-tilting pair; raises VerificationError"""
    return prepare_pair(A, pair).silting

def support_tau_tilting_order(A, first, second):
    """M >= M' for support tau-tilting pairs (M, P) and (M', P').

    M >= M' iff Hom(M', tau M) = 0 and supp M contains supp M'. The
    first condition is Hom(P_M, P_M'[1]) = 0 for the minimal
    presentations. The answer is checked against the silting order
    Hom(S(M,P), S(M',P')[1]) = 0.

    """
    first, second = prepare_pair(A, first), prepare_pair(A, second)
    module_side = (homotopy_vanishes(A, first.presentation, second.presentation)
                   and first.support >= second.support)
    silting_side = homotopy_vanishes(A, first.silting, second.silting)
    if module_side != silting_side:
        raise VerificationError(
            "support_tau_tilting_order: module order {} but silting order {}".format(
                module_side, silting_side))
    return module_side

def realize(A, i):
    """X_i over A with shortest-path entries; a missing or zero path
    gives a zero entry"""
    s = shape(i, A.n)
    differential = {}
    for source, target in s.differential:
        w = shortest_path_class(A, target, source)
        if w:
            differential[(s.zero.index(target), s.minus_one.index(source))] = w
    return ConcreteTwoTerm(s.minus_one, s.zero, differential)

def oracle_vanishing_matrix(A, complexes=None):
    """V[a, b] iff Hom(X_a, X_b[1]) = 0 over A, for the realized X_i in
    enumerate_xi order"""
    if complexes is None:
        complexes = [realize(A, i) for i in enumerate_xi(A.n)]
    size = len(complexes)
    vanish = np.zeros((size, size), dtype=bool)
    for a, X in enumerate(complexes):
        for b, Y in enumerate(complexes):
            vanish[a, b] = homotopy_vanishes(A, X, Y)
    log.info("oracle_vanishing_matrix: %d of %d pairs vanish over %s",
             int(vanish.sum()), vanish.size, A.presentation.name)
    return vanish

def oracle_poset(A):
    """poset of size-n compatible sets of realized X_i over A.

    Only the X_i that are presilting with local endomorphism ring take
    part. The Hasse quiver is the transitive reduction of the order.

    Returns
    -------
    SttiltPoset

    """
    n = A.n
    xi = enumerate_xi(n)
    complexes = [realize(A, i) for i in xi]
    vanish = oracle_vanishing_matrix(A, complexes)
    usable = np.array([bool(vanish[a, a]) and is_local_endomorphism(A, X)
                       for a, X in enumerate(complexes)], dtype=bool)
    nodes = maximal_compatible_sets(n, xi, vanish, usable, strict=False)
    order = order_matrix(xi, nodes, vanish)
    graph = hasse_by_reduction(order)
    log.info("oracle_poset: %d usable labels, %d sets over %s",
             int(usable.sum()), len(nodes), A.presentation.name)
    return SttiltPoset(n, xi, nodes, order, graph)
