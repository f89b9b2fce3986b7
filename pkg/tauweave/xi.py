# -*- coding: utf-8 -*-
"""Xi

the index set Xi of two-term presilting complexes, their shapes and
g-vectors, and the recursive criterion deciding Hom(X_i, X_j[1]) = 0.

An index i = (i_0 < i_1 < ... < i_2m) is an odd-size subset of 0..n+1
other than (0,) and (n+1,). X_i has P_{i_0} + P_{i_2} + ... + P_{i_2m}
in degree -1 and P_{i_1} + ... + P_{i_{2m-1}} in degree 0, where P_0 and
P_{n+1} are zero, and each P_{i_2t} maps to its neighbours P_{i_{2t-1}}
and P_{i_{2t+1}} by shortest paths.

"""
from __future__ import division
import logging
from collections import namedtuple
from functools import lru_cache
from itertools import combinations
import numpy as np
from .errors import CriterionError, UsageError

log = logging.getLogger(__name__)

TwoTermShape = namedtuple("TwoTermShape", ["minus_one", "zero", "differential"])
TwoTermShape.__doc__ = """projective labels in degrees -1 and 0 of X_i.

differential lists (source, target) label pairs: P_source in degree -1
maps to P_target in degree 0 by the shortest path.
"""

RigiditySequences = namedtuple(
    "RigiditySequences", ["t_plus", "s_plus", "t_minus", "s_minus"])
RigiditySequences.__doc__ = """the sequences attached to one pair (t, s).

t_plus[r], s_plus[r] hold t_r, s_r for r = 0, 1, ...; t_minus[r],
s_minus[r] hold t_{-r}, s_{-r}. Both start at (t, s) and stop once the
terminal sentinel values are reached.
"""

FORWARD = "forward"
MIRRORED = "mirrored"

def check_xi(i, n):
    """return i as a tuple, or raise UsageError if it is not in Xi"""
    i = tuple(i)
    if (len(i) % 2 != 1 or list(i) != sorted(set(i))
            or i[0] < 0 or i[-1] > n + 1 or i in ((0,), (n + 1,))):
        raise UsageError("check_xi: {} is not an index of rank {}".format(i, n))
    return i

def rank(i):
    """m_i, half of len(i) - 1"""
    return (len(i) - 1) // 2

def enumerate_xi(n):
    """list every index of rank n.

    Returns
    -------
    list of tuple
        odd-size subsets of 0..n+1 except (0,) and (n+1,), by size and
        then lexicographically; there are 2^(n+1) - 2 of them.

    """
    if n < 1:
        raise UsageError("enumerate_xi: n must be at least 1, got {}".format(n))
    found = [c for size in range(1, n + 3, 2)
             for c in combinations(range(n + 2), size)
             if c not in ((0,), (n + 1,))]
    log.debug("enumerate_xi: %d indices of rank %d", len(found), n)
    return found

def is_shifted_projective(i):
    """X_i = P_k[1], i.e. i = (k,)"""
    return len(i) == 1

def is_projective(i, n):
    """X_i = P_k, i.e. i = (0, k, n+1)"""
    return len(i) == 3 and i[0] == 0 and i[2] == n + 1

def shape(i, n):
    """degree -1 and degree 0 labels of X_i with its differential pattern"""
    i = check_xi(i, n)
    real = lambda k: 0 < k < n + 1
    minus_one = [k for k in i[0::2] if real(k)]
    zero = [k for k in i[1::2] if real(k)]
    differential = []
    for p in range(0, len(i), 2):
        for q in (p - 1, p + 1):
            if 0 <= q < len(i) and real(i[p]) and real(i[q]):
                differential.append((i[p], i[q]))
    return TwoTermShape(minus_one, zero, differential)

def g_vector(i, n):
    """integer vector of length n: +1 at labels in degree 0, -1 at labels
    in degree -1"""
    s = shape(i, n)
    g = np.zeros(n, dtype=int)
    g[[k - 1 for k in s.zero]] += 1
    g[[k - 1 for k in s.minus_one]] -= 1
    return g

def tau_rigid_bound(n):
    """#{i in Xi : m_i > 0}, the number of indices that are not P_k[1]"""
    return sum(1 for i in enumerate_xi(n) if rank(i) > 0)

def entry(i, p, n):
    """i_p with the sentinel conventions.

    Positions below 0 return p itself (i_{-1} = -1, i_{-2} = -2) and
    positions past 2m return n+1+(p-2m) (i_{2m+1} = n+2, i_{2m+2} = n+3).

    """
    top = len(i) - 1
    if p < 0:
        return p
    if p > top:
        return n + 1 + (p - top)
    return i[p]

def mirror(i, n):
    """relabel k -> n+1-k; entry(mirror(i), p) == n+1 - entry(i, 2m-p)"""
    return tuple(sorted(n + 1 - k for k in i))

def admissible_pairs(i, j, n):
    """pairs (t, s) with 0 < i_2t < j_2s+1 < n+1"""
    return [(t, s) for t in range(rank(i) + 1) for s in range(rank(j))
            if 0 < i[2 * t] < j[2 * s + 1] < n + 1]

def mirrored_pairs(i, j, n):
    """pairs (t, s) with n+1 > i_2t > j_2s-1 > 0"""
    return [(t, s) for t in range(rank(i) + 1) for s in range(1, rank(j) + 1)
            if n + 1 > i[2 * t] > j[2 * s - 1] > 0]

def _largest(upper, pred, what):
    for x in range(upper, -3, -1):
        if pred(x):
            return x
    raise CriterionError("{}: empty maximum below {}".format(what, upper))

def _smallest(lower, bound, pred, what):
    for x in range(lower, bound + 1):
        if pred(x):
            return x
    raise CriterionError("{}: empty minimum above {}".format(what, lower))


class _Bounds(object):
    """sentinel accessor and ranks for one ordered pair of indices"""
    def __init__(self, i, j, n):
        self.i, self.j, self.n = i, j, n
        self.mi, self.mj = rank(i), rank(j)
        self.cap = 2 * (self.mi + self.mj + 4)

    def I(self, p):
        return entry(self.i, p, self.n)

    def J(self, p):
        return entry(self.j, p, self.n)


def _forward_step(b, t_prev, s_prev):
    """one step r-1 -> r of the increasing sequences"""
    mi, mj, I, J = b.mi, b.mj, b.I, b.J
    if s_prev <= mj - 1:
        t = _largest(mi + 1, lambda x: I(2 * x - 2) < J(2 * s_prev + 1), "rule (i)")
    elif s_prev >= mj and t_prev <= mi:
        t = mi + 1
    elif t_prev >= mi + 1:
        t = mi + 2
    else:
        raise CriterionError("rule (i): no case for t={}, s={}".format(t_prev, s_prev))
    if t <= mi:
        s = _largest(mj, lambda x: J(2 * x - 1) < I(2 * t), "rule (ii)")
    elif s_prev < mj and t == mi + 1:
        s = mj
    elif s_prev >= mj:
        s = mj + 1
    else:
        raise CriterionError("rule (ii): no case for t={}, s={}".format(t, s_prev))
    return t, s

def _backward_step(b, t_next, s_next):
    """one step r+1 -> r of the decreasing sequences"""
    I, J = b.I, b.J
    if t_next >= 0:
        s = _smallest(-1, b.mj + 2, lambda x: J(2 * x + 3) > I(2 * t_next), "rule (iii)")
    elif t_next <= -1 and s_next >= 0:
        s = -1
    elif s_next <= -1:
        s = -2
    else:
        raise CriterionError("rule (iii): no case for t={}, s={}".format(t_next, s_next))
    if s >= 0:
        t = _smallest(-1, b.mi + 2, lambda x: I(2 * x + 2) > J(2 * s + 1), "rule (iv)")
    elif s == -1 and t_next >= 0:
        t = -1
    elif t_next <= -1:
        t = -2
    else:
        raise CriterionError("rule (iv): no case for t={}, s={}".format(t_next, s))
    return t, s

def _mirrored_forward_step(b, t_prev, s_prev):
    """one step r-1 -> r of the decreasing sequences of a mirrored pair"""
    mi, mj, I, J = b.mi, b.mj, b.I, b.J
    if s_prev >= 1:
        t = _smallest(-1, mi + 2, lambda x: I(2 * x + 2) > J(2 * s_prev - 1), "rule (i)")
    elif s_prev <= 0 and t_prev >= 0:
        t = -1
    elif t_prev <= -1:
        t = -2
    else:
        raise CriterionError("rule (i): no case for t={}, s={}".format(t_prev, s_prev))
    if t >= 0:
        s = _smallest(0, mj + 2, lambda x: J(2 * x + 1) > I(2 * t), "rule (ii)")
    elif t == -1 and s_prev >= 1:
        s = 0
    elif s_prev <= 0:
        s = -1
    else:
        raise CriterionError("rule (ii): no case for t={}, s={}".format(t, s_prev))
    return t, s

def _mirrored_backward_step(b, t_next, s_next):
    """one step r+1 -> r of the increasing sequences of a mirrored pair"""
    mi, mj, I, J = b.mi, b.mj, b.I, b.J
    if t_next <= mi:
        s = _largest(mj + 1, lambda x: J(2 * x - 3) < I(2 * t_next), "rule (iii)")
    elif t_next >= mi + 1 and s_next <= mj:
        s = mj + 1
    elif s_next >= mj + 1:
        s = mj + 2
    else:
        raise CriterionError("rule (iii): no case for t={}, s={}".format(t_next, s_next))
    if s <= mj:
        t = _largest(mi + 1, lambda x: I(2 * x - 2) < J(2 * s - 1), "rule (iv)")
    elif s >= mj + 1 and t_next <= mi:
        t = mi + 1
    elif t_next >= mi + 1:
        t = mi + 2
    else:
        raise CriterionError("rule (iv): no case for t={}, s={}".format(t_next, s))
    return t, s

def _run(b, start, step, terminal):
    ts, ss = [start[0]], [start[1]]
    while (ts[-1], ss[-1]) != terminal:
        if len(ts) > b.cap:
            raise CriterionError(
                "build_sequences: no termination within {} steps for {}, {}".format(
                    b.cap, b.i, b.j))
        t, s = step(b, ts[-1], ss[-1])
        ts.append(t)
        ss.append(s)
    return ts, ss

def build_sequences(i, j, t, s, n, direction=FORWARD):
    """compute the rigidity sequences of the pair (t, s).

    Parameters
    ----------
    i, j : tuple of int
        indices of rank n
    t, s : int
        starting positions; forward needs 0 < i_2t < j_2s+1 < n+1,
        mirrored needs n+1 > i_2t > j_2s-1 > 0. The pair (i, j) must
        not be degenerate.
    n : int
        rank
    direction : str
        FORWARD or MIRRORED

    Returns
    -------
    RigiditySequences

    Notes
    -----
    Forward sequences increase to (m_i+2, m_j+1) and decrease to
    (-2, -2). Mirrored sequences run the other way, decreasing to
    (-2, -1) and increasing to (m_i+2, m_j+2). A degenerate pair has
    Hom(X_i, X_j[1]) != 0 outright and its sequences never reach the
    terminal values, so it is refused with UsageError.

    """
    if degenerate(i, j, n):
        raise UsageError(
            "build_sequences: {}, {} is degenerate, Hom does not vanish".format(i, j))
    b = _Bounds(i, j, n)
    if direction == FORWARD:
        if not 0 < b.I(2 * t) < b.J(2 * s + 1) < n + 1 or not 0 <= t <= b.mi:
            raise UsageError(
                "build_sequences: ({}, {}) is not a forward pair of {}, {}".format(t, s, i, j))
        plus = _run(b, (t, s), _forward_step, (b.mi + 2, b.mj + 1))
        minus = _run(b, (t, s), _backward_step, (-2, -2))
    elif direction == MIRRORED:
        if not n + 1 > b.I(2 * t) > b.J(2 * s - 1) > 0 or not 0 <= t <= b.mi:
            raise UsageError(
                "build_sequences: ({}, {}) is not a mirrored pair of {}, {}".format(t, s, i, j))
        plus = _run(b, (t, s), _mirrored_forward_step, (-2, -1))
        minus = _run(b, (t, s), _mirrored_backward_step, (b.mi + 2, b.mj + 2))
    else:
        raise UsageError("build_sequences: unknown direction {}".format(direction))
    return RigiditySequences(plus[0], plus[1], minus[0], minus[1])

def _forward_condition1(b, q):
    I, J, mi, mj = b.I, b.J, b.mi, b.mj
    t, s = q.t_plus, q.s_plus
    for r in range(len(t)):
        if t[r] <= mi and not I(2 * t[r]) < I(2 * t[r] + 1) <= J(2 * s[r] + 1):
            return False
        if r < 1:
            continue
        if t[r] <= mi + 1 and not I(2 * t[r] - 2) < I(2 * t[r] - 1) <= J(2 * s[r - 1] + 1):
            return False
        if s[r] <= mj and not J(2 * s[r - 1] + 1) < J(2 * s[r - 1] + 2) <= I(2 * t[r]):
            return False
        if s[r] <= mj and not J(2 * s[r] - 1) < J(2 * s[r]) <= I(2 * t[r]):
            return False
    return True

def _forward_condition2(b, q):
    I, J = b.I, b.J
    t, s = q.t_minus, q.s_minus
    for r in range(len(t)):
        # index r here is the position -r of the sequence
        if s[r] >= 0 and not J(2 * s[r] + 1) > J(2 * s[r]) >= I(2 * t[r]):
            return False
        if r < 1:
            continue
        if s[r] >= -1 and not J(2 * s[r] + 3) > J(2 * s[r] + 2) >= I(2 * t[r - 1]):
            return False
        if t[r] >= -1 and not I(2 * t[r - 1]) > I(2 * t[r - 1] - 1) >= J(2 * s[r] + 1):
            return False
        if t[r] >= -1 and not I(2 * t[r] + 2) > I(2 * t[r] + 1) >= J(2 * s[r] + 1):
            return False
    return True

def _mirrored_condition1(b, q):
    I, J = b.I, b.J
    t, s = q.t_plus, q.s_plus
    for r in range(len(t)):
        if t[r] >= 0 and not I(2 * t[r]) > I(2 * t[r] - 1) >= J(2 * s[r] - 1):
            return False
        if r < 1:
            continue
        if t[r] >= -1 and not I(2 * t[r] + 2) > I(2 * t[r] + 1) >= J(2 * s[r - 1] - 1):
            return False
        if s[r] >= 0 and not J(2 * s[r - 1] - 1) > J(2 * s[r - 1] - 2) >= I(2 * t[r]):
            return False
        if s[r] >= 0 and not J(2 * s[r] + 1) > J(2 * s[r]) >= I(2 * t[r]):
            return False
    return True

def _mirrored_condition2(b, q):
    I, J, mi, mj = b.I, b.J, b.mi, b.mj
    t, s = q.t_minus, q.s_minus
    for r in range(len(t)):
        if s[r] <= mj and not J(2 * s[r] - 1) < J(2 * s[r]) <= I(2 * t[r]):
            return False
        if r < 1:
            continue
        if s[r] <= mj + 1 and not J(2 * s[r] - 3) < J(2 * s[r] - 2) <= I(2 * t[r - 1]):
            return False
        if t[r] <= mi + 1 and not I(2 * t[r - 1]) < I(2 * t[r - 1] + 1) <= J(2 * s[r] - 1):
            return False
        if t[r] <= mi + 1 and not I(2 * t[r] - 2) < I(2 * t[r] - 1) <= J(2 * s[r] - 1):
            return False
    return True

def condition1_holds(i, j, seqs, n, direction=FORWARD):
    """first alternative of the criterion, over the sequence running
    away from the starting pair in positive r"""
    b = _Bounds(i, j, n)
    if direction == FORWARD:
        return _forward_condition1(b, seqs)
    return _mirrored_condition1(b, seqs)

def condition2_holds(i, j, seqs, n, direction=FORWARD):
    """second alternative of the criterion, over negative r"""
    b = _Bounds(i, j, n)
    if direction == FORWARD:
        return _forward_condition2(b, seqs)
    return _mirrored_condition2(b, seqs)

def _pair_holds(i, j, t, s, n, direction):
    seqs = build_sequences(i, j, t, s, n, direction)
    return (condition1_holds(i, j, seqs, n, direction)
            or condition2_holds(i, j, seqs, n, direction))

def degenerate(i, j, n):
    """some label in 1..n is at an even position of i and an odd position of j"""
    return bool(set(i[0::2]) & set(j[1::2]) & set(range(1, n + 1)))

def hom_vanishes(i, j, n, direct=False):
    """decide Hom(X_i, X_j[1]) = 0 in the homotopy category.

    Parameters
    ----------
    i, j : tuple of int
        indices of rank n
    n : int
        rank
    direct : bool
        evaluate mirrored pairs with their own recursion instead of
        relabelling k -> n+1-k and reusing the forward one

    Returns
    -------
    bool

    Notes
    -----
    A shared label between the degree -1 part of X_i and the degree 0
    part of X_j gives a non-null-homotopic identity component, so the
    answer is False before any sequence is built. Otherwise every
    forward and every mirrored pair has to satisfy one of the two
    conditions.

    """
    i, j = check_xi(i, n), check_xi(j, n)
    if degenerate(i, j, n):
        return False
    for t, s in admissible_pairs(i, j, n):
        if not _pair_holds(i, j, t, s, n, FORWARD):
            return False
    mirrored = mirrored_pairs(i, j, n)
    if direct:
        return all(_pair_holds(i, j, t, s, n, MIRRORED) for t, s in mirrored)
    mi_, mj_ = mirror(i, n), mirror(j, n)
    return all(_pair_holds(mi_, mj_, rank(i) - t, rank(j) - s, n, FORWARD)
               for t, s in mirrored)

def compatible(i, j, n, direct=False):
    """X_i + X_j is presilting: Hom vanishes both ways"""
    return hom_vanishes(i, j, n, direct) and hom_vanishes(j, i, n, direct)

@lru_cache(maxsize=32)
def _vanishing_matrix(n, direct):
    xi = enumerate_xi(n)
    vanish = np.array([[hom_vanishes(a, b, n, direct) for b in xi] for a in xi], dtype=bool)
    vanish.setflags(write=False)
    log.info("vanishing_matrix: %d of %d ordered pairs vanish at rank %d",
             int(vanish.sum()), vanish.size, n)
    return vanish

def vanishing_matrix(n, direct=False):
    """boolean matrix V over enumerate_xi(n), V[a, b] iff
    Hom(X_a, X_b[1]) = 0"""
    return _vanishing_matrix(n, bool(direct))

def compatibility_matrix(n, direct=False):
    """symmetric matrix, True where X_a + X_b is presilting"""
    vanish = vanishing_matrix(n, direct)
    return vanish & vanish.T
