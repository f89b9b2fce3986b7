# test tauweave.xi: the index set, shapes, g-vectors and the
# combinatorial Hom-vanishing criterion
#
from __future__ import division
import pytest
import numpy as np
from tauweave.errors import UsageError
from tauweave.xi import (FORWARD, MIRRORED, RigiditySequences, admissible_pairs, build_sequences,
                         check_xi, compatibility_matrix, compatible, condition1_holds,
                         condition2_holds, degenerate, entry, enumerate_xi, g_vector,
                         hom_vanishes, is_projective, is_shifted_projective, mirror,
                         mirrored_pairs, rank, shape, tau_rigid_bound, vanishing_matrix)

RANKS = [1, 2, 3, 4]
BOUNDS = {1: 1, 2: 4, 3: 11}

def test_census():
    for n in range(1, 8):
        xi = enumerate_xi(n)
        assert len(xi) == 2 ** (n + 1) - 2, "rank {}: {} indices".format(n, len(xi))
        assert len(set(tuple(g_vector(i, n)) for i in xi)) == len(xi)

def test_enumeration_order():
    assert enumerate_xi(1) == [(1,), (0, 1, 2)]
    xi = enumerate_xi(2)
    assert xi[:2] == [(1,), (2,)]
    assert all(len(a) <= len(b) for a, b in zip(xi, xi[1:]))

def test_bad_indices():
    for i in [(0,), (3,), (1, 2), (2, 1, 3), (0, 1, 4)]:
        with pytest.raises(UsageError):
            check_xi(i, 2)
    with pytest.raises(UsageError):
        enumerate_xi(0)

def test_shape():
    s = shape((0, 1, 3), 3)
    assert s.minus_one == [3] and s.zero == [1]
    assert s.differential == [(3, 1)]
    s = shape((1, 2, 3), 2)
    assert s.minus_one == [1] and s.zero == [2] and s.differential == [(1, 2)]
    assert shape((2,), 3) == ([2], [], [])

def test_g_vector():
    assert list(g_vector((0, 1, 3), 3)) == [1, 0, -1]
    assert list(g_vector((0, 2, 4), 3)) == [0, 1, 0]
    assert list(g_vector((1,), 3)) == [-1, 0, 0]

def test_projective_kinds():
    assert is_projective((0, 2, 4), 3) and not is_projective((0, 2, 3), 3)
    assert is_shifted_projective((2,)) and not is_shifted_projective((0, 1, 2))
    assert rank((0, 1, 2, 3, 4)) == 2

def test_entry_sentinels():
    i = (1, 2, 3)
    assert [entry(i, p, 3) for p in range(-2, 5)] == [-2, -1, 1, 2, 3, 5, 6]

def test_mirror():
    assert mirror((0, 1, 3), 3) == (1, 3, 4)
    for n in RANKS:
        for i in enumerate_xi(n):
            m = rank(i)
            assert mirror(mirror(i, n), n) == i
            for p in range(-2, 2 * m + 3):
                assert entry(mirror(i, n), p, n) == n + 1 - entry(i, 2 * m - p, n)

def test_pairs():
    assert admissible_pairs((1,), (0, 2, 3), 2) == [(0, 0)]
    assert mirrored_pairs((2,), (0, 1, 3), 2) == [(0, 1)]

def test_sequences_start_at_pair():
    for n in [2, 3]:
        xi = enumerate_xi(n)
        for i in xi:
            for j in xi:
                if degenerate(i, j, n):
                    continue
                for t, s in admissible_pairs(i, j, n):
                    seqs = build_sequences(i, j, t, s, n, FORWARD)
                    assert seqs.t_plus[0] == t and seqs.s_plus[0] == s
                    assert seqs.t_minus[0] == t and seqs.s_minus[0] == s
                    assert (seqs.t_plus[-1], seqs.s_plus[-1]) == (rank(i) + 2, rank(j) + 1)
                    assert (seqs.t_minus[-1], seqs.s_minus[-1]) == (-2, -2)

def test_sequences_small_pair():
    seqs = build_sequences((1,), (1, 2, 3), 0, 0, 2, FORWARD)
    assert (seqs.t_plus[1], seqs.s_plus[1]) == (1, 1)
    assert (seqs.t_minus[1], seqs.s_minus[1]) == (-1, -1)

def test_sequences_refuse_degenerate_pair():
    i, j = (1,), (0, 1, 2, 3, 4)
    assert (0, 1) in admissible_pairs(i, j, 3)
    with pytest.raises(UsageError):
        build_sequences(i, j, 0, 1, 3, FORWARD)
    with pytest.raises(UsageError):
        build_sequences((1,), (0, 2, 3), 0, 1, 2, FORWARD)

def test_conditions():
    i, j = (1,), (1, 2, 3)
    seqs = build_sequences(i, j, 0, 0, 2, FORWARD)
    # condition (1) needs i_1 = n+2 <= j_1 = 2
    assert not condition1_holds(i, j, seqs, 2)
    assert condition2_holds(i, j, seqs, 2)
    assert hom_vanishes(i, j, 2)
    empty = RigiditySequences([], [], [], [])
    for direction in [FORWARD, MIRRORED]:
        assert condition1_holds(i, j, empty, 2, direction)
        assert condition2_holds(i, j, empty, 2, direction)
    assert admissible_pairs((0, 1, 2), (2,), 2) == []
def test_projective_source_vanishes():
    for n in RANKS:
        for k in range(1, n + 1):
            for j in enumerate_xi(n):
                assert hom_vanishes((0, k, n + 1), j, n), "P_{} against {}".format(k, j)

def test_shifted_target_vanishes():
    for n in RANKS:
        for k in range(1, n + 1):
            for i in enumerate_xi(n):
                assert hom_vanishes(i, (k,), n), "{} against P_{}[1]".format(i, k)

def test_degenerate():
    assert degenerate((1,), (0, 1, 2), 1)
    assert not hom_vanishes((1,), (0, 1, 2), 1)
    assert not degenerate((0, 1, 2), (1,), 1)

def test_presilting():
    for n in RANKS:
        vanish = vanishing_matrix(n)
        assert vanish.diagonal().all(), "rank {}: some X_i is not presilting".format(n)

def test_matrix_matches_function():
    n = 3
    xi = enumerate_xi(n)
    vanish = vanishing_matrix(n)
    compat = compatibility_matrix(n)
    assert np.array_equal(compat, compat.T)
    for a, i in enumerate(xi):
        for b, j in enumerate(xi):
            assert vanish[a, b] == hom_vanishes(i, j, n)
            assert compat[a, b] == compatible(i, j, n)

def test_direct_mirrored_recursion():
    for n in RANKS:
        assert np.array_equal(vanishing_matrix(n, direct=True), vanishing_matrix(n)), \
            "direct recursion differs at rank {}".format(n)

def test_tau_rigid_bound():
    for n, bound in BOUNDS.items():
        assert tau_rigid_bound(n) == bound
