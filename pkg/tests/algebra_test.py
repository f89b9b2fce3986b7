# test tauweave.algebra: degreewise bases of the model algebras, the
# multiplication and the three-part condition
#
import pytest
from sympy import Rational
from tauweave.algebra import (build_algebra, check_condition, check_radical_symmetry, hom_space,
                              shortest_path_class)
from tauweave.errors import PresentationError, UsageError
from tauweave.models import (gamma, lambda_m, oriented_line, preprojective,
                             radical_square_zero_double)
from tauweave.quiver import QuiverPresentation

DIMENSIONS = [
    (preprojective(1), 1),
    (preprojective(2), 4),
    (preprojective(3), 10),
    (lambda_m(2, 1), 4),
    (lambda_m(3, 1), 9),
    (lambda_m(3, 2), 12),
    (oriented_line(3), 6),
]

def test_dimensions():
    for p, dim in DIMENSIONS:
        A = build_algebra(p)
        assert A.dim == dim, "{}: expected dimension {}, got {}".format(p.name, dim, A.dim)

def test_graded_dimensions():
    assert build_algebra(preprojective(3)).dims == [3, 4, 3]

def test_preprojective_relation():
    A = build_algebra(preprojective(3))
    left = A.path(("a1*", "a1"))
    right = A.path(("a2", "a2*"))
    assert left and left == right
    assert A.path(("a1", "a1*")) == {}
    assert A.path(("a1", "a2", "a2*")) == {}

def test_multiplication():
    A = build_algebra(preprojective(2))
    e1, e2 = A.idempotent(1), A.idempotent(2)
    a = A.path(("a1",))
    assert A.multiply(e1, a) == a and A.multiply(a, e2) == a
    assert A.multiply(a, e1) == {}
    assert A.multiply(A.path(("a1",)), A.path(("a1*",))) == {}
    assert A.check_associativity()

def test_hom_space():
    A = build_algebra(preprojective(2))
    assert len(hom_space(A, 1, 2)) == 1
    assert len(hom_space(A, 1, 1)) == 1
    B = build_algebra(preprojective(3))
    assert len(hom_space(B, 2, 2)) == 2

def test_shortest_path_class():
    A = build_algebra(preprojective(3))
    assert shortest_path_class(A, 1, 3) == A.path(("a1", "a2"))
    assert shortest_path_class(A, 2, 2) == A.idempotent(2)
    assert shortest_path_class(build_algebra(oriented_line(2)), 2, 1) is None

def test_not_nilpotent():
    p = QuiverPresentation(1, [("l", 1, 1)], name="free loop")
    with pytest.raises(PresentationError):
        build_algebra(p, degree_cap=5)
    with pytest.raises(UsageError):
        build_algebra(preprojective(2), degree_cap=1)

def test_scaled_relation():
    p = QuiverPresentation(2, [("a", 1, 2), ("b", 2, 1)],
                           [[(Rational(3), ("a", "b"))], [(Rational(-1, 2), ("b", "a"))]])
    assert build_algebra(p).dim == 4

def test_condition_holds():
    for p in [preprojective(2), preprojective(3), preprojective(4), lambda_m(2, 1),
              lambda_m(3, 2), lambda_m(3, 3), gamma()]:
        report = check_condition(build_algebra(p))
        assert all(report), "{} fails: {}".format(p.name, report)

def test_condition_fails():
    report = check_condition(build_algebra(oriented_line(3)))
    assert not report.a
    report = check_condition(build_algebra(radical_square_zero_double(3)))
    assert report.a and not report.c

def test_gamma():
    A = build_algebra(gamma())
    assert len(A.radical_corner(1, 1)) >= 5
    assert len(A.radical_corner(2, 2)) >= 5
    assert A.check_associativity()

def test_radical_symmetry():
    for p in [preprojective(3), lambda_m(3, 2), gamma()]:
        assert check_radical_symmetry(build_algebra(p)), p.name
