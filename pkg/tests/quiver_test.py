# test tauweave.quiver: presentations, the text format and shortest
# loopless paths
#
import pytest
from sympy import Rational
from tauweave.errors import PresentationError
from tauweave.quiver import QuiverPresentation, format_presentation, parse_presentation
from tauweave.models import lambda_m, oriented_line, preprojective

TEXT = """
# double line on two vertices
vertices 2
arrow a 1 2
arrow b 2 1
arrow l 1 1
relation 1 a b + -1/2 l l
relation 1 b a
"""

def test_parse():
    p = parse_presentation(TEXT, name="sample")
    assert p.n == 2 and p.name == "sample"
    assert [a.name for a in p.arrows] == ["a", "b", "l"]
    assert p.relations[0] == [(Rational(1), ("a", "b")), (Rational(-1, 2), ("l", "l"))]
    assert p.endpoints(("a", "b")) == (1, 1)
    assert [a.name for a in p.loops()] == ["l"]
    assert p.is_double_line()

def test_format_parses_back():
    p = preprojective(3)
    q = parse_presentation(format_presentation(p))
    assert q.arrows == p.arrows
    assert q.relations == p.relations

def test_bad_text():
    for text in ["arrow a 1 2\n", "vertices 2\narrow a 1\n", "vertices x\n",
                 "vertices 2\narrow a 1 2\nrelation 1 a a\n",
                 "vertices 2\narrow a 1 2\narrow b 2 1\nrelation x a b\n"]:
        with pytest.raises(PresentationError):
            parse_presentation(text)

def test_bad_presentations():
    with pytest.raises(PresentationError):
        QuiverPresentation(2, [("a", 1, 2), ("a", 2, 1)])
    with pytest.raises(PresentationError):
        QuiverPresentation(2, [("a", 1, 3)])
    arrows = [("a", 1, 2), ("b", 2, 1)]
    with pytest.raises(PresentationError):
        QuiverPresentation(2, arrows, [[(1, ("a",))]])
    with pytest.raises(PresentationError):
        QuiverPresentation(2, arrows, [[(1, ("a", "b")), (1, ("b", "a"))]])
    with pytest.raises(PresentationError):
        QuiverPresentation(2, arrows, [[(1, ("a", "b", "a")), (1, ("a", "b"))]])

def test_shortest_path():
    p = preprojective(3)
    assert p.shortest_path(1, 3) == ("a1", "a2")
    assert p.shortest_path(3, 1) == ("a2*", "a1*")
    assert p.shortest_path(2, 2) == ()
    assert lambda_m(3, 2).shortest_path(1, 2) == ("a1",)
    assert oriented_line(3).shortest_path(3, 1) is None

def test_double_line():
    assert preprojective(4).is_double_line()
    assert lambda_m(3, 3).is_double_line()
    assert not oriented_line(3).is_double_line()
