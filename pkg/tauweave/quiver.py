# -*- coding: utf-8 -*-
"""Quiver

presentations kQ/I of quiver algebras and their text format.

A path is a tuple of arrow names read left to right: (a, b) means a
then b, so it starts at the source of a and ends at the target of b.
A relation is a list of (coefficient, path) terms whose paths share
length (at least 2), source and target.

Text format, one statement per line, '#' starts a comment::

    vertices 2
    arrow a 1 2
    arrow b 2 1
    relation 1 a b
    relation 1 b a + -1/2 b a

"""
from __future__ import division
import logging
from collections import namedtuple
import networkx as nx
from sympy import Rational
from .errors import PresentationError

log = logging.getLogger(__name__)

Arrow = namedtuple("Arrow", ["name", "source", "target"])


class QuiverPresentation(object):
    """vertices 1..n, named arrows (loops allowed) and homogeneous
    relations"""

    def __init__(self, n, arrows, relations=(), name=None):
        self.n = n
        self.arrows = [Arrow(*a) for a in arrows]
        self.name = name or "quiver"
        self._by_name = {}
        for a in self.arrows:
            if a.name in self._by_name:
                raise PresentationError("QuiverPresentation: duplicate arrow {}".format(a.name))
            if not (1 <= a.source <= n and 1 <= a.target <= n):
                raise PresentationError(
                    "QuiverPresentation: arrow {} leaves the vertices 1..{}".format(a.name, n))
            self._by_name[a.name] = a
        self.relations = [self._check_relation(r) for r in relations]

    def __repr__(self):
        return "QuiverPresentation({}, {} arrows, {} relations)".format(
            self.n, len(self.arrows), len(self.relations))

    def arrow(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise PresentationError("QuiverPresentation: unknown arrow {}".format(name))

    def endpoints(self, path):
        """(source, target) of a nonempty composable path"""
        arrows = [self.arrow(name) for name in path]
        for a, b in zip(arrows, arrows[1:]):
            if a.target != b.source:
                raise PresentationError(
                    "endpoints: {} then {} is not composable".format(a.name, b.name))
        return arrows[0].source, arrows[-1].target

    def _check_relation(self, relation):
        terms = [(Rational(c), tuple(path)) for c, path in relation]
        terms = [(c, path) for c, path in terms if c != 0]
        if not terms:
            raise PresentationError("relation: no nonzero terms")
        lengths = set(len(path) for _, path in terms)
        ends = set(self.endpoints(path) for _, path in terms)
        if len(lengths) != 1 or min(lengths) < 2:
            raise PresentationError(
                "relation: paths must share one length of at least 2, got {}".format(
                    sorted(lengths)))
        if len(ends) != 1:
            raise PresentationError("relation: terms have different endpoints {}".format(
                sorted(ends)))
        return terms

    def loops(self):
        return [a for a in self.arrows if a.source == a.target]

    def reduced_arrows(self):
        """arrows of the quiver with all loops deleted"""
        return [a for a in self.arrows if a.source != a.target]

    def is_double_line(self):
        """the loopless part is 1 <-> 2 <-> ... <-> n, one arrow each way"""
        found = sorted((a.source, a.target) for a in self.reduced_arrows())
        wanted = sorted([(k, k + 1) for k in range(1, self.n)] +
                        [(k + 1, k) for k in range(1, self.n)])
        return found == wanted

    def shortest_path(self, source, target):
        """the unique shortest loopless path from source to target.

        Returns
        -------
        tuple of str or None
            arrow names; () when source == target; None when no path
            exists or the shortest one is not unique.

        """
        if source == target:
            return ()
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(1, self.n + 1))
        for a in self.reduced_arrows():
            graph.add_edge(a.source, a.target, key=a.name)
        try:
            walks = list(nx.all_shortest_paths(graph, source, target))
        except nx.NetworkXNoPath:
            return None
        if len(walks) != 1:
            return None
        names = []
        for u, v in zip(walks[0], walks[0][1:]):
            parallel = list(graph[u][v])
            if len(parallel) != 1:
                return None
            names.append(parallel[0])
        return tuple(names)

def _parse_relation(tokens, lineno):
    terms, current = [], []
    for token in tokens + ["+"]:
        if token == "+":
            if len(current) < 2:
                raise PresentationError(
                    "parse_presentation: line {}: term needs a coefficient and a path".format(
                        lineno))
            try:
                coefficient = Rational(current[0])
            except (TypeError, ValueError, SyntaxError):
                raise PresentationError(
                    "parse_presentation: line {}: bad coefficient {}".format(lineno, current[0]))
            terms.append((coefficient, tuple(current[1:])))
            current = []
        else:
            current.append(token)
    return terms

def parse_presentation(text, name=None):
    """read a presentation in the text format described above"""
    n, arrows, relations = None, [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split("#", 1)[0].split()
        if not tokens:
            continue
        keyword, args = tokens[0], tokens[1:]
        try:
            if keyword == "vertices" and len(args) == 1:
                n = int(args[0])
            elif keyword == "arrow" and len(args) == 3:
                arrows.append((args[0], int(args[1]), int(args[2])))
            elif keyword == "relation" and args:
                relations.append(_parse_relation(args, lineno))
            else:
                raise PresentationError(
                    "parse_presentation: line {}: cannot read {!r}".format(lineno, line))
        except ValueError:
            raise PresentationError(
                "parse_presentation: line {}: bad integer in {!r}".format(lineno, line))
    if n is None or n < 1:
        raise PresentationError("parse_presentation: missing or bad 'vertices' line")
    log.debug("parse_presentation: %d vertices, %d arrows, %d relations",
              n, len(arrows), len(relations))
    return QuiverPresentation(n, arrows, relations, name=name)

def read_presentation(path):
    with open(path) as stream:
        return parse_presentation(stream.read(), name=path)

def format_presentation(p):
    """text form of a presentation, readable by parse_presentation"""
    lines = ["vertices {}".format(p.n)]
    lines += ["arrow {} {} {}".format(*a) for a in p.arrows]
    for relation in p.relations:
        lines.append("relation " + " + ".join(
            "{} {}".format(c, " ".join(path)) for c, path in relation))
    return "\n".join(lines) + "\n"
