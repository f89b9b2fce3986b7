# -*- coding: utf-8 -*-
"""Application

commandline functions published as entry points in setup.py

Each command builds a dict {file name: text}. With --out the files are
written into that directory, otherwise the primary file is printed.

"""
from __future__ import division
import json
import logging
import os
import sys
from collections import OrderedDict
from optparse import OptionParser
from sys import stderr
from textwrap import dedent
import numpy as np
import pandas as pd
from .version import __version__
from .acceptance import format_report, run_acceptance
from .config import COMMAND_FORMATS, COMMANDS, FORMATS, RunConfig
from .errors import BudgetError, TauweaveError, UsageError, VerificationError
from .models import algebra_from_selector
from .modules import oracle_poset, oracle_vanishing_matrix
from .samples import random_pairs
from .silting import (build_isomorphism, build_poset, g_vectors, pair_readout,
                      verify_isomorphism)
from .weak_order import hasse, inversions
from .xi import compatibility_matrix, enumerate_xi, g_vector, rank, vanishing_matrix

log = logging.getLogger(__name__)

# checked in order, so subclasses come before their bases
EXIT_CODES = [(VerificationError, 1), (BudgetError, 3), (UsageError, 2)]

FULL_CHECK_MAX_RANK = 3

def exit_code(error):
    for cls, code in EXIT_CODES:
        if isinstance(error, cls):
            return code
    raise error

def _label(seq):
    return "".join(str(x) for x in seq) if max(seq, default=0) < 10 else \
        ",".join(str(x) for x in seq)

def _to_json(obj):
    return json.dumps(obj, indent=1) + "\n"

def format_dot(name, labels, edges, ranks=None):
    """DOT text of a directed graph with integer nodes and string labels.

    With ranks given, nodes of equal rank share a `rank=same` subgraph.

    """
    lines = ["digraph {} {{".format(name)]
    lines += ['  {} [label="{}"];'.format(a, label) for a, label in enumerate(labels)]
    if ranks is not None:
        groups = OrderedDict()
        for a, r in sorted(enumerate(ranks), key=lambda x: (x[1], x[0])):
            groups.setdefault(r, []).append(a)
        lines += ["  {{rank=same; {}}}".format(" ".join("{};".format(a) for a in group))
                  for group in groups.values()]
    lines += ["  {} -> {};".format(a, b) for a, b in edges]
    return "\n".join(lines + ["}"]) + "\n"

def cmd_weak_order(config):
    """Hasse quiver of the weak order on S_{n+1}.

    JSON nodes are grouped by length and edges name their endpoints in
    one-line notation.

    """
    lattice = hasse(config.n, config.budget_nodes)
    if config.fmt == "dot":
        name = "weak_order.dot"
        index = lattice.index
        edges = [(index[u], index[v]) for u, v in lattice.edges]
        text = format_dot("weak_order", [_label(w) for w in lattice.nodes], edges,
                          [int(x) for x in lattice.lengths])
    else:
        name = "weak_order.json"
        text = _to_json(OrderedDict([
            ("order", config.n + 1),
            ("nodes", [[list(w) for w in level] for level in lattice.levels]),
            ("edges", [[list(u), list(v)] for u, v in lattice.edges]),
        ]))
    return OrderedDict([(name, text)]), name, 0

def _oracle_check(config, vanish):
    selector = config.algebra or "preprojective:{}".format(config.n)
    A = algebra_from_selector(selector, config.degree_cap)
    if A.n != config.n:
        raise UsageError("{} has {} vertices, not n = {}".format(selector, A.n, config.n))
    oracle = oracle_vanishing_matrix(A)
    if not np.array_equal(oracle, vanish):
        bad = int(np.count_nonzero(oracle != vanish))
        raise VerificationError("criterion and oracle over {} differ on {} pairs".format(
            selector, bad))
    log.info("oracle over %s agrees on %d pairs", selector, vanish.size)
    return A

def gvector_table(n):
    """pandas table of Xi with m_i and the g-vector coordinates"""
    xi = enumerate_xi(n)
    table = pd.DataFrame([g_vector(i, n) for i in xi],
                         columns=["g{}".format(k) for k in range(1, n + 1)])
    table.insert(0, "m", [rank(i) for i in xi])
    table.insert(0, "index", [",".join(str(k) for k in i) for i in xi])
    return table

def cmd_xi(config):
    """Xi, g-vectors and the compatibility matrix"""
    n = config.n
    xi = enumerate_xi(n)
    vanish = vanishing_matrix(n)
    if config.check_mirror and not np.array_equal(vanishing_matrix(n, direct=True), vanish):
        raise VerificationError("direct mirrored recursion disagrees at rank {}".format(n))
    if config.check_oracle:
        _oracle_check(config, vanish)
    compat = compatibility_matrix(n)
    files = OrderedDict()
    files["xi.json"] = _to_json(OrderedDict([
        ("n", n),
        ("xi", [list(i) for i in xi]),
        ("m", [rank(i) for i in xi]),
        ("g_vectors", [[int(x) for x in g_vector(i, n)] for i in xi]),
    ]))
    files["xi_gvectors.tsv"] = gvector_table(n).to_csv(sep="\t", index=False)
    files["xi_compatibility.json"] = _to_json(OrderedDict([
        ("xi", [list(i) for i in xi]),
        ("hom_vanishes", [[int(x) for x in row] for row in vanish]),
        ("compatible", [[int(x) for x in row] for row in compat]),
    ]))
    primary = "xi_gvectors.tsv" if config.fmt == "tsv" else "xi.json"
    return files, primary, 0

def cmd_sttilt(config):
    """support tau-tilting poset labelled by the weak order"""
    n = config.n
    lattice = hasse(n, config.budget_nodes)
    poset = build_poset(n, config.max_silting_rank)
    if config.check_mirror:
        other = build_poset(n, config.max_silting_rank, direct=True)
        if other.nodes != poset.nodes or not np.array_equal(other.order, poset.order):
            raise VerificationError("direct mirrored recursion gives another poset")
    rho = build_isomorphism(poset, lattice)
    pairs = None
    if n > FULL_CHECK_MAX_RANK:
        np.random.seed(config.seed)
        pairs = random_pairs(lattice.nodes, config.samples)
    failures = verify_isomorphism(poset, rho, lattice, pairs)
    if failures:
        raise VerificationError("rho breaks the order on {} pairs, first {}".format(
            len(failures), failures[0]))
    if config.check_oracle:
        A = _oracle_check(config, vanishing_matrix(n))
        other = oracle_poset(A)
        if other.nodes != poset.nodes or not np.array_equal(other.order, poset.order):
            raise VerificationError("oracle poset over {} differs".format(A.presentation.name))
    label = {a: w for w, a in rho.items()}
    # nodes are listed in weak order of their labels
    order = [rho[w] for w in lattice.nodes]
    position = {a: k for k, a in enumerate(order)}
    edges = sorted((position[a], position[b]) for a, b in poset.edges)
    if config.fmt == "dot":
        name = "sttilt.dot"
        text = format_dot("sttilt", [_label(label[a]) for a in order], edges,
                          [inversions(label[a]) for a in order])
    else:
        name = "sttilt.json"
        details = []
        for a in order:
            node = poset.nodes[a]
            readout = pair_readout(node, n)
            details.append(OrderedDict([
                ("g_vectors", g_vectors(node, n).tolist()),
                ("modules", [list(i) for i in readout.modules]),
                ("shifted", readout.shifted),
                ("support", readout.support),
            ]))
        text = _to_json(OrderedDict([
            ("n", n),
            ("nodes", [[list(i) for i in poset.nodes[a]] for a in order]),
            ("edges", [list(e) for e in edges]),
            ("labels", [list(label[a]) for a in order]),
            ("details", details),
        ]))
    return OrderedDict([(name, text)]), name, 0

def cmd_verify(config):
    """acceptance suite; status 1 when a check fails"""
    results = run_acceptance(config)
    status = 0 if all(r.passed for r in results) else 1
    return OrderedDict([("verify.txt", format_report(results))]), "verify.txt", status

HANDLERS = {
    "weak-order": cmd_weak_order,
    "xi": cmd_xi,
    "sttilt": cmd_sttilt,
    "verify": cmd_verify,
}

DESCRIPTIONS = {
    "weak-order": "Emit the Hasse quiver of the weak order on S_{n+1} as JSON or DOT.",
    "xi": dedent("""\
        Emit the index set Xi of rank n, its g-vectors (TSV) and the
        compatibility matrix of the combinatorial criterion."""),
    "sttilt": dedent("""\
        Build the support tau-tilting poset from the combinatorial
        criterion, label it by S_{n+1} and emit it as JSON or DOT."""),
    "verify": dedent("""\
        Run the acceptance checks up to rank n and print one
        PASS/FAIL line per check."""),
}

def _parser(command):
    parser = OptionParser(
        usage="usage: %prog [options]",
        description=DESCRIPTIONS[command],
        version=__version__
    )
    parser.add_option("-n", "--n", type="int", dest="n",
                      help="rank: the algebra has n vertices, S_{n+1} is ordered")
    parser.add_option("--algebra",
                      help=dedent("""\
                      preprojective:n, lambda:n:m, gamma, oriented:n,
                      radical-square-zero:n or file:PATH"""))
    parser.add_option("--format", dest="fmt", choices=FORMATS,
                      help="output format: {}".format(", ".join(COMMAND_FORMATS[command])))
    parser.add_option("--out", help="write output files into this directory")
    parser.add_option("--check-mirror", action="store_true", dest="check_mirror",
                      help="cross-check the direct mirrored recursion")
    parser.add_option("--check-oracle", action="store_true", dest="check_oracle",
                      help="cross-check against homotopy computations over --algebra")
    parser.add_option("--budget-nodes", type="int", dest="budget_nodes",
                      help="largest weak order to enumerate (default 8!)")
    parser.add_option("--max-silting-rank", type="int", dest="max_silting_rank",
                      help="largest rank for clique enumeration (default 5)")
    parser.add_option("--degree-cap", type="int", dest="degree_cap",
                      help="reject presentations with paths past this degree (default 32)")
    parser.add_option("--samples", type="int",
                      help="sampled pairs for checks above rank 3 (default 2000)")
    parser.add_option("--seed", type="int", help="random seed (default 0)")
    parser.add_option("-v", "--verbose", action="store_true",
                      help="log progress to stderr")
    return parser

def _configure_logging(verbose):
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format="%(asctime)s %(name)s %(levelname)s %(message)s",
                        stream=stderr)

def write_files(out, files):
    if not os.path.isdir(out):
        os.makedirs(out)
    for name, text in files.items():
        with open(os.path.join(out, name), "w") as stream:
            stream.write(text)

def run_command(command, argv=None):
    """parse argv for command, run it and return the exit status"""
    parser = _parser(command)
    (options, args) = parser.parse_args(argv)
    if args:
        parser.error("unexpected arguments: {}".format(" ".join(args)))
    try:
        config = RunConfig.from_options(command, options)
        _configure_logging(config.verbose)
        files, primary, status = HANDLERS[command](config)
    except TauweaveError as e:
        stderr.write("Error: {}\n".format(e))
        return exit_code(e)
    if config.out:
        write_files(config.out, files)
    if not config.out or command == "verify":
        sys.stdout.write(files[primary])
    return status

def main(argv=None):
    """tauweave <command> [options]"""
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv or argv[0] not in COMMANDS:
        stderr.write("usage: tauweave {{{}}} [options]\n".format(",".join(COMMANDS)))
        return 2
    return run_command(argv[0], argv[1:])

def weak_order_cmd():
    """commandline weak order"""
    return run_command("weak-order")

def xi_cmd():
    """commandline Xi tables"""
    return run_command("xi")

def sttilt_cmd():
    """commandline support tau-tilting poset"""
    return run_command("sttilt")

def verify_cmd():
    """commandline acceptance suite"""
    return run_command("verify")
