# -*- coding: utf-8 -*-
"""
Tau-tilting and the Weak Order
==========================================

Compute the support tau-tilting poset of an algebra whose quiver is a
double line (with loops), combinatorially from the index set Xi, and
match it with the weak order on the symmetric group.

Functions
---------
hasse               -- Hasse quiver of the weak order on S_{n+1}
reduced_word        -- canonical reduced word of a permutation
enumerate_xi        -- the indices of the two-term presilting complexes
hom_vanishes        -- decide Hom(X_i, X_j[1]) = 0 combinatorially
vanishing_matrix    -- hom_vanishes over all ordered pairs of Xi
build_poset         -- support tau-tilting poset from compatible sets
build_isomorphism   -- the order isomorphism from the weak order
parse_presentation  -- read a quiver with relations
build_algebra       -- exact basis and multiplication of kQ/I
check_condition     -- evaluate the three-part condition on an algebra
homotopy_vanishes   -- Hom(X, Y[1]) = 0 for concrete two-term complexes
oracle_poset        -- the poset computed from realized complexes
mizuno_map          -- ideal model of the preprojective algebra
run_acceptance      -- end to end checks behind `tauweave verify`

"""
from .version import __version__, VERSION
from .weak_order import hasse, reduced_word, leq
from .xi import enumerate_xi, hom_vanishes, vanishing_matrix, g_vector
from .silting import build_poset, build_isomorphism, verify_isomorphism
from .quiver import parse_presentation, QuiverPresentation
from .algebra import build_algebra, check_condition, check_radical_symmetry
from .modules import homotopy_vanishes, realize, oracle_poset, support_tau_tilting_order
from .models import preprojective, lambda_m, gamma, mizuno_map
from .acceptance import run_acceptance
