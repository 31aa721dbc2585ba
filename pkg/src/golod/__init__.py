"""Golodness of Stanley-Reisner rings of low-dimensional simplicial complexes.

Exact simplicial (co)homology over Z, Q, GF(p) and Z/n, Hochster Betti
tables, and decision procedures for Golodness of complexes of dimension at
most two, each negative answer backed by a re-checkable witness.
"""

from .breakability import (coefficient_schedule, edge_product_criterion, pair_breakable,
                           vertex_breakable, vertex_breakable_any)
from .checker import (GOLOD, NOT_GOLOD, UNDETERMINED, BettiTable, DimensionTooHigh, GolodReport,
                      bigraded_betti, check_golod_field, check_golod_integral_2dim,
                      check_golod_ring, product_scan, verify_witness)
from .chordal import is_chordal
from .complex import (ComplexError, EmptySubset, GhostVertex, OutOfRange, SimplicialComplex,
                      build_from_facets, full_subcomplex, is_k_neighborly, join, link,
                      minimal_nonfaces, vertex_deletion, wedge)
from .homology import (GF, QQ, ZZ, Coefficient, Zmod, induced_map,
                       joint_deletion_map, parse_coefficient, product_map)
from .io import ParseError, dumps, load, loads
from .linalg import AbelianGroup, smith_normal_form

__version__ = "0.1.0"
