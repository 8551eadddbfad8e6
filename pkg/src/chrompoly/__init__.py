"""Exact chromatic polynomials and the identities they satisfy."""

from .chromatic import (broken_circuits, chromatic_number, chromatic_poly_dc,
                        chromatic_poly_interp, chromatic_poly_nbc, count_proper_colorings,
                        nbc_report)
from .errors import BudgetExceeded, GraphError, PolynomialError, TheoremViolation
from .graph import (Graph, build_graph, canonical_key, complete, components, contract_edge,
                    cycle, delete_edge, edgeless, family, is_isomorphic, path, random_graph,
                    simple_cycles)
from .polynomial import IntPoly, from_roots, interpolate, is_log_concave

__version__ = "0.1.0"
