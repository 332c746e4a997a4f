"""Exact decision procedures for semigroup problems (Group, Identity,
Inverse) in groups of the form Y x| Z^n, with Y a finitely presented module
over the integer Laurent ring, plus a front-end for finite metabelian
presentations."""

from semizn.algebra import (LaurentSubmodule, ModuleElement, ModulePresentation,
                            SyzygyBasis, residual, strong_groebner, syzygy_basis)
from semizn.closure import ClosureResult, eulerian_closure
from semizn.decide import (Budget, Verdict, decide_group, decide_identity,
                           decide_inverse, locr_refute, oracle_bfs, procedure_a,
                           verify_witness)
from semizn.geometry import LatticePolytope, convex_hull, is_face_accessible, refined_fan
from semizn.ggraph import StepGraph, graph_of_word
from semizn.group import (GeneratorSet, GroupElement, MetabelianPresentation,
                          evaluate_word, magnus_frontend, neutral)
from semizn.laurent import LaurentPoly
from semizn.positions import (check_escape_condition, check_full_image, check_neutral,
                              check_symmetry, crossing_indices, graph_from_positions,
                              leading_indices, position_polynomials)

__version__ = "0.1.0"
