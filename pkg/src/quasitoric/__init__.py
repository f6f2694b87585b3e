"""Exact combinatorial and cohomological invariants of quasitoric manifolds
and projective bundles over quasitoric surfaces."""

from .betti import (BettiTable, check_duality, hochster_table, identify_simplex_polygon_product,
                    polygon_closed_form, product_table, simplex_closed_form)
from .bundles import (BundleSpec, chern_isomorphic, normalize_twists, projectivization_ring,
                      total_chern)
from .charmap import (CharMatrix, ProductSplit, BundleMatrixData, build_bundle_char_matrix,
                      check_nonsingular, detect_bundle_structure, equivalent,
                      extract_factor_matrix, normal_form)
from .cohomring import (GradedRingPresentation, hilbert_function, linear_ideal,
                        normal_form_element, poincare_pairing, present_cohomology, signature_p1,
                        stanley_reisner_ideal, total_sw_class)
from .homology import boundary_matrices, reduced_betti_ranks
from .isomorph import (RingMap, base_preservation, characteristic_class_preservation,
                       fiber_automorphisms, search_iso, verify_iso)
from .poly import Poly
from .polytope import (SimplePolytope, SimplicialComplex, build_polygon, build_simplex,
                       full_subcomplex, nerve_complex, product, validate)

__version__ = "0.1.0"
