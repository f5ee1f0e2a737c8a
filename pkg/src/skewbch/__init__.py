"""Skew cyclic and skew BCH codes over finite-field towers.

Construction with designed Hamming distance from progression defining sets
and coset closure, distance bounds with exhaustive witnesses, brute-force
distance oracles, and a syndrome decoder that reduces the BCH case to a
twisted Reed-Solomon code through a coordinate permutation.
"""

from .fields import Field, FieldElement, FrobeniusMap, is_irreducible
from .tower import (Tower, extend_automorphism, find_embedding, is_normal,
                    normal_element_search, subfield_basis)
from .conway import conway_polynomial
from .skewpoly import (NormTable, SkewPolyRing, SkewPolynomial, format_poly,
                       galois_twist, gcrd, gcrd_bezout, lclm, lclm_all,
                       lclm_linear, norm, norm_table, pseudobound, right_eval)
from .codes import (DefiningSet, HTParams, SkewCyclicCode, build_bch,
                    build_code, coset_closure, defining_set_of, ht_bound,
                    ht_set, min_distance_bruteforce, min_distance_by_supports)
from .decoder import (DecodeFailure, DecodeReport, Decoder, decode_bch,
                      error_positions, error_values, locator, permute,
                      phi_map, phi_inv, rs_generator, syndrome_matrix,
                      syndromes, unpermute)
from .linearized import (LinearizedPoly, delinearize, linearize,
                         minimal_linearized, op_eval, root_space)

__version__ = "0.1.0"
