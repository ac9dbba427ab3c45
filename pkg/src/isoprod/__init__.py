"""Classification of regular surfaces isogenous to a higher product of
curves: moduli components and their first homology groups, computed exactly
from a finite group and a pair of branching signatures."""

from .braid import BraidOrbit, hurwitz_move, hurwitz_move_inverse, orbit_partition
from .classify import ComponentRecord, classify
from .errors import (ConsistencyError, InconsistentDataError, IsoprodError,
                     ResourceLimitError, ValidationError)
from .groups import (FiniteGroup, close, compose, format_cycles, identity_perm,
                     inverse_perm, load_group_file, parse_cycles,
                     parse_group_file)
from .homology import (AbelianInvariants, CosetTable, FpPresentation,
                       abelian_invariants, diagonal_coset_table,
                       direct_product_presentation, first_homology,
                       polygonal_presentation, rewrite_presentation)
from .automorphisms import apply_to_vector, compute_aut, inner_automorphism
from .vectors import (Signature, SurfaceInvariants, Vector, curve_genus,
                      disjoint, enumerate_vectors, parse_signature,
                      stabilizer_set, surface_invariants)

__version__ = "0.1.0"

__all__ = [
    "AbelianInvariants", "BraidOrbit", "ComponentRecord", "ConsistencyError",
    "CosetTable", "FiniteGroup", "FpPresentation", "InconsistentDataError",
    "IsoprodError", "ResourceLimitError", "Signature", "SurfaceInvariants",
    "ValidationError", "Vector", "abelian_invariants", "apply_to_vector",
    "classify", "close", "compose", "compute_aut", "curve_genus",
    "diagonal_coset_table", "direct_product_presentation", "disjoint",
    "enumerate_vectors", "first_homology", "format_cycles", "hurwitz_move",
    "hurwitz_move_inverse", "identity_perm", "inner_automorphism",
    "inverse_perm", "load_group_file", "orbit_partition", "parse_cycles",
    "parse_group_file", "parse_signature", "polygonal_presentation",
    "rewrite_presentation", "stabilizer_set", "surface_invariants",
]
