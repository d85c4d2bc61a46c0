"""Finite commutative rings, their ideal lattices, and checks of the star
property (radicals of arbitrary ideal meets are finite meets of radicals)."""

from .errors import ResourceCapError, RingError, SpecParseError
from .ideals import (Ideal, IdealLattice, PrimaryDecomposition, enumerate_ideals, generate_ideal,
                     ideal_product, ideal_sum, intersect, is_idempotent, is_maximal, is_primary,
                     is_prime, is_radical_ideal, primary_decomposition, radical)
from .rings import (FiniteRing, RingHom, extend_ideal, localize_at_prime, make_poly_quotient,
                    make_residue_ring, parse_ring_spec, product_ring, quotient_ring, validate_axioms)

from .star import IdealFamily, star_check_family, star_check_finite

__version__ = "0.1.0"

__all__ = [
    "ResourceCapError", "RingError", "SpecParseError",
    "Ideal", "IdealLattice", "PrimaryDecomposition", "enumerate_ideals", "generate_ideal",
    "ideal_product", "ideal_sum", "intersect", "is_idempotent", "is_maximal", "is_primary",
    "is_prime", "is_radical_ideal", "primary_decomposition", "radical",
    "FiniteRing", "RingHom", "extend_ideal", "localize_at_prime", "make_poly_quotient",
    "make_residue_ring", "parse_ring_spec", "product_ring", "quotient_ring", "validate_axioms",
    "IdealFamily", "star_check_family", "star_check_finite",
]
