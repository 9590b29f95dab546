"""Exact (b,c)-inverses and named generalized inverses in *-monoids and *-rings."""

from .context import MatrixStarRing, StarMonoid, StarRing
from .engines import Kind, bc_inverse, left_bc_inverse, named_inverse, right_bc_inverse
from .errors import (CapabilityError, GinvError, InputError, InvariantViolation, ResourceError,
                     ScalarDivisionError, UnsupportedContextError, ValidationError)
from .finite import FiniteStarMonoid, FiniteStarRing, build_matrix_structure, validate, zmod_ring
from .matrix import Involution, Matrix
from .scalars import QI, GaussianRational, ModularInt, ScalarField, zmod

__version__ = "0.1.0"

__all__ = [
    "CapabilityError", "FiniteStarMonoid", "FiniteStarRing", "GaussianRational", "GinvError",
    "InputError", "InvariantViolation", "Involution", "Kind", "Matrix", "MatrixStarRing",
    "ModularInt", "QI", "ResourceError", "ScalarDivisionError", "ScalarField", "StarMonoid",
    "StarRing", "UnsupportedContextError", "ValidationError", "bc_inverse",
    "build_matrix_structure", "left_bc_inverse", "named_inverse", "right_bc_inverse",
    "validate", "zmod", "zmod_ring",
]
