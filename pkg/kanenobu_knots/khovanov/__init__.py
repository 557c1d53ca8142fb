from .complex import GradedComplex, build_complex
from .homology import BigradedDims, homology_dims, lee_degrees, normalize, raw_homology_dims
from .structure import (
    euler_characteristic,
    euler_check,
    knight_move_check,
    kunneth,
    les_subadditivity_check,
    mirror_dims,
    poincare_polynomial,
    thinness_s,
)

__all__ = [
    "BigradedDims",
    "GradedComplex",
    "build_complex",
    "euler_characteristic",
    "euler_check",
    "homology_dims",
    "knight_move_check",
    "kunneth",
    "lee_degrees",
    "les_subadditivity_check",
    "mirror_dims",
    "normalize",
    "poincare_polynomial",
    "raw_homology_dims",
    "thinness_s",
]
