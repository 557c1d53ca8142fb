from .laurent import LaurentPoly1, LaurentPoly2, breadth, poly_mul
from .sparse import SparseMatrixQ, rank

__all__ = ["LaurentPoly1", "LaurentPoly2", "breadth", "poly_mul",
    "SparseMatrixQ", "rank",]
