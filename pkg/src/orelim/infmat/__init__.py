from .core import (
    BOTH, COLUMN_FINITE, DIAGONAL, GENERAL, LOWER, ROW_FINITE, UNKNOWN, UPPER,
    DenseMinor, InfMatrix, NoLU, ProductUndefined, ShapeError, SingularMatrix,
    invert_triangular_minor, left_iterated_minor, lu_minor, minor, product,
    product_minor, right_iterated_minor, shift, transpose,
)
from .catalog import NAMES, CatalogError, catalog
