"""Lazily generated infinite matrices and their upper-left minors.

Indexing is 1-based everywhere.  An :class:`InfMatrix` is a pure entry
generator plus a shape tag; nothing infinite is ever materialised.  Every
computation goes through n-minors, which are finite and exact.
"""

from __future__ import annotations

import json
from typing import Callable, Optional

from ..exactpoly import RatFunc, parse_ratfunc

LOWER = "lower_triangular"
UPPER = "upper_triangular"
DIAGONAL = "diagonal"
GENERAL = "general"
SHAPES = (LOWER, UPPER, DIAGONAL, GENERAL)

ROW_FINITE = "row_finite"
COLUMN_FINITE = "column_finite"
BOTH = "both"
UNKNOWN = "unknown"

_ZERO = RatFunc.coerce(0)
_ONE = RatFunc.coerce(1)


class ShapeError(ValueError):
    pass


class ProductUndefined(ValueError):
    pass


class NoLU(ArithmeticError):
    def __init__(self, k: int):
        super().__init__(f"leading principal {k}-minor is singular; no LU factorization")
        self.k = k


class SingularMatrix(ArithmeticError):
    pass


def _default_finiteness(shape):
    return {LOWER: ROW_FINITE, UPPER: COLUMN_FINITE, DIAGONAL: BOTH}.get(shape, UNKNOWN)


class InfMatrix:
    """Infinite matrix given by ``entry(i, j)`` for i, j >= 1.

    ``row_extent(i)`` bounds the last possibly nonzero column of row i of a
    row-finite matrix; ``col_extent(j)`` does the same for columns.
    """

    def __init__(self, entry: Callable[[int, int], object], shape: str = GENERAL,
                 name: str = "", finiteness: Optional[str] = None,
                 row_extent: Optional[Callable[[int], int]] = None,
                 col_extent: Optional[Callable[[int], int]] = None):
        if shape not in SHAPES:
            raise ValueError(f"unknown shape {shape!r}")
        self._entry = entry
        self.shape = shape
        self.name = name
        if row_extent is None and shape in (LOWER, DIAGONAL):
            row_extent = lambda i: i
        if col_extent is None and shape in (UPPER, DIAGONAL):
            col_extent = lambda j: j
        self.row_extent = row_extent
        self.col_extent = col_extent
        if finiteness is None:
            if row_extent and col_extent:
                finiteness = BOTH
            elif row_extent:
                finiteness = ROW_FINITE
            elif col_extent:
                finiteness = COLUMN_FINITE
            else:
                finiteness = _default_finiteness(shape)
        self.finiteness = finiteness
        self._memo: dict = {}

    def entry(self, i: int, j: int) -> RatFunc:
        if i < 1 or j < 1:
            raise IndexError("infinite matrices are indexed from 1")
        if self.shape == LOWER and j > i or self.shape == UPPER and j < i:
            return _ZERO
        if self.shape == DIAGONAL and i != j:
            return _ZERO
        key = (i, j)
        val = self._memo.get(key)
        if val is None:
            val = RatFunc.coerce(self._entry(i, j))
            self._memo[key] = val
        return val

    __call__ = entry

    def is_row_finite(self) -> bool:
        return self.finiteness in (ROW_FINITE, BOTH)

    def is_column_finite(self) -> bool:
        return self.finiteness in (COLUMN_FINITE, BOTH)

    def __add__(self, other: InfMatrix) -> InfMatrix:
        return _combine(self, other, 1)

    def __sub__(self, other: InfMatrix) -> InfMatrix:
        return _combine(self, other, -1)

    def __neg__(self):
        return InfMatrix(lambda i, j: -self.entry(i, j), self.shape, f"-{self.name}",
                         self.finiteness, self.row_extent, self.col_extent)

    def __matmul__(self, other: InfMatrix) -> InfMatrix:
        return product(self, other)

    def __repr__(self):
        return f"InfMatrix({self.name or '?'}, {self.shape})"


def _combine(a: InfMatrix, b: InfMatrix, sign: int) -> InfMatrix:
    shape = a.shape if a.shape == b.shape else GENERAL
    if {a.shape, b.shape} <= {LOWER, DIAGONAL}:
        shape = LOWER
    elif {a.shape, b.shape} <= {UPPER, DIAGONAL}:
        shape = UPPER
    row_ext = col_ext = None
    if a.row_extent and b.row_extent:
        row_ext = lambda i: max(a.row_extent(i), b.row_extent(i))
    if a.col_extent and b.col_extent:
        col_ext = lambda j: max(a.col_extent(j), b.col_extent(j))
    op = "+" if sign > 0 else "-"
    return InfMatrix(lambda i, j: a.entry(i, j) + b.entry(i, j) * sign, shape,
                     f"({a.name}{op}{b.name})", row_extent=row_ext, col_extent=col_ext)


def _product_shape(a: InfMatrix, b: InfMatrix) -> str:
    if a.shape == DIAGONAL:
        return b.shape
    if b.shape == DIAGONAL:
        return a.shape
    if a.shape == b.shape and a.shape in (LOWER, UPPER):
        return a.shape
    return GENERAL


def _summation_bound(a: InfMatrix, b: InfMatrix, i: int, j: int) -> int:
    bounds = []
    if a.shape in (LOWER, DIAGONAL):
        bounds.append(i)
    if b.shape in (UPPER, DIAGONAL):
        bounds.append(j)
    if a.row_extent is not None:
        bounds.append(a.row_extent(i))
    if b.col_extent is not None:
        bounds.append(b.col_extent(j))
    if not bounds:
        raise ProductUndefined(
            f"product {a.name or 'A'}*{b.name or 'B'} needs A row-finite or B column-finite")
    return min(bounds)


def product(a: InfMatrix, b: InfMatrix) -> InfMatrix:
    """Lazy product AB, defined when A is row-finite or B column-finite."""
    _summation_bound(a, b, 1, 1)  # raise early if undefined

    def entry(i, j):
        acc = _ZERO
        lo = 1
        if a.shape in (UPPER, DIAGONAL):
            lo = max(lo, i)
        if b.shape in (LOWER, DIAGONAL):
            lo = max(lo, j)
        for k in range(lo, _summation_bound(a, b, i, j) + 1):
            x = a.entry(i, k)
            if x:
                y = b.entry(k, j)
                if y:
                    acc = acc + x * y
        return acc

    row_ext = col_ext = None
    if a.row_extent and b.row_extent:
        row_ext = lambda i: max(b.row_extent(k) for k in range(1, a.row_extent(i) + 1))
    if a.col_extent and b.col_extent:
        col_ext = lambda j: max(a.col_extent(k) for k in range(1, b.col_extent(j) + 1))
    return InfMatrix(entry, _product_shape(a, b), f"{a.name}*{b.name}",
                     row_extent=row_ext, col_extent=col_ext)


def shift(a: InfMatrix) -> InfMatrix:
    """s(A) = diag(1, A)."""
    def entry(i, j):
        if i == 1 or j == 1:
            return _ONE if i == j else _ZERO
        return a.entry(i - 1, j - 1)

    row_ext = (lambda i: 1 if i == 1 else a.row_extent(i - 1) + 1) if a.row_extent else None
    col_ext = (lambda j: 1 if j == 1 else a.col_extent(j - 1) + 1) if a.col_extent else None
    return InfMatrix(entry, a.shape, f"s({a.name})", a.finiteness, row_ext, col_ext)


def transpose(a: InfMatrix) -> InfMatrix:
    shape = {LOWER: UPPER, UPPER: LOWER}.get(a.shape, a.shape)
    return InfMatrix(lambda i, j: a.entry(j, i), shape, f"{a.name}^t",
                     row_extent=a.col_extent, col_extent=a.row_extent)


class DenseMinor:
    """An immutable n x n block of RatFunc entries."""

    __slots__ = ("n", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(RatFunc.coerce(v) for v in row) for row in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("a minor must be square")
        self.n = n
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> DenseMinor:
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i - 1][j - 1]

    def __eq__(self, other):
        if not isinstance(other, DenseMinor):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __matmul__(self, other: DenseMinor) -> DenseMinor:
        if self.n != other.n:
            raise ValueError("minor sizes differ")
        n = self.n
        cols = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out_row = []
            for col in cols:
                acc = _ZERO
                for x, y in zip(row, col):
                    if x and y:
                        acc = acc + x * y
                out_row.append(acc)
            out.append(out_row)
        return DenseMinor(out)

    def __add__(self, other):
        return DenseMinor([[x + y for x, y in zip(r, s)]
                           for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return DenseMinor([[x - y for x, y in zip(r, s)]
                           for r, s in zip(self.entries, other.entries)])

    def transpose(self) -> DenseMinor:
        return DenseMinor(list(zip(*self.entries)))

    def truncate(self, m: int) -> DenseMinor:
        return DenseMinor([row[:m] for row in self.entries[:m]])

    def is_lower(self) -> bool:
        return all(not self.entries[i][j] for i in range(self.n) for j in range(i + 1, self.n))

    def is_upper(self) -> bool:
        return all(not self.entries[i][j] for i in range(self.n) for j in range(i))

    def is_polynomial(self) -> bool:
        return all(v.is_poly() for row in self.entries for v in row)

    def first_difference(self, other: DenseMinor):
        """(i, j, expected, actual) for the first entry where other differs from self."""
        for i in range(self.n):
            for j in range(self.n):
                if self.entries[i][j] != other.entries[i][j]:
                    return i + 1, j + 1, self.entries[i][j], other.entries[i][j]
        return None

    def strings(self, var: str = "x"):
        return [[v.to_string(var) for v in row] for row in self.entries]

    def to_json(self, name: str = "") -> str:
        return json.dumps({"name": name, "n": self.n, "entries": self.strings()})

    @classmethod
    def from_json(cls, text: str) -> tuple[str, DenseMinor]:
        obj = json.loads(text)
        entries = [[parse_ratfunc(s) for s in row] for row in obj["entries"]]
        minor_ = cls(entries)
        if minor_.n != obj["n"]:
            raise ValueError("declared size does not match entries")
        return obj["name"], minor_

    def to_csv(self) -> str:
        import csv
        import io
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(self.strings())
        return buf.getvalue()

    def pretty(self) -> str:
        cells = self.strings()
        width = max((len(s) for row in cells for s in row), default=1)
        return "\n".join("[ " + "  ".join(s.rjust(width) for s in row) + " ]" for row in cells)

    def __repr__(self):
        return f"DenseMinor(n={self.n}, {self.strings()})"


def minor(a: InfMatrix, n: int) -> DenseMinor:
    """Upper-left n x n corner; the shape tag is checked on the extracted block."""
    if n < 1:
        raise ValueError("minor size must be at least 1")
    rows = [[a.entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    out = DenseMinor(rows)
    if a.shape in (LOWER, DIAGONAL) and not out.is_lower():
        raise ShapeError(f"{a.name} is tagged {a.shape} but has entries above the diagonal")
    if a.shape in (UPPER, DIAGONAL) and not out.is_upper():
        raise ShapeError(f"{a.name} is tagged {a.shape} but has entries below the diagonal")
    return out


def product_minor(a: InfMatrix, b: InfMatrix, n: int) -> DenseMinor:
    if a.shape in (LOWER, DIAGONAL) or b.shape in (UPPER, DIAGONAL):
        return minor(a, n) @ minor(b, n)
    return minor(product(a, b), n)


def _shifted_minor(base: DenseMinor, k: int, n: int) -> DenseMinor:
    # n-minor of s^k(T) from the (n-k)-minor of T
    rows = []
    for i in range(n):
        if i < k:
            rows.append([_ONE if i == j else _ZERO for j in range(n)])
        else:
            rows.append([_ZERO] * k + list(base.entries[i - k][: n - k]))
    return DenseMinor(rows)


def _require_lower(t: InfMatrix):
    if t.shape not in (LOWER, DIAGONAL):
        raise ShapeError(f"iterated products need a lower triangular matrix, got {t.shape}")


def left_iterated_minor(t: InfMatrix, n: int) -> DenseMinor:
    """n-minor of T^L = ... s^2(T) s(T) T; s^k(T) has identity n-minor for k >= n."""
    _require_lower(t)
    base = minor(t, n)
    acc = _shifted_minor(base, n - 1, n)
    for k in range(n - 2, -1, -1):
        acc = acc @ _shifted_minor(base, k, n)
    return acc


def right_iterated_minor(t: InfMatrix, n: int) -> DenseMinor:
    """n-minor of T^R = T s(T) s^2(T) ..."""
    _require_lower(t)
    base = minor(t, n)
    acc = base
    for k in range(1, n):
        acc = acc @ _shifted_minor(base, k, n)
    return acc


def lu_minor(a, n: Optional[int] = None) -> tuple[DenseMinor, DenseMinor]:
    """Doolittle LU (unit lower L) of an n-minor over the rational-function field."""
    m = a if isinstance(a, DenseMinor) else minor(a, n)
    n = m.n
    A = m.entries
    L = [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
    U = [[_ZERO] * n for _ in range(n)]
    for k in range(n):
        for j in range(k, n):
            acc = A[k][j]
            for s in range(k):
                if L[k][s] and U[s][j]:
                    acc = acc - L[k][s] * U[s][j]
            U[k][j] = acc
        if not U[k][k]:
            raise NoLU(k + 1)
        pivot = U[k][k]
        for i in range(k + 1, n):
            acc = A[i][k]
            for s in range(k):
                if L[i][s] and U[s][k]:
                    acc = acc - L[i][s] * U[s][k]
            L[i][k] = acc / pivot if acc else _ZERO
    return DenseMinor(L), DenseMinor(U)


def invert_triangular_minor(m: DenseMinor) -> DenseMinor:
    n = m.n
    lower, upper = m.is_lower(), m.is_upper()
    if not (lower or upper):
        raise ShapeError("only triangular minors are inverted here")
    if not lower:
        return invert_triangular_minor(m.transpose()).transpose()
    A = m.entries
    for i in range(n):
        if not A[i][i]:
            raise SingularMatrix(f"zero diagonal entry at ({i + 1}, {i + 1})")
    inv = [[_ZERO] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = 1 / A[j][j]
        for i in range(j + 1, n):
            acc = _ZERO
            for k in range(j, i):
                if A[i][k] and inv[k][j]:
                    acc = acc + A[i][k] * inv[k][j]
            inv[i][j] = -acc / A[i][i] if acc else _ZERO
    return DenseMinor(inv)
