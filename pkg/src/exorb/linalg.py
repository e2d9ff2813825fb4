"""Exact linear algebra over the rationals.

Everything here is arbitrary-precision and deterministic: matrices hold
Fractions, elimination is integer-preserving (rows are cleared of
denominators, combined integrally and stripped of common content), and
pivots are always the first nonzero entry in column order.  No floating
point enters at any stage.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

__all__ = ["RatMatrix", "rref", "rank", "kernel", "solve", "intersect", "member"]


def _exact(x: Fraction | int) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point is not allowed; use Fraction or int")
    return Fraction(x)


class RatMatrix:
    """An immutable dense matrix of exact rationals."""

    __slots__ = ("_rows", "_cols")

    def __init__(self, rows: Iterable[Iterable[Fraction | int]], cols: int | None = None):
        data = tuple(tuple(_exact(x) for x in row) for row in rows)
        if data:
            widths = {len(r) for r in data}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            width = widths.pop()
            if cols is not None and cols != width:
                raise ValueError("cols disagrees with row length")
            cols = width
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        self._rows = data
        self._cols = cols

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def data(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RatMatrix)
            and self._cols == other._cols
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self._cols, self._rows))

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols})"


def _strip(row: list[int]) -> None:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for i, x in enumerate(row):
            if x:
                row[i] = x // g


def _int_rows(m: RatMatrix) -> list[list[int]]:
    out = []
    for row in m.data:
        scale = 1
        for x in row:
            d = x.denominator
            if d != 1:
                scale = scale * d // gcd(scale, d)
        ints = [int(x * scale) for x in row] if scale != 1 else [int(x) for x in row]
        _strip(ints)
        out.append(ints)
    return out


def _eliminate(rows: list[list[int]], cols: int) -> tuple[list[list[int]], list[int]]:
    """In-place fraction-free reduction to (unnormalized) reduced echelon form."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(cols):
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv_row = rows[r]
        if piv_row[c] < 0:
            rows[r] = piv_row = [-x for x in piv_row]
        p = piv_row[c]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                ri = rows[i]
                rows[i] = combined = [p * a - f * b for a, b in zip(ri, piv_row)]
                _strip(combined)
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: RatMatrix) -> tuple[RatMatrix, tuple[int, ...]]:
    """Reduced row-echelon form and the pivot columns.

    The row space is preserved; pivot entries are normalized to 1, so the
    result is the canonical basis of the row space.
    """
    rows, pivots = _eliminate(_int_rows(m), m.cols)
    out = []
    for row, c in zip(rows, pivots):
        p = row[c]
        out.append([Fraction(x, p) for x in row])
    return RatMatrix(out, m.cols), tuple(pivots)


def rank(m: RatMatrix) -> int:
    return len(rref(m)[1])


def kernel(m: RatMatrix) -> RatMatrix:
    """Canonical basis of the right null space."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    rows = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -reduced.data[r][f]
        rows.append(v)
    return rref(RatMatrix(rows, m.cols))[0]


def solve(m: RatMatrix, rhs: Sequence[Fraction | int]) -> tuple[Fraction, ...] | None:
    """One solution of m x = rhs, or None when the system is inconsistent."""
    if len(rhs) != m.rows:
        raise ValueError("right-hand side has wrong length")
    aug = RatMatrix(
        [list(row) + [_exact(b)] for row, b in zip(m.data, rhs)], m.cols + 1
    )
    reduced, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for r, c in enumerate(pivots):
        x[c] = reduced.data[r][m.cols]
    return tuple(x)


def intersect(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Canonical basis of the intersection of two row spaces."""
    if a.cols != b.cols:
        raise ValueError("ambient dimensions differ")
    stacked_cols = [
        [a.data[i][c] for i in range(a.rows)] + [b.data[j][c] for j in range(b.rows)]
        for c in range(a.cols)
    ]
    coeffs = kernel(RatMatrix(stacked_cols, a.rows + b.rows))
    vectors = []
    for row in coeffs.data:
        v = [Fraction(0)] * a.cols
        for i in range(a.rows):
            u = row[i]
            if u:
                for c, x in enumerate(a.data[i]):
                    if x:
                        v[c] += u * x
        vectors.append(v)
    return rref(RatMatrix(vectors, a.cols))[0]


def member(v: Sequence[Fraction | int], basis: RatMatrix) -> bool:
    """Whether v lies in the row space of `basis`."""
    if len(v) != basis.cols:
        raise ValueError("vector has wrong length")
    reduced, pivots = rref(basis)
    vec = [_exact(x) for x in v]
    for r, c in enumerate(pivots):
        f = vec[c]
        if f:
            row = reduced.data[r]
            for j in range(c, basis.cols):
                if row[j]:
                    vec[j] -= f * row[j]
    return not any(vec)
