"""Exact linear algebra over the rationals and over arbitrary fields.

Rational routines work on lists of rows of ``Fraction`` (ints are accepted and
promoted).  ``det`` is generic: it only needs ``+``, ``-``, ``*``, ``/`` and an
``is_zero``-style truth test on the entries, so it runs unchanged on the
valued-field elements defined in :mod:`valdelta.fields`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def to_fractions(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = to_fractions(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1]) if rows else 0


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of {x : A x = 0}."""
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One solution of A x = b (free variables set to zero), or None."""
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    ncols = len(a[0]) if a else 0
    m, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    return x


def affine_rank(points: Sequence[Sequence]) -> int:
    """Affine dimension of a finite point set (-1 for the empty set)."""
    if not points:
        return -1
    base = points[0]
    return rank([[x - y for x, y in zip(p, base)] for p in points[1:]]) if len(points) > 1 else 0


def affinely_independent(points: Sequence[Sequence]) -> bool:
    return affine_rank(points) == len(points) - 1


def det(rows: Sequence[Sequence]):
    """Determinant by Gaussian elimination with exact division.

    Works over any exact field whose elements support arithmetic operators
    and whose zero is falsy (``bool(x) is False``).  The empty matrix has
    determinant 1, returned as the int ``1`` unless ``one`` can be taken
    from the input.
    """
    m = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    result = None
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return m[0][0] - m[0][0]
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        p = m[c][c]
        result = p if result is None else result * p
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / p
                row_c = m[c]
                m[i] = [x - f * y if k > c else x for k, (x, y) in enumerate(zip(m[i], row_c))]
    return result if sign == 1 else -result
