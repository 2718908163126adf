"""Matrices over a valued field: structure tags and exact determinants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fields import Elem, ValuedField, pexact, pgcd, pmul, psub

TAGS = ("hermitian", "skew-hermitian", "symmetric", "skew-symmetric", "general")


def _poly_lcm(B, f, g):
    return pexact(B, pmul(B, f, g), pgcd(B, f, g))


def det(rows: Sequence[Sequence[Elem]], K: ValuedField | None = None) -> Elem:
    """Determinant by fraction-free (Bareiss) elimination.

    Each row is first cleared of denominators, so elimination runs on
    polynomials in t with exact divisions only.
    """
    n = len(rows)
    if n == 0:
        if K is None:
            raise ValueError("field needed for the empty determinant")
        return K.one()
    K = rows[0][0].K
    B = K.B
    one = (B.one,)
    scale = one
    m = []
    for row in rows:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
        L = one
        for x in row:
            if len(x.den) > 1 or x.den != one:
                L = _poly_lcm(B, L, x.den)
        if L == one:
            m.append([x.num for x in row])
        else:
            m.append([pmul(B, x.num, pexact(B, L, x.den)) for x in row])
            scale = pmul(B, scale, L)
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return K.zero()
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        mkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                num = psub(B, pmul(B, row_i[j], mkk), pmul(B, mik, row_k[j]))
                row_i[j] = pexact(B, num, prev) if prev != one else num
            row_i[k] = ()
        prev = mkk
    result = K.from_base_poly(m[n - 1][n - 1], scale)
    return -result if sign < 0 else result


def det_cofactor(rows: Sequence[Sequence[Elem]], K: ValuedField) -> Elem:
    """Laplace expansion along the first row; an independent check for small sizes."""
    n = len(rows)
    if n == 0:
        return K.one()
    if n == 1:
        return rows[0][0]
    total = K.zero()
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * det_cofactor(minor, K)
        total = total + term if j % 2 == 0 else total - term
    return total


def inverse(rows: Sequence[Sequence[Elem]], K: ValuedField) -> list[list[Elem]]:
    """Gauss-Jordan inverse; raises ZeroDivisionError when singular."""
    n = len(rows)
    m = [list(r) + [K.one() if i == j else K.zero() for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = m[c][c].inverse()
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [r[n:] for r in m]


def matmul(a, b, K):
    inner = len(b)
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), K.zero()) for j in range(len(b[0]))]
            for i in range(len(a))]


def conj_transpose(a):
    return [[a[i][j].conj() for i in range(len(a))] for j in range(len(a[0]))]


def transpose(a):
    return [[a[i][j] for i in range(len(a))] for j in range(len(a[0]))]


def submatrix(a, rows_idx, cols_idx):
    return [[a[i][j] for j in cols_idx] for i in rows_idx]


def structure_holds(entries, tag: str) -> bool:
    n = len(entries)
    for i in range(n):
        for j in range(n):
            x = entries[i][j]
            y = entries[j][i]
            if tag == "hermitian" and x.conj() != y:
                return False
            if tag == "skew-hermitian" and x.conj() != -y:
                return False
            if tag == "symmetric" and x != y:
                return False
            if tag == "skew-symmetric" and (x != -y or (i == j and x)):
                return False
    return True


@dataclass(frozen=True)
class MatrixK:
    K: ValuedField
    entries: tuple[tuple[Elem, ...], ...]
    tag: str = "general"

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown structure tag {self.tag!r}")
        rows = tuple(tuple(self.K(x) for x in r) for r in self.entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "entries", rows)
        if not structure_holds(rows, self.tag):
            raise ValueError(f"matrix is not {self.tag}")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def sigma(self) -> int:
        if self.tag in ("hermitian", "symmetric"):
            return 1
        if self.tag in ("skew-hermitian", "skew-symmetric"):
            return -1
        raise ValueError("σ is only defined for (skew-)Hermitian matrices")

    def rows(self) -> list[list[Elem]]:
        return [list(r) for r in self.entries]

    def principal_minor(self, S: int) -> Elem:
        idx = [i for i in range(self.n) if S >> i & 1]
        return det(submatrix(self.entries, idx, idx), self.K)

    def to_json(self) -> dict:
        return {"spec": self.K.spec.to_json(), "tag": self.tag,
                "entries": [[str(x) for x in r] for r in self.entries]}

    @classmethod
    def from_json(cls, data) -> "MatrixK":
        from .fields import FieldSpec
        try:
            K = ValuedField(FieldSpec.from_json(data["spec"]))
            entries = [[K(str(x)) for x in row] for row in data["entries"]]
            tag = data.get("tag", "general")
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed matrix JSON: {exc}") from None
        return cls(K, tuple(tuple(r) for r in entries), tag)
