"""Sparse polynomials in x_1..x_n with coefficients in a valued field."""

from __future__ import annotations

from typing import Callable, Mapping, Sequence

from .fields import Elem, ValuedField

Exp = tuple[int, ...]


class Poly:
    """``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("K", "n", "terms")

    def __init__(self, K: ValuedField, n: int, terms: Mapping[Exp, Elem] | None = None):
        self.K = K
        self.n = n
        self.terms = {e: c for e, c in (terms or {}).items() if c}
        for e in self.terms:
            if len(e) != n:
                raise ValueError("exponent length does not match the number of variables")

    @classmethod
    def constant(cls, K, n, c) -> "Poly":
        return cls(K, n, {(0,) * n: K(c)})

    @classmethod
    def var(cls, K, n, i) -> "Poly":
        e = [0] * n
        e[i] = 1
        return cls(K, n, {tuple(e): K.one()})

    @classmethod
    def multiaffine(cls, K, n, coeffs: Mapping[int, Elem]) -> "Poly":
        """From a table ``T -> coefficient of x^T`` with T a bitmask."""
        return cls(K, n, {tuple((T >> i) & 1 for i in range(n)): c for T, c in coeffs.items()})

    def coeff(self, e: Exp) -> Elem:
        return self.terms.get(tuple(e), self.K.zero())

    def coeff_mask(self, T: int) -> Elem:
        return self.coeff(tuple((T >> i) & 1 for i in range(self.n)))

    def is_multiaffine(self) -> bool:
        return all(max(e, default=0) <= 1 for e in self.terms)

    def degree_bound(self) -> int:
        return max((max(e, default=0) for e in self.terms), default=0)

    def _check(self, other: "Poly"):
        if other.K is not self.K or other.n != self.n:
            raise ValueError("polynomials over different rings")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return Poly(self.K, self.n, out)

    def __neg__(self) -> "Poly":
        return Poly(self.K, self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = self.K(other)
            return Poly(self.K, self.n, {e: x * c for e, x in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return Poly(self.K, self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.K is other.K and self.n == other.n and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def derivative(self, i: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return Poly(self.K, self.n, out)

    def slices(self, i: int, j: int) -> tuple["Poly", "Poly", "Poly", "Poly"]:
        """``(f_ij, f_i^j, f_j^i, f^ij)`` with f = x_i x_j f_ij + x_i f_i^j + x_j f_j^i + f^ij."""
        if not self.is_multiaffine():
            raise ValueError("slices need a multiaffine polynomial")
        parts = {(1, 1): {}, (1, 0): {}, (0, 1): {}, (0, 0): {}}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i] = 0
            e2[j] = 0
            parts[(e[i], e[j])][tuple(e2)] = c
        return tuple(Poly(self.K, self.n, parts[k]) for k in ((1, 1), (1, 0), (0, 1), (0, 0)))

    def scale_vars(self, lam: Sequence[Elem]) -> "Poly":
        """``g(λ_1 x_1, ..., λ_n x_n)``."""
        lam = [self.K(x) for x in lam]
        if any(not x for x in lam):
            raise ValueError("scaling factors must be nonzero")
        out = {}
        for e, c in self.terms.items():
            for x, k in zip(lam, e):
                if k:
                    c = c * x ** k
            out[e] = c
        return Poly(self.K, self.n, out)

    def conj_at(self, sigma: int = 1) -> "Poly":
        """``ḡ(σx)``: conjugate coefficients and substitute σx."""
        out = {}
        for e, c in self.terms.items():
            c = c.conj()
            if sigma == -1 and sum(e) % 2:
                c = -c
            out[e] = c
        return Poly(self.K, self.n, out)

    def map_coeffs(self, fn: Callable[[Elem], Elem], K2: ValuedField) -> "Poly":
        return Poly(K2, self.n, {e: fn(c) for e, c in self.terms.items()})

    def evaluate(self, point: Sequence) -> Elem:
        point = [self.K(x) for x in point]
        total = self.K.zero()
        for e, c in self.terms.items():
            for x, k in zip(point, e):
                if k:
                    c = c * x ** k
            total = total + c
        return total

    def sorted_terms(self) -> list[tuple[Exp, Elem]]:
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-k for k in kv[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            cs = str(c)
            if not mono:
                parts.append(f"({cs})" if any(ch in cs[1:] for ch in "+-") else cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"({cs})*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"Poly({self})"

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [[list(e), str(c)] for e, c in self.sorted_terms()]}


def rayleigh(f: Poly, i: int, j: int) -> Poly:
    """``Δ_ij(f) = f_i^j f_j^i - f_ij f^ij`` for multiaffine f.

    The derivative form ``∂_i f ∂_j f - f ∂_i ∂_j f`` is computed as well and
    must agree exactly.
    """
    if i == j:
        raise ValueError("Rayleigh difference needs i != j")
    fij, fi, fj, f0 = f.slices(i, j)
    delta = fi * fj - fij * f0
    di = f.derivative(i)
    dj = f.derivative(j)
    other = di * dj - f * di.derivative(j)
    if other != delta:
        raise AssertionError("slice and derivative forms of the Rayleigh difference disagree")
    return delta


def residue_poly(f: Poly) -> Poly:
    """Coefficient-wise image in the residue field."""
    K = f.K
    R = K.residue_field()
    for c in f.terms.values():
        if c.valuation() < 0:
            raise ValueError("coefficient outside the valuation ring")
    return f.map_coeffs(K.residue, R)
