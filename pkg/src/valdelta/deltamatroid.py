"""Δ-matroids: exchange axiom, evenness, polytope edges, rank functions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping

from .cube import check_n, complement, parse_subset, popcount, subset_str
from .subset_function import SubsetFunction


@dataclass(frozen=True)
class BasisFamily:
    n: int
    bases: frozenset[int]

    def __post_init__(self):
        check_n(self.n)
        object.__setattr__(self, "bases", frozenset(self.bases))
        if not self.bases:
            raise ValueError("a basis family must be nonempty")
        top = 1 << self.n
        if any(not 0 <= b < top for b in self.bases):
            raise ValueError("basis outside the ground set")

    @classmethod
    def of(cls, n: int, bases: Iterable) -> "BasisFamily":
        """Bases given as bitmasks or element strings such as ``"13"``."""
        return cls(n, frozenset(parse_subset(b, n) if isinstance(b, str) else int(b) for b in bases))

    def sorted(self) -> list[int]:
        return sorted(self.bases)

    def to_json(self) -> dict:
        return {"n": self.n, "bases": [subset_str(b, self.n) for b in self.sorted()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "BasisFamily":
        try:
            return cls.of(int(data["n"]), data["bases"])
        except (KeyError, TypeError):
            raise ValueError("basis family JSON needs 'n' and a 'bases' list") from None


def find_exchange_violation(F: BasisFamily) -> tuple[int, int, int] | None:
    """First ``(A, B, a)`` with a in AΔB and no b in AΔB making AΔ{a,b} a basis.

    ``a`` is a bitmask with a single bit.  A runs downward and B upward
    through the sorted bases, which fixes the witness.
    """
    bases = F.bases
    order = F.sorted()
    for A in reversed(order):
        for B in order:
            diff = A ^ B
            rest = diff
            while rest:
                a = rest & -rest
                rest ^= a
                ok = False
                d = diff
                while d:
                    b = d & -d
                    d ^= b
                    if (A ^ a if a == b else A ^ a ^ b) in bases:
                        ok = True
                        break
                if not ok:
                    return A, B, a
    return None


def is_delta_matroid(F: BasisFamily) -> bool:
    return find_exchange_violation(F) is None


def is_even(F: BasisFamily) -> bool:
    parities = {popcount(b) & 1 for b in F.bases}
    return len(parities) == 1 and is_delta_matroid(F)


def strong_exchange_holds(F: BasisFamily) -> bool:
    """Strong exchange with a != b: both AΔ{a,b} and BΔ{a,b} are bases."""
    bases = F.bases
    for A in bases:
        for B in bases:
            diff = A ^ B
            rest = diff
            while rest:
                a = rest & -rest
                rest ^= a
                others = diff & ~a
                found = False
                while others:
                    b = others & -others
                    others ^= b
                    if A ^ a ^ b in bases and B ^ a ^ b in bases:
                        found = True
                        break
                if not found:
                    return False
    return True


@dataclass(frozen=True)
class PolytopeEdge:
    S: int
    T: int
    direction: str  # e.g. "+e1", "+e1-e3", or "long"

    @property
    def length(self) -> int:
        return popcount(self.S ^ self.T)


def direction_class(S: int, T: int) -> str:
    diff = S ^ T
    if popcount(diff) > 2:
        return "long"
    parts = []
    for i in range(diff.bit_length()):
        if diff >> i & 1:
            parts.append(("+" if T >> i & 1 else "-") + f"e{i + 1}")
    return "".join(parts)


def polytope_edges(F: BasisFamily) -> list[PolytopeEdge]:
    """Edges of conv{e_B : B in F}, via the face LP with a zero lift."""
    from .subdivision import is_face

    if len(F.bases) < 2:
        return []
    p = SubsetFunction.from_callable(F.n, lambda s: 0 if s in F.bases else "inf")
    order = F.sorted()
    edges = []
    for k, S in enumerate(order):
        for T in order[k + 1:]:
            if is_face(p, (S, T), local=True) is not None:
                edges.append(PolytopeEdge(S, T, direction_class(S, T)))
    return edges


@dataclass(frozen=True)
class RankTable:
    n: int
    values: tuple[int, ...]

    def __getitem__(self, mask: int) -> int:
        return self.values[mask]


def rank_function(F: BasisFamily) -> RankTable:
    """``r(S) = max_B |B∩S| + |B^C ∩ S^C|``, cross-checked against ``n - min_B |S Δ B|``."""
    n = F.n
    full = (1 << n) - 1
    vals = []
    for S in range(1 << n):
        r_max = max(popcount(B & S) + popcount(complement(B, n) & complement(S, n)) for B in F.bases)
        r_dist = n - min(popcount((S ^ B) & full) for B in F.bases)
        if r_max != r_dist:
            raise AssertionError(f"rank formulas disagree at {subset_str(S, n)!r}")
        vals.append(r_max)
    return RankTable(n, tuple(vals))


def neg_rank_as_valuation(F: BasisFamily) -> SubsetFunction:
    r = rank_function(F)
    return SubsetFunction(F.n, (-v for v in r.values))


class SamplingBudgetExceeded(RuntimeError):
    pass


def _gf_det(rows: list[list[int]], p: int) -> int:
    m = [r[:] for r in rows]
    k = len(m)
    d = 1
    for c in range(k):
        piv = next((i for i in range(c, k) if m[i][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d = d * m[c][c] % p
        inv = pow(m[c][c], p - 2, p)
        for i in range(c + 1, k):
            f = m[i][c] * inv % p
            if f:
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[c])]
    return d % p


def _minor_support(n: int, rng: random.Random) -> frozenset[int]:
    """Nonzero principal minors of a random (skew-)symmetric matrix over GF(p), twisted."""
    p = rng.choice((2, 3, 5))
    skew = rng.random() < 0.5 and p != 2
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        if not skew:
            a[i][i] = rng.randrange(p)
        for j in range(i + 1, n):
            x = rng.randrange(p)
            a[i][j] = x
            a[j][i] = (-x) % p if skew else x
    bases = set()
    for S in range(1 << n):
        idx = [i for i in range(n) if S >> i & 1]
        if _gf_det([[a[i][j] for j in idx] for i in idx], p):
            bases.add(S)
    twist = rng.randrange(1 << n)
    return frozenset(b ^ twist for b in bases)


def random_delta_matroid(n: int, seed, method: str = "auto", budget: int = 10**5) -> BasisFamily:
    """Seeded random Δ-matroid.

    ``rejection`` draws random families until one satisfies the exchange
    axiom (practical for n <= 3); ``minors`` takes supports of principal
    minors of random symmetric or skew-symmetric matrices over a small prime
    field, shifted by a random twist.  ``auto`` tries rejection first for
    n <= 3 and falls back to minors when the budget runs out.
    """
    check_n(n)
    if n > 8:
        raise ValueError("random generation supports n <= 8")
    rng = random.Random(seed)
    if method not in ("auto", "rejection", "minors"):
        raise ValueError(f"unknown method {method!r}")
    if method == "rejection" or (method == "auto" and n <= 3):
        for _ in range(budget):
            size = 1 << n
            fam = frozenset(s for s in range(size) if rng.random() < rng.random())
            if fam:
                F = BasisFamily(n, fam)
                if is_delta_matroid(F):
                    return F
        if method == "rejection":
            raise SamplingBudgetExceeded(f"no Δ-matroid found in {budget} draws")
    F = BasisFamily(n, _minor_support(n, rng))
    if not is_delta_matroid(F):
        raise AssertionError("minor-support generator produced a non-Δ-matroid")
    return F


def all_delta_matroids(n: int) -> list[BasisFamily]:
    """Every Δ-matroid on [n]; feasible for n <= 3 (2^(2^n) - 1 families)."""
    if n > 3:
        raise ValueError("exhaustive enumeration limited to n <= 3")
    out = []
    for code in range(1, 1 << (1 << n)):
        F = BasisFamily(n, frozenset(s for s in range(1 << n) if code >> s & 1))
        if is_delta_matroid(F):
            out.append(F)
    return out
