"""Subsets of [n], faces of the 0-1 cube, signed symmetries and convex circuits.

Subsets are plain ``int`` bitmasks: element ``i`` (1-based) is bit ``i - 1``.
The ground-set size travels alongside in the containers that need it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .linalg import affinely_independent, solve

MAX_N = 16


def check_n(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise ValueError(f"ground-set size must be in 1..{MAX_N}, got {n!r}")


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def complement(mask: int, n: int) -> int:
    return ~mask & ((1 << n) - 1)


def elements(mask: int) -> list[int]:
    """1-based elements of ``mask`` in increasing order."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def indicator(mask: int, n: int) -> list[int]:
    return [(mask >> i) & 1 for i in range(n)]


def subset_str(mask: int, n: int) -> str:
    """``""`` for the empty set, ``"13"`` for {1,3} when n <= 9, else ``"1,3"``."""
    els = elements(mask)
    if n <= 9:
        return "".join(str(e) for e in els)
    return ",".join(str(e) for e in els)


def parse_subset(text: str, n: int) -> int:
    text = text.strip()
    if text in ("", "∅", "{}"):
        return 0
    if n > 9 or "," in text:
        parts = [p for p in text.strip("{}").split(",") if p.strip()]
    else:
        parts = list(text)
    mask = 0
    for part in parts:
        try:
            e = int(part)
        except ValueError:
            raise ValueError(f"bad subset element {part!r} in {text!r}") from None
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside [1, {n}]")
        if mask >> (e - 1) & 1:
            raise ValueError(f"repeated element {e} in {text!r}")
        mask |= 1 << (e - 1)
    return mask


@dataclass(frozen=True)
class CubeFace:
    """A face of [0,1]^n: some coordinates fixed, the rest free.

    Local subsets of the face are bitmasks over ``free`` (bit k <-> free[k]).
    """

    n: int
    fixed: tuple[tuple[int, int], ...]
    free: tuple[int, ...]

    def __post_init__(self):
        coords = sorted([c for c, _ in self.fixed] + list(self.free))
        if coords != list(range(self.n)):
            raise ValueError("fixed and free coordinates must partition [n]")

    @property
    def dim(self) -> int:
        return len(self.free)

    @property
    def base(self) -> int:
        return sum(b << c for c, b in self.fixed)

    def to_global(self, local: int) -> int:
        mask = self.base
        for k, c in enumerate(self.free):
            if local >> k & 1:
                mask |= 1 << c
        return mask

    def to_local(self, mask: int) -> int:
        return sum(((mask >> c) & 1) << k for k, c in enumerate(self.free))

    def contains(self, mask: int) -> bool:
        return all((mask >> c) & 1 == b for c, b in self.fixed)

    def vertices(self) -> list[int]:
        return [self.to_global(local) for local in range(1 << self.dim)]

    @classmethod
    def spanned_by(cls, n: int, a: int, b: int) -> "CubeFace":
        """Smallest face containing both vertices."""
        diff = a ^ b
        free = tuple(c for c in range(n) if diff >> c & 1)
        fixed = tuple((c, (a >> c) & 1) for c in range(n) if not diff >> c & 1)
        return cls(n, fixed, free)

    def __str__(self) -> str:
        pattern = ["*"] * self.n
        for c, b in self.fixed:
            pattern[c] = str(b)
        return "".join(pattern)


def enumerate_faces(n: int, dim: int) -> list[CubeFace]:
    """All C(n, dim) * 2^(n - dim) faces of dimension ``dim``."""
    check_n(n)
    if not 0 <= dim <= n:
        raise ValueError(f"face dimension {dim} outside 0..{n}")
    faces = []
    for free in itertools.combinations(range(n), dim):
        rest = [c for c in range(n) if c not in free]
        for bits in itertools.product((0, 1), repeat=len(rest)):
            faces.append(CubeFace(n, tuple(zip(rest, bits)), free))
    return faces


@dataclass(frozen=True)
class SignedSymmetry:
    """Element of the hyperoctahedral group B_n.

    Acts on a subset by XOR with ``flips`` and then sending coordinate ``i``
    to ``perm[i]``.
    """

    perm: tuple[int, ...]
    flips: int = 0

    @property
    def n(self) -> int:
        return len(self.perm)

    def __call__(self, mask: int) -> int:
        mask ^= self.flips
        out = 0
        for i, j in enumerate(self.perm):
            if mask >> i & 1:
                out |= 1 << j
        return out

    def _permute(self, mask: int) -> int:
        return SignedSymmetry(self.perm)(mask)

    def compose(self, other: "SignedSymmetry") -> "SignedSymmetry":
        """``self ∘ other``: apply ``other`` first."""
        inv_other = SignedSymmetry(_invert(other.perm))
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        return SignedSymmetry(perm, other.flips ^ inv_other(self.flips))

    def inverse(self) -> "SignedSymmetry":
        return SignedSymmetry(_invert(self.perm), self._permute(self.flips))

    @classmethod
    def identity(cls, n: int) -> "SignedSymmetry":
        return cls(tuple(range(n)), 0)


def _invert(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


def symmetries(n: int) -> Iterator[SignedSymmetry]:
    """All 2^n * n! elements of B_n in a fixed order."""
    for perm in itertools.permutations(range(n)):
        for flips in range(1 << n):
            yield SignedSymmetry(perm, flips)


@dataclass(frozen=True)
class ConvexCircuit:
    """Strict convex combination of affinely independent cube vertices.

    ``support`` is sorted; ``weights[k]`` belongs to ``support[k]``.
    """

    n: int
    support: tuple[int, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.support) != len(self.weights) or not self.support:
            raise ValueError("support and weights must be nonempty and aligned")
        if list(self.support) != sorted(set(self.support)):
            raise ValueError("support must be sorted without repeats")
        if sum(self.weights) != 1:
            raise ValueError("weights must sum to 1")
        if len(self.support) > 1 and not all(0 < w < 1 for w in self.weights):
            raise ValueError("weights must lie strictly between 0 and 1")
        if not affinely_independent([indicator(s, self.n) for s in self.support]):
            raise ValueError("support is not affinely independent")

    @classmethod
    def make(cls, n: int, pairs: Iterable[tuple[int, Fraction]]) -> "ConvexCircuit":
        items = sorted((s, Fraction(w)) for s, w in pairs)
        return cls(n, tuple(s for s, _ in items), tuple(w for _, w in items))

    @property
    def barycenter(self) -> tuple[Fraction, ...]:
        return tuple(
            sum((w for s, w in zip(self.support, self.weights) if s >> i & 1), Fraction(0))
            for i in range(self.n)
        )

    def image(self, g: SignedSymmetry) -> "ConvexCircuit":
        return ConvexCircuit.make(self.n, ((g(s), w) for s, w in zip(self.support, self.weights)))

    def value(self, p) -> object:
        """sum of weight * p(vertex); infinite as soon as one vertex is."""
        total = Fraction(0)
        for s, w in zip(self.support, self.weights):
            v = p[s]
            if v == INF:
                return INF
            total += w * v
        return total


INF = float("inf")


def orbit(n: int, circuit: ConvexCircuit) -> set[ConvexCircuit]:
    """Distinct images of ``circuit`` under B_n."""
    return {circuit.image(g) for g in symmetries(n)}


def _interior_weights(n: int, support: tuple[int, ...], point) -> tuple[Fraction, ...] | None:
    """Weights expressing ``point`` as a strict convex combination, if any."""
    k = len(support)
    a = [[(s >> i) & 1 for s in support] for i in range(n)] + [[1] * k]
    b = list(point) + [1]
    lam = solve(a, b)
    if lam is None or not all(0 < x for x in lam):
        return None
    return tuple(lam)


def center_circuits(n: int) -> list[ConvexCircuit]:
    """Every convex circuit representation of (1/2, ..., 1/2), each once.

    Brute force over affinely independent vertex sets.  Every circuit is the
    XOR-translate of one containing the empty set, since flips fix the center,
    so only those are searched.
    """
    check_n(n)
    if n > 5:
        raise ValueError("exhaustive circuit enumeration is limited to n <= 5")
    half = [Fraction(1, 2)] * n
    seeds = []
    for k in range(1, n + 1):
        for rest in itertools.combinations(range(1, 1 << n), k):
            support = (0,) + rest
            pts = [indicator(s, n) for s in support]
            if not affinely_independent(pts):
                continue
            lam = _interior_weights(n, support, half)
            if lam is not None:
                seeds.append(ConvexCircuit(n, support, lam))
    found = set()
    for c in seeds:
        for shift in range(1 << n):
            found.add(c.image(SignedSymmetry(tuple(range(n)), shift)))
    return sorted(found, key=lambda c: (len(c.support), c.support))
