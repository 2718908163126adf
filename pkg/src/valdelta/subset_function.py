"""Functions from subsets of [n] to the rationals extended by +infinity."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .cube import INF, CubeFace, SignedSymmetry, check_n, parse_subset, popcount, subset_str


def parse_value(v) -> Fraction | float:
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, float):
        if v == INF:
            return INF
        raise ValueError("finite values must be exact rationals, not floats")
    text = str(v).strip().lower()
    if text in ("inf", "+inf", "infinity", "∞", "oo"):
        return INF
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational or 'inf': {v!r}") from None


def format_value(v) -> str:
    return "inf" if v == INF else str(v)


class SubsetFunction:
    """Immutable table ``p[S]`` for every bitmask ``S`` of [n].

    Values are ``Fraction`` or ``INF``; at least one value is finite.
    """

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Iterable):
        check_n(n)
        vals = tuple(parse_value(v) for v in values)
        if len(vals) != 1 << n:
            raise ValueError(f"expected {1 << n} values, got {len(vals)}")
        if all(v == INF for v in vals):
            raise ValueError("a subset function needs at least one finite value")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("SubsetFunction is immutable")

    @classmethod
    def from_callable(cls, n: int, fn: Callable[[int], object]) -> "SubsetFunction":
        return cls(n, (fn(s) for s in range(1 << n)))

    @classmethod
    def by_size(cls, n: int, table: Mapping[int, object] | list) -> "SubsetFunction":
        """Value depends only on |S|: ``table[k]`` for subsets of size k."""
        return cls(n, (table[popcount(s)] for s in range(1 << n)))

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[str, object], default=INF) -> "SubsetFunction":
        vals = [default] * (1 << n)
        for key, v in mapping.items():
            vals[parse_subset(key, n)] = v
        return cls(n, vals)

    def __getitem__(self, mask: int):
        return self.values[mask]

    def __eq__(self, other):
        return isinstance(other, SubsetFunction) and self.n == other.n and self.values == other.values

    def __hash__(self):
        return hash((self.n, self.values))

    def __repr__(self):
        body = ", ".join(f"{subset_str(s, self.n) or '∅'}:{format_value(v)}" for s, v in enumerate(self.values))
        return f"SubsetFunction(n={self.n}, {{{body}}})"

    @property
    def dom(self) -> list[int]:
        return [s for s, v in enumerate(self.values) if v != INF]

    @property
    def is_finite(self) -> bool:
        return all(v != INF for v in self.values)

    def restrict(self, face: CubeFace) -> "SubsetFunction":
        """Restriction to a face, re-indexed by the face's local subsets."""
        return SubsetFunction(face.dim, (self.values[face.to_global(loc)] for loc in range(1 << face.dim)))

    def act(self, g: SignedSymmetry) -> "SubsetFunction":
        """``(g.p)(g(S)) = p(S)``."""
        vals = [INF] * (1 << self.n)
        for s, v in enumerate(self.values):
            vals[g(s)] = v
        return SubsetFunction(self.n, vals)

    def transform(self, scale, linear=None, shift=0) -> "SubsetFunction":
        """``scale * p(S) + linear . e_S + shift`` with ``scale > 0``."""
        scale = Fraction(scale)
        if scale <= 0:
            raise ValueError("scale must be positive")
        linear = [Fraction(x) for x in (linear or [0] * self.n)]

        def value(s):
            v = self.values[s]
            if v == INF:
                return INF
            return scale * v + sum(c for i, c in enumerate(linear) if s >> i & 1) + Fraction(shift)

        return SubsetFunction.from_callable(self.n, value)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "values": {subset_str(s, self.n): format_value(v) for s, v in enumerate(self.values)},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SubsetFunction":
        try:
            n = int(data["n"])
            values = data["values"]
        except (KeyError, TypeError, ValueError):
            raise ValueError("subset function JSON needs integer 'n' and a 'values' object") from None
        if isinstance(values, list):
            return cls(n, values)
        return cls.from_mapping(n, values)
