"""Seeded random test data: subset functions, matrices and vectors."""

from __future__ import annotations

import random
from fractions import Fraction

from .cube import INF, popcount
from .deltamatroid import random_delta_matroid, rank_function
from .fields import Elem, ValuedField
from .matrices import MatrixK
from .subset_function import SubsetFunction

FUNCTION_KINDS = ("uniform", "neg-rank", "neg-rank-noisy", "domain", "parity", "sparse-inf", "tropical-sum")


def random_subset_function(n: int, rng: random.Random, kind: str | None = None) -> SubsetFunction:
    """A mix of valuated and non-valuated shapes, finite and with ∞ entries."""
    kind = kind or rng.choice(FUNCTION_KINDS)
    size = 1 << n
    if kind == "uniform":
        top = rng.choice((1, 2, 3, 6))
        return SubsetFunction(n, [rng.randint(0, top) for _ in range(size)])
    if kind in ("neg-rank", "neg-rank-noisy"):
        r = rank_function(random_delta_matroid(n, rng.random()))
        scale = rng.randint(1, 3)
        noise = 1 if kind == "neg-rank-noisy" else 0
        return SubsetFunction(n, [-scale * v + rng.randint(0, noise) for v in r.values])
    if kind == "domain":
        F = random_delta_matroid(n, rng.random())
        vals = [rng.randint(0, 4) if s in F.bases else INF for s in range(size)]
        return SubsetFunction(n, vals)
    if kind == "parity":
        even = rng.random() < 0.5
        return SubsetFunction(n, [0 if popcount(s) % 2 == even else rng.randint(1, 5) for s in range(size)])
    if kind == "sparse-inf":
        vals = [rng.randint(0, 3) if rng.random() < 0.5 else INF for _ in range(size)]
        if all(v == INF for v in vals):
            vals[rng.randrange(size)] = 0
        return SubsetFunction(n, vals)
    if kind == "tropical-sum":
        # min of a few affine functions plus small noise on a random subset
        forms = [([rng.randint(-2, 2) for _ in range(n)], rng.randint(0, 3)) for _ in range(rng.randint(1, 3))]
        vals = []
        for s in range(size):
            v = min(b + sum(c for i, c in enumerate(a) if s >> i & 1) for a, b in forms)
            if rng.random() < 0.2:
                v += rng.randint(0, 2)
            vals.append(v)
        return SubsetFunction(n, vals)
    raise ValueError(f"unknown kind {kind!r}")


def random_fixed(K: ValuedField, rng: random.Random, nonzero: bool = True, **kw) -> Elem:
    """Random element of the fixed field of the involution."""
    for _ in range(1000):
        x = K.random(rng, **kw)
        y = x + x.conj() if (K.spec.quadratic or K.spec.twist) else x
        if K.spec.char == 2 and not (K.spec.quadratic or K.spec.twist):
            y = x
        if y or not nonzero:
            return y
    raise RuntimeError("could not sample a nonzero fixed element")


def random_antifixed(K: ValuedField, rng: random.Random, **kw) -> Elem:
    """Random element with x̄ = -x (may be zero when the involution is trivial)."""
    x = K.random(rng, **kw)
    return x - x.conj()


def random_vector(K: ValuedField, n: int, rng: random.Random, zero_prob: float = 0.1, **kw) -> list[Elem]:
    return [K.random(rng, zero_prob=zero_prob, **kw) for _ in range(n)]


def random_matrix(K: ValuedField, n: int, rng: random.Random, tag: str = "hermitian",
                  zero_prob: float = 0.2, **kw) -> MatrixK:
    """Random matrix with the given structure tag."""
    rows = [[K.zero()] * n for _ in range(n)]
    for i in range(n):
        if tag in ("hermitian", "symmetric"):
            if tag == "hermitian":
                rows[i][i] = random_fixed(K, rng, nonzero=False, **kw) if rng.random() > zero_prob else K.zero()
            else:
                rows[i][i] = K.random(rng, zero_prob=zero_prob, **kw)
        elif tag == "skew-hermitian":
            rows[i][i] = random_antifixed(K, rng, **kw) if rng.random() > zero_prob else K.zero()
        elif tag == "general":
            rows[i][i] = K.random(rng, zero_prob=zero_prob, **kw)
        for j in range(i + 1, n):
            x = K.random(rng, zero_prob=zero_prob, **kw)
            rows[i][j] = x
            if tag == "hermitian":
                rows[j][i] = x.conj()
            elif tag == "skew-hermitian":
                rows[j][i] = -x.conj()
            elif tag == "symmetric":
                rows[j][i] = x
            elif tag == "skew-symmetric":
                rows[j][i] = -x
            else:
                rows[j][i] = K.random(rng, zero_prob=zero_prob, **kw)
    return MatrixK(K, tuple(tuple(r) for r in rows), tag)


def random_valuated3(rng: random.Random, top: int = 4, rational: bool = False) -> SubsetFunction:
    """Random finite valuated Δ-matroid on [3] with p(∅) = 0, by rejection."""
    from .subdivision import check3

    while True:
        den = rng.randint(1, 3) if rational else 1
        vals = [0] + [Fraction(rng.randint(-top, top), den) for _ in range(7)]
        p = SubsetFunction(3, vals)
        if check3(p).passed:
            return p
