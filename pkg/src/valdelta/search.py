"""Randomized search for counterexamples to the rank-one extension conjectures.

Two shapes are sampled:

* ``skew-hermitian-plus-rank-one``: ``A = B + α v v̄ᵀ`` with B skew-Hermitian
  and α in the fixed field;
* ``char2-omega-rank-one``: ``A = B + ω α v v̄ᵀ`` over a characteristic-2 field
  ``F[ω]`` with ω̄ = ω + 1, B Hermitian and α in the fixed field.

Each trial has its own RNG derived from ``(seed, trial)``, so reports do not
depend on the number of worker processes.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .fields import FieldSpec, ValuedField
from .generators import random_fixed, random_matrix, random_vector
from .matrices import MatrixK
from .representability import principal_minor_valuations
from .subdivision import is_valuated_delta_matroid

SHAPES = ("skew-hermitian-plus-rank-one", "char2-omega-rank-one")


def covered_by_known_result(which: str, spec: FieldSpec) -> bool:
    """Whether a counterexample is ruled out (residue char != 2, or trivial valuation in char 2)."""
    if which == "skew-hermitian-plus-rank-one":
        if spec.char == 2:
            return True  # skew-Hermitian is Hermitian there
        if spec.valuation == "p-adic":
            return spec.p != 2
        return True  # t-adic or trivial on a char-0 base: residue char 0
    return spec.valuation == "trivial"


def _check_shape(which: str, spec: FieldSpec):
    if which not in SHAPES:
        raise ValueError(f"unknown conjecture shape {which!r}")
    if which == "char2-omega-rank-one":
        if spec.char != 2 or not spec.quadratic or (spec.e, spec.f) != (1, 1):
            raise ValueError("char-2 shape needs F[ω] in characteristic 2 with ω̄ = ω + 1")


def sample_instance(which: str, K: ValuedField, n: int, rng: random.Random) -> MatrixK:
    if which == "skew-hermitian-plus-rank-one":
        B = random_matrix(K, n, rng, "skew-hermitian")
        alpha = random_fixed(K, rng)
        v = random_vector(K, n, rng)
        rows = [[B.entries[a][b] + alpha * v[a] * v[b].conj() for b in range(n)] for a in range(n)]
    else:
        B = random_matrix(K, n, rng, "hermitian")
        alpha = random_fixed(K, rng)
        v = random_vector(K, n, rng)
        w = K.alpha
        rows = [[B.entries[a][b] + w * alpha * v[a] * v[b].conj() for b in range(n)] for a in range(n)]
    return MatrixK(K, tuple(tuple(r) for r in rows), "general")


def _trial(args):
    which, spec, n, seed, trial = args
    K = ValuedField(spec)
    rng = random.Random(f"{seed}:{trial}")
    A = sample_instance(which, K, n, rng)
    p = principal_minor_valuations(A)
    verdict = is_valuated_delta_matroid(p)
    if verdict.valuated:
        return None
    return {"trial": trial, "matrix": A.to_json(), "p": p.to_json(), "certificate": verdict.certificate}


@dataclass
class SearchReport:
    which: str
    spec: FieldSpec
    n: int
    trials: int
    seed: int
    covered: bool
    counterexamples: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"which": self.which, "spec": self.spec.to_json(), "n": self.n, "trials": self.trials,
                "seed": self.seed, "covered_by_known_result": self.covered,
                "counterexamples_found": len(self.counterexamples), "counterexamples": self.counterexamples}


def conjecture_search(which: str, spec: FieldSpec, n: int, trials: int, seed: int, jobs: int = 1) -> SearchReport:
    _check_shape(which, spec)
    args = [(which, spec, n, seed, k) for k in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_trial, args, chunksize=max(1, trials // (4 * jobs))))
    else:
        results = [_trial(a) for a in args]
    hits = [r for r in results if r is not None]
    return SearchReport(which, spec, n, trials, seed, covered_by_known_result(which, spec), hits)
