"""Principal minors, determinantal polynomials and representability constructions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .cube import INF, popcount, subset_str
from .fields import Elem, ValuedField, get_field
from .matrices import MatrixK, det, structure_holds, submatrix
from .polys import Poly, rayleigh
from .subdivision import Verdict, check3, is_valuated_delta_matroid
from .subset_function import SubsetFunction


def valuation_function(n: int, values: Sequence[Elem]) -> SubsetFunction:
    """``S -> ν(values[S])``."""
    vals = [x.valuation() for x in values]
    return SubsetFunction(n, [INF if v == INF else Fraction(v) for v in vals])


def principal_minors(A: MatrixK) -> list[Elem]:
    """``A_S`` for every bitmask S, with ``A_∅ = 1``."""
    return [A.principal_minor(S) if S else A.K.one() for S in range(1 << A.n)]


def principal_minor_valuations(A: MatrixK) -> SubsetFunction:
    return valuation_function(A.n, principal_minors(A))


def _outer(v, w_conj):
    return [[a * b for b in w_conj] for a in v]


def _rank_one_sum(A, vectors, U: int, K, conj=True):
    m = [list(r) for r in A]
    for i, v in enumerate(vectors):
        if U >> i & 1:
            vb = [x.conj() for x in v] if conj else list(v)
            for a in range(len(m)):
                for b in range(len(m)):
                    m[a][b] = m[a][b] + v[a] * vb[b]
    return m


def _mobius(K, n: int, values: list[Elem]) -> dict[int, Elem]:
    """``c_T = Σ_{U ⊆ T} (-1)^{|T \\ U|} values[U]``."""
    coeffs = list(values)
    for i in range(n):
        bit = 1 << i
        for T in range(1 << n):
            if T & bit:
                coeffs[T] = coeffs[T] - coeffs[T ^ bit]
    return {T: c for T, c in enumerate(coeffs) if c}


def det_poly(A: Sequence[Sequence[Elem]], vectors: Sequence[Sequence[Elem]], K: ValuedField,
             conj: bool = True) -> Poly:
    """``det(Σ x_i v_i v̄_iᵀ + A)`` as a multiaffine polynomial.

    Coefficients come from evaluating at all 0-1 points and Möbius inversion.
    """
    r = len(A)
    if any(len(row) != r for row in A):
        raise ValueError("A must be square")
    if any(len(v) != r for v in vectors):
        raise ValueError("vectors must have the size of A")
    n = len(vectors)
    values = [det(_rank_one_sum(A, vectors, U, K, conj), K) for U in range(1 << n)]
    return Poly.multiaffine(K, n, _mobius(K, n, values))


def diagonal_poly(A: MatrixK) -> Poly:
    """``f_A = det(diag(x) + A)``."""
    K = A.K
    n = A.n
    units = [[K.one() if i == k else K.zero() for i in range(n)] for k in range(n)]
    return det_poly(A.entries, units, K)


def minor_coefficients(f: Poly) -> list[Elem]:
    """``c_S``: the coefficient of ``x^{[n] \\ S}``."""
    full = (1 << f.n) - 1
    return [f.coeff_mask(full ^ S) for S in range(1 << f.n)]


def scale_vars(f: Poly, lam: Sequence[Elem]) -> Poly:
    """``λ ⋆ f``; also checks ``Δ_ij(λ⋆f) = λ_i λ_j (λ ⋆ Δ_ij(f))`` on the first pair."""
    out = f.scale_vars(lam)
    if f.n >= 2 and f.is_multiaffine():
        lhs = rayleigh(out, 0, 1)
        rhs = rayleigh(f, 0, 1).scale_vars(lam) * (f.K(lam[0]) * f.K(lam[1]))
        if lhs != rhs:
            raise AssertionError("scaling identity for Rayleigh differences failed")
    return out


# -- factorization of Rayleigh differences ---------------------------------

@dataclass
class Factorization:
    passed: bool
    g: Poly
    sigma: int
    exponent: int  # power of σ in front of g(x)·ḡ(σx)
    branch: str  # "dodgson" or "dependent"
    delta: Poly

    def to_json(self) -> dict:
        return {"passed": self.passed, "g": str(self.g), "sigma": self.sigma,
                "exponent": self.exponent, "branch": self.branch, "delta": str(self.delta)}


def _dependence(vi, vj):
    """λ with vi = λ vj, or None."""
    k = next((a for a, x in enumerate(vj) if x), None)
    if k is None:
        return None
    lam = vi[k] / vj[k]
    return lam if all(x == lam * y for x, y in zip(vi, vj)) else None


def verify_factorization(A: MatrixK, vectors: Sequence[Sequence[Elem]] | None, i: int, j: int) -> Factorization:
    """Check ``Δ_ij(f) = σ^(r-1) g(x) ḡ(σx)`` with an explicit multiaffine g.

    For independent v_i, v_j, g is the minor with row 1 and column 2 deleted
    once v_i, v_j are the first two basis vectors; this equals
    ``det [[N(x), v_i], [v̄_jᵀ, 0]]`` with ``N(x) = A + Σ x_k v_k v̄_kᵀ``,
    which is what is evaluated.  For ``v_i = λ v_j`` (or the reverse) g is
    ``λ ∂_j f``.
    """
    K = A.K
    sigma = A.sigma
    if A.tag not in ("hermitian", "skew-hermitian", "symmetric", "skew-symmetric"):
        raise ValueError("factorization needs a (skew-)Hermitian matrix")
    if A.tag in ("symmetric", "skew-symmetric") and (K.spec.quadratic or K.spec.twist):
        if not structure_holds(A.entries, "hermitian" if sigma == 1 else "skew-hermitian"):
            raise ValueError("symmetric tag with a nontrivial involution")
    r = A.n
    if vectors is None:
        vectors = [[K.one() if a == k else K.zero() for a in range(r)] for k in range(r)]
    vectors = [[K(x) for x in v] for v in vectors]
    n = len(vectors)
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise ValueError("need two distinct variable indices")
    f = det_poly(A.entries, vectors, K)
    delta = rayleigh(f, i, j)
    exponent = r - 1
    lam = _dependence(vectors[i], vectors[j])
    if lam is not None:
        g = f.derivative(j) * lam
        branch = "dependent"
    else:
        lam2 = _dependence(vectors[j], vectors[i])
        if lam2 is not None:
            g = f.derivative(i) * lam2
            branch = "dependent"
        else:
            # the Dodgson minor M(1,2) after a change of basis sending v_i, v_j to e_1, e_2,
            # rewritten through the adjugate as a bordered determinant (no inverse needed)
            vals = []
            for T in range(1 << n):
                m = _rank_one_sum(A.entries, vectors, T, K)
                rows = [m[a] + [vectors[i][a]] for a in range(r)] + [[x.conj() for x in vectors[j]] + [K.zero()]]
                vals.append(det(rows, K))
            g = Poly.multiaffine(K, n, _mobius(K, n, vals))
            branch = "dodgson"
    rhs = g * g.conj_at(sigma)
    if sigma == -1 and exponent % 2:
        rhs = -rhs
    return Factorization(rhs == delta, g, sigma, exponent, branch, delta)


# -- skew-symmetric plus rank one ------------------------------------------

def _adjugate_form(Bs, vs, K, left=None):
    """``left^T adj(B) v`` via cofactors; ``left`` defaults to v."""
    k = len(Bs)
    left = vs if left is None else left
    if k == 0:
        return K.zero()
    total = K.zero()
    for a in range(k):
        for b in range(k):
            if not left[a] or not vs[b]:
                continue
            minor = [row[:a] + row[a + 1:] for idx, row in enumerate(Bs) if idx != b]
            cof = det(minor, K) if minor else K.one()
            term = left[a] * cof * vs[b]
            total = total + term if (a + b) % 2 == 0 else total - term
    return total


@dataclass
class SkewRankOneReport:
    p: SubsetFunction
    verdict: Verdict
    parity_ok: bool


def skew_plus_rank_one(B: MatrixK, alpha, v: Sequence) -> SkewRankOneReport:
    """Valuations of principal minors of ``B + α v vᵀ`` with B skew-symmetric."""
    K = B.K
    if B.tag != "skew-symmetric":
        raise ValueError("B must be tagged skew-symmetric")
    alpha = K(alpha)
    v = [K(x) for x in v]
    n = B.n
    A = [[B.entries[a][b] + alpha * v[a] * v[b] for b in range(n)] for a in range(n)]
    minors = []
    parity_ok = True
    for S in range(1 << n):
        idx = [i for i in range(n) if S >> i & 1]
        Bs = submatrix(B.entries, idx, idx)
        AS = det(submatrix(A, idx, idx), K) if idx else K.one()
        bs = det(Bs, K) if idx else K.one()
        form = _adjugate_form(Bs, [v[i] for i in idx], K)
        if len(idx) % 2 and bs:
            parity_ok = False
        if len(idx) % 2 == 0 and form:
            parity_ok = False
        if AS != bs + alpha * form:
            parity_ok = False
        minors.append(AS)
    p = valuation_function(n, minors)
    return SkewRankOneReport(p, is_valuated_delta_matroid(p), parity_ok)


# -- isotropic subspaces ---------------------------------------------------

FORMS = ("symplectic", "quadratic-even", "quadratic-odd", "hermitian-even")


@dataclass
class IsotropicReport:
    form: str
    p: SubsetFunction
    signs: list[int]  # minor = sign * principal minor of the reduced matrix
    verdict: Verdict
    matrix: list[list[Elem]] = field(repr=False, default_factory=list)


def _form_vanishes(form: str, M, n: int, K, alpha=None) -> bool:
    rows = len(M)
    if form == "symplectic":
        def b(x, y):
            return sum((x[i] * y[n + i] - x[n + i] * y[i] for i in range(n)), K.zero())
        return all(not b(M[a], M[c]) for a in range(rows) for c in range(rows))
    if form == "hermitian-even":
        def b(x, y):
            return sum((x[i] * y[n + i].conj() + x[n + i] * y[i].conj() for i in range(n)), K.zero())
        return all(not b(M[a], M[c]) for a in range(rows) for c in range(rows))

    def q(x):
        val = sum((x[i] * x[n + i] for i in range(n)), K.zero())
        if form == "quadratic-odd":
            val = val + alpha * x[2 * n] * x[2 * n]
        return val

    for a in range(rows):
        if q(M[a]):
            return False
        for c in range(a + 1, rows):
            s = [x + y for x, y in zip(M[a], M[c])]
            if q(s) - q(M[a]) - q(M[c]):
                return False
    return True


def _column_minor(M, S: int, n: int, K) -> Elem:
    cols = [i for i in range(n) if S >> i & 1] + [n + i for i in range(n) if not S >> i & 1]
    return det([[row[c] for c in cols] for row in M], K)


def isotropic_rep(form: str, A: MatrixK, v: Sequence | None = None, alpha=None) -> IsotropicReport:
    """``p_S(L) = ν(det M[e_S ∪ f_{[n] \\ S}])`` for L the row space of M.

    ``M = (A | I)`` for the even forms; for ``quadratic-odd`` the input A is
    the skew-symmetric B and the row space is ``(B - α v vᵀ | I | v)``.
    """
    if form not in FORMS:
        raise ValueError(f"unknown form {form!r}")
    K = A.K
    n = A.n
    ident = [[K.one() if a == b else K.zero() for b in range(n)] for a in range(n)]
    if form == "quadratic-odd":
        if v is None or alpha is None:
            raise ValueError("quadratic-odd needs v and α")
        alpha = K(alpha)
        if not alpha:
            raise ValueError("α must be nonzero")
        v = [K(x) for x in v]
        if not structure_holds(A.entries, "skew-symmetric"):
            raise ValueError("B must be skew-symmetric")
        red = [[A.entries[a][b] - alpha * v[a] * v[b] for b in range(n)] for a in range(n)]
        M = [red[a] + ident[a] + [v[a]] for a in range(n)]
    else:
        need = {"symplectic": "symmetric", "quadratic-even": "skew-symmetric",
                "hermitian-even": "skew-hermitian"}[form]
        if form == "hermitian-even" and not (K.spec.quadratic or K.spec.twist):
            raise ValueError("hermitian forms need a nontrivial involution")
        if not structure_holds(A.entries, need):
            raise ValueError(f"{form} needs a {need} matrix")
        red = [list(r) for r in A.entries]
        M = [red[a] + ident[a] for a in range(n)]
    if not _form_vanishes(form, M, n, K, alpha):
        raise ValueError("row space is not isotropic for this form")
    minors = []
    signs = []
    for S in range(1 << n):
        m = _column_minor(M, S, n, K)
        idx = [i for i in range(n) if S >> i & 1]
        pm = det(submatrix(red, idx, idx), K) if idx else K.one()
        if m == pm:
            signs.append(1 if m else 0)
        elif m == -pm:
            signs.append(-1)
        else:
            raise AssertionError(f"column minor and principal minor differ at {subset_str(S, n)!r}")
        minors.append(m)
    p = valuation_function(n, minors)
    return IsotropicReport(form, p, signs, is_valuated_delta_matroid(p), M)


# -- realizability for n = 3 -----------------------------------------------

def hypdet(a: Sequence[Elem]) -> Elem:
    """The 12-term quartic in the principal minors of a 3x3 matrix (bitmask indexing)."""
    e, a1, a2, a12, a3, a13, a23, a123 = a
    return (e * e * a123 * a123 + a1 * a1 * a23 * a23 + a2 * a2 * a13 * a13 + a3 * a3 * a12 * a12
            - 2 * e * a1 * a23 * a123 - 2 * e * a2 * a13 * a123 - 2 * e * a3 * a12 * a123
            - 2 * a1 * a2 * a13 * a23 - 2 * a1 * a3 * a12 * a23 - 2 * a2 * a3 * a12 * a13
            + 4 * e * a12 * a13 * a23 + 4 * a1 * a2 * a3 * a123)


@dataclass
class Realization:
    ok: bool
    a: list[Elem]
    scale: int
    checks: dict
    certificate: dict | None = None

    def to_json(self) -> dict:
        out = {"ok": self.ok, "scale": self.scale, "a": {subset_str(S, 3): str(x) for S, x in enumerate(self.a)},
               "checks": self.checks}
        if self.certificate:
            out["certificate"] = self.certificate
        return out


def realize3(p: SubsetFunction) -> Realization:
    """Principal-minor data over Q(t) whose valuations are p (scaled to integers).

    Uses ``a_i = -t^{p_i}``, ``a_ij = -t^{p_ij}``, ``a_∅ = 1``, ``a_123 = t^{p_123}``
    and verifies the valuations, the two families of quadratic inequalities
    and ``HypDet(a) <= 0`` through exact sign computations.
    """
    if p.n != 3:
        raise ValueError("realize3 needs n = 3")
    if not p.is_finite:
        raise ValueError("realize3 needs finite values")
    if p[0] != 0:
        raise ValueError("realize3 needs p(∅) = 0")
    r = check3(p)
    if not r.passed:
        return Realization(False, [], 0, {}, {"kind": "edge", "via": "check3",
                                              "edge": [subset_str(r.edge[0], 3), subset_str(r.edge[1], 3)]})
    scale = lcm(*(Fraction(v).denominator for v in p.values))
    ints = [int(v * scale) for v in p.values]
    K = get_field("Q(t)")
    t = K.t
    a = []
    for S, k in enumerate(ints):
        size = popcount(S)
        mono = t ** k
        a.append(K.one() if size == 0 else (-mono if size in (1, 2) else mono))
    checks = {"valuations": all(x.valuation() == k for x, k in zip(a, ints))}
    pairs_ok = True
    triples_ok = True
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            bi, bj = 1 << i, 1 << j
            if (a[bi] * a[bj] - a[bi | bj]).sign() < 0:
                pairs_ok = False
            k = 3 - i - j
            bk = 1 << k
            if (a[bi | bk] * a[bj | bk] - a[bk] * a[7]).sign() < 0:
                triples_ok = False
    checks["pair_inequalities"] = pairs_ok
    checks["triple_inequalities"] = triples_ok
    h = hypdet(a)
    checks["hypdet_sign"] = h.sign()
    checks["hypdet_nonpositive"] = h.sign() <= 0
    ok = all(v for key, v in checks.items() if key != "hypdet_sign")
    return Realization(ok, a, scale, checks)
