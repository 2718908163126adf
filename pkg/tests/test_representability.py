import random

import pytest
import sympy

from conftest import by_size
from valdelta.cube import INF
from valdelta.fields import PRESETS, get_field
from valdelta.generators import random_fixed, random_matrix, random_valuated3, random_vector
from valdelta.matrices import MatrixK, det, det_cofactor, inverse, matmul, structure_holds
from valdelta.polys import Poly, rayleigh, residue_poly
from valdelta.representability import (det_poly, diagonal_poly, hypdet, isotropic_rep, minor_coefficients,
                                       principal_minor_valuations, principal_minors, realize3, scale_vars,
                                       skew_plus_rank_one, verify_factorization)
from valdelta.subdivision import is_valuated_delta_matroid

NON_VIOLATING = [name for name in PRESETS if not PRESETS[name].get("violating")]
T, I, A_ = sympy.symbols("t"), sympy.I, sympy.Symbol("a")


def matrix(spec, tag, rows):
    K = get_field(spec)
    return MatrixK(K, tuple(tuple(K(x) for x in r) for r in rows), tag)


def herm_t():
    return matrix("Q(i)(t)", "hermitian", [["t", "i", "i"], ["-i", "t", "i"], ["-i", "-i", "t"]])


def herm_w():
    return matrix("Q[w]-2adic", "hermitian", [["1", "1+2*a", "1+2*a"], ["-1-2*a", "1", "1+2*a"],
                                              ["-1-2*a", "-1-2*a", "1"]])


def skew_w():
    return matrix("Q[w]-2adic", "skew-hermitian", [["0", "1", "1"], ["-1", "0", "1+2*a"], ["-1", "1+2*a", "0"]])


def violating():
    return matrix("Q[a2]-2adic-split", "hermitian", [["4", "4+a", "3-a"], ["3-a", "4", "4+a"], ["4+a", "3-a", "4"]])


def poly(K, n, text):
    """Multiaffine polynomial from {monomial string: coefficient string}."""
    out = {}
    for mono, c in text.items():
        mask = sum(1 << (int(ch) - 1) for ch in mono)
        out[mask] = K(c)
    return Poly.multiaffine(K, n, out)


def sympy_quadratic_det(rows, minpoly):
    """Determinant over Q[a]/(minpoly) with sympy, as a reduced polynomial in a."""
    M = sympy.Matrix([[sympy.sympify(x.replace("^", "**"), locals={"a": A_}) for x in r] for r in rows])
    return sympy.rem(sympy.expand(M.det()), minpoly, A_)


# -- worked examples ---------------------------------------------------------

def test_hermitian_t_example():
    A = herm_t()
    K = A.K
    assert principal_minor_valuations(A) == by_size(3, [0, 1, 0, 1])
    f = diagonal_poly(A)
    assert f == poly(K, 3, {"123": "1", "12": "t", "13": "t", "23": "t", "1": "-1+t^2", "2": "-1+t^2",
                            "3": "-1+t^2", "": "-3*t+t^3"})
    d = rayleigh(f, 0, 1)
    x3 = Poly.var(K, 3, 2)
    assert d == x3 * x3 + x3 * K("2*t") + Poly.constant(K, 3, "1+t^2")
    g1 = Poly.constant(K, 3, "-1+i*t") + x3 * K("i")
    g2 = Poly.constant(K, 3, "-1-i*t") - x3 * K("i")
    assert d == g1 * g2
    R = K.residue_field()
    r = residue_poly(d)
    y3 = Poly.var(R, 3, 2)
    assert r == (Poly.constant(R, 3, -1) + y3 * R("i")) * (Poly.constant(R, 3, -1) - y3 * R("i"))
    fac = verify_factorization(A, None, 0, 1)
    assert fac.passed and fac.branch == "dodgson"


def test_hermitian_w_example():
    A = herm_w()
    K = A.K
    assert principal_minor_valuations(A) == by_size(3, [0, 0, 1, 3])
    f = diagonal_poly(A)
    assert f == poly(K, 3, {"123": "1", "12": "1", "13": "1", "23": "1", "1": "-2", "2": "-2", "3": "-2", "": "-8"})
    d = rayleigh(f, 0, 1)
    x3 = Poly.var(A.K, 3, 2)
    # 3(x3^2 + 2 x3 + 4)
    assert d == (x3 * x3 + x3 * 2 + Poly.constant(K, 3, 4)) * 3
    assert d == (x3 * K("1+2*a") + Poly.constant(K, 3, "-2+2*a")) * (x3 * K("-1-2*a") + Poly.constant(K, 3, "-4-2*a"))
    R = K.residue_field()
    y3 = Poly.var(R, 3, 2)
    assert residue_poly(d) == y3 * y3
    assert verify_factorization(A, None, 0, 1).passed
    assert is_valuated_delta_matroid(principal_minor_valuations(A))


def test_skew_w_example():
    A = skew_w()
    p = principal_minor_valuations(A)
    assert p == by_size(3, [0, INF, 0, 1])
    assert is_valuated_delta_matroid(p)
    f = diagonal_poly(A)
    const = sympy_quadratic_det([["0", "1", "1"], ["-1", "0", "1+2*a"], ["-1", "1+2*a", "0"]], A_ ** 2 + A_ + 1)
    assert sympy.expand(const - (-2 - 4 * A_)) == 0
    assert f.coeff_mask(0) == A.K("-2-4*a")
    assert f == poly(A.K, 3, {"123": "1", "1": "3", "2": "1", "3": "1", "": "-2-4*a"})
    assert verify_factorization(A, None, 0, 1).passed


def test_violating_example():
    A = violating()
    f = diagonal_poly(A)
    assert f == poly(A.K, 3, {"123": "1", "12": "4", "13": "4", "23": "4", "1": "2", "2": "2", "3": "2", "": "-55"})
    p = principal_minor_valuations(A)
    assert p == by_size(3, [0, 2, 1, 0])
    v = is_valuated_delta_matroid(p)
    assert not v and v.certificate["edge"] == ["", "123"]


# -- determinants and structure ----------------------------------------------

def to_sympy(x):
    return sympy.sympify(str(x).replace("^", "**").replace("i", "I"), locals={"t": T})


def test_det_matches_sympy_and_cofactor():
    K = get_field("Q(i)(t)")
    rng = random.Random(3)
    for n in (1, 2, 3, 4):
        for _ in range(4):
            rows = [[K.random(rng, zero_prob=0.2) for _ in range(n)] for _ in range(n)]
            d = det(rows, K)
            assert d == det_cofactor(rows, K)
            ref = sympy.Matrix([[to_sympy(x) for x in r] for r in rows]).det()
            assert sympy.simplify(to_sympy(d) - ref) == 0


@pytest.mark.parametrize("name", list(PRESETS))
def test_det_multiplicative_and_inverse(name):
    K = get_field(name)
    rng = random.Random(name)
    for n in (2, 3):
        a = [[K.random(rng) for _ in range(n)] for _ in range(n)]
        b = [[K.random(rng) for _ in range(n)] for _ in range(n)]
        assert det(matmul(a, b, K), K) == det(a, K) * det(b, K)
        if det(a, K):
            ident = matmul(a, inverse(a, K), K)
            assert all(ident[i][j] == (K.one() if i == j else K.zero()) for i in range(n) for j in range(n))


def test_matrix_structure_validation():
    K = get_field("Q(i)(t)")
    with pytest.raises(ValueError):
        MatrixK(K, ((K("i"), K(0)), (K(0), K(1))), "hermitian")
    with pytest.raises(ValueError):
        MatrixK(K, ((K(1), K(2)),), "general")
    A = herm_t()
    assert MatrixK.from_json(A.to_json()) == A


@pytest.mark.parametrize("tag", ["hermitian", "skew-hermitian", "symmetric", "skew-symmetric", "general"])
def test_random_matrix_has_structure(tag):
    K = get_field("Q(i)(t)")
    A = random_matrix(K, 4, random.Random(tag), tag)
    assert structure_holds(A.entries, tag)


# -- polynomials ---------------------------------------------------------------

def test_rayleigh_trivial():
    K = get_field("Q(t)")
    f = Poly.var(K, 2, 0) * Poly.var(K, 2, 1)
    assert not rayleigh(f, 0, 1)
    with pytest.raises(ValueError):
        rayleigh(f, 0, 0)


def test_det_poly_consistency():
    K = get_field("Q(i)(t)")
    rng = random.Random(11)
    for n in (2, 3, 4):
        A = random_matrix(K, n, rng, "hermitian")
        f = diagonal_poly(A)
        assert f.is_multiaffine()
        assert minor_coefficients(f) == principal_minors(A)
        vecs = [random_vector(K, n, rng) for _ in range(n)]
        g = det_poly(A.entries, vecs, K)
        point = [random_fixed(K, rng, size=2) for _ in range(n)]
        direct = [list(r) for r in A.entries]
        for x, v in zip(point, vecs):
            for a in range(n):
                for b in range(n):
                    direct[a][b] = direct[a][b] + x * v[a] * v[b].conj()
        assert g.evaluate(point) == det(direct, K)


def test_scale_vars():
    K = get_field("Q(i)(t)")
    rng = random.Random(5)
    A = random_matrix(K, 3, rng, "hermitian")
    f = diagonal_poly(A)
    assert scale_vars(f, [K.one()] * 3) == f
    lam = [K.random(rng) or K.one() for _ in range(3)]
    scale_vars(f, lam)  # asserts the identity internally
    lhs = rayleigh(f.scale_vars(lam), 1, 2)
    rhs = rayleigh(f, 1, 2).scale_vars(lam) * (lam[1] * lam[2])
    assert lhs == rhs


def test_residue_of_positive_valuation_is_zero():
    K = get_field("Q(t)")
    f = Poly.multiaffine(K, 2, {0: K("t"), 3: K("t^2+t")})
    assert not residue_poly(f)
    with pytest.raises(ValueError):
        residue_poly(Poly.multiaffine(K, 2, {0: K("1/t")}))


def test_poly_printing():
    K = get_field("Q(t)")
    f = Poly.multiaffine(K, 2, {3: K(1), 1: K("-1"), 0: K("t-1")})
    assert str(f) == "x1*x2 - x1 + (-1+t)"


# -- factorization ----------------------------------------------------------

def test_factorization_symmetric_rational():
    K = get_field("Q-3adic")
    A = random_matrix(K, 3, random.Random(1), "symmetric")
    fac = verify_factorization(A, None, 0, 2)
    assert fac.passed and fac.sigma == 1


def test_factorization_skew_twist():
    K = get_field("Q(i)(t)-twist")
    A = random_matrix(K, 4, random.Random(2), "skew-hermitian")
    fac = verify_factorization(A, None, 1, 3)
    assert fac.passed and fac.sigma == -1


def test_factorization_dependent_branch():
    K = get_field("Q(i)(t)")
    rng = random.Random(9)
    for tag in ("hermitian", "skew-hermitian"):
        A = random_matrix(K, 3, rng, tag)
        v2 = random_vector(K, 3, rng, zero_prob=0)
        lam = K.random(rng) or K.one()
        vecs = [[lam * x for x in v2], v2, random_vector(K, 3, rng)]
        fac = verify_factorization(A, vecs, 0, 1)
        assert fac.passed and fac.branch == "dependent"


def test_factorization_general_vectors():
    K = get_field("Q[i]-3adic")
    rng = random.Random(4)
    A = random_matrix(K, 3, rng, "hermitian")
    vecs = [random_vector(K, 3, rng) for _ in range(4)]
    assert verify_factorization(A, vecs, 0, 3).passed


# -- skew + rank one, isotropic, realize3 -----------------------------------

def test_skew_plus_rank_one_alpha_zero():
    K = get_field("Q(t)")
    B = random_matrix(K, 4, random.Random(1), "skew-symmetric")
    rep = skew_plus_rank_one(B, 0, random_vector(K, 4, random.Random(2)))
    assert rep.parity_ok and rep.verdict
    assert rep.p == principal_minor_valuations(B)


def test_skew_plus_rank_one_random():
    K = get_field("Q(t)")
    rng = random.Random(8)
    for _ in range(5):
        B = random_matrix(K, 4, rng, "skew-symmetric")
        rep = skew_plus_rank_one(B, K.random(rng) or K.one(), random_vector(K, 4, rng))
        assert rep.parity_ok and rep.verdict


def test_isotropic_quadratic_even_zero():
    K = get_field("Q(t)")
    Z = MatrixK(K, tuple(tuple(K.zero() for _ in range(3)) for _ in range(3)), "skew-symmetric")
    rep = isotropic_rep("quadratic-even", Z)
    assert rep.p[0] == 0
    assert all(rep.p[s] == INF for s in range(1, 8))


@pytest.mark.parametrize("form,tag,spec", [("symplectic", "symmetric", "Q(t)"),
                                           ("quadratic-even", "skew-symmetric", "Q(t)"),
                                           ("quadratic-odd", "skew-symmetric", "Q-3adic"),
                                           ("hermitian-even", "skew-hermitian", "Q(i)(t)")])
def test_isotropic_forms(form, tag, spec):
    K = get_field(spec)
    rng = random.Random(form)
    for _ in range(3):
        A = random_matrix(K, 3, rng, tag)
        if form == "quadratic-odd":
            rep = isotropic_rep(form, A, random_vector(K, 3, rng), random_fixed(K, rng))
        else:
            rep = isotropic_rep(form, A)
        assert rep.verdict
        assert set(rep.signs) <= {-1, 0, 1}


def test_isotropic_rejects_wrong_structure():
    K = get_field("Q(t)")
    A = random_matrix(K, 3, random.Random(0), "skew-symmetric")
    with pytest.raises(ValueError):
        isotropic_rep("symplectic", A)


def test_realize3_examples():
    K = get_field("Q(t)")
    r = realize3(by_size(3, [0, 1, 0, 1]))
    t = K.t
    assert r.ok
    assert r.a == [K.one(), -t, -t, K(-1), -t, K(-1), K(-1), t]
    assert all(r.checks.values())
    z = realize3(by_size(3, [0, 0, 0, 0]))
    assert z.ok
    assert z.a == [K(1), K(-1), K(-1), K(-1), K(-1), K(-1), K(-1), K(1)]
    bad = realize3(by_size(3, [0, 2, 1, 0]))
    assert not bad.ok and bad.certificate["edge"] == ["", "123"]


def test_realize3_rational_and_preconditions():
    rng = random.Random(12)
    for _ in range(10):
        r = realize3(random_valuated3(rng, rational=True))
        assert r.ok
    with pytest.raises(ValueError):
        realize3(by_size(3, [1, 0, 0, 0]))
    with pytest.raises(ValueError):
        realize3(by_size(3, [0, INF, 0, 0]))


def test_hypdet_of_actual_minors_is_a_square_discriminant():
    # for a real symmetric 3x3 matrix the hyperdeterminant of its principal minors is <= 0
    K = get_field("Q(t)")
    rng = random.Random(6)
    for _ in range(10):
        A = random_matrix(K, 3, rng, "symmetric")
        h = hypdet(principal_minors(A))
        assert h.sign() <= 0
