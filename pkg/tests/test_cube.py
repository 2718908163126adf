import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from valdelta.cube import (ConvexCircuit, CubeFace, SignedSymmetry, center_circuits, complement,
                           enumerate_faces, orbit, parse_subset, subset_str, symmetries)
from valdelta.linalg import affinely_independent, rank

H = Fraction(1, 2)


def test_subset_strings_round_trip():
    for n in range(1, 6):
        for s in range(1 << n):
            assert parse_subset(subset_str(s, n), n) == s
    assert subset_str(0b101, 3) == "13"
    assert parse_subset("", 4) == 0
    assert complement(0b0011, 4) == 0b1100


def test_parse_subset_rejects_garbage():
    with pytest.raises(ValueError):
        parse_subset("15", 4)
    with pytest.raises(ValueError):
        parse_subset("11", 3)


@pytest.mark.parametrize("n,dim,count", [(4, 4, 1), (4, 3, 8), (5, 4, 10), (3, 0, 8), (4, 2, 24)])
def test_face_counts(n, dim, count):
    faces = enumerate_faces(n, dim)
    assert len(faces) == count
    assert len({str(f) for f in faces}) == count


def test_face_local_global_round_trip():
    for face in enumerate_faces(4, 2):
        verts = face.vertices()
        assert len(verts) == 4
        for local, g in enumerate(verts):
            assert face.contains(g)
            assert face.to_local(g) == local


def test_spanned_by():
    f = CubeFace.spanned_by(4, 0b0001, 0b0111)
    assert str(f) == "1**0"
    assert f.dim == 2


def _random_symmetry(data, n):
    perm = tuple(data.draw(st.permutations(range(n))))
    flips = data.draw(st.integers(0, (1 << n) - 1))
    return SignedSymmetry(perm, flips)


@given(st.data())
def test_group_laws(data):
    n = data.draw(st.integers(1, 6))
    g = _random_symmetry(data, n)
    h = _random_symmetry(data, n)
    S = data.draw(st.integers(0, (1 << n) - 1))
    assert g.compose(h)(S) == g(h(S))
    assert g(g.inverse()(S)) == S
    assert g.inverse()(g(S)) == S
    assert SignedSymmetry.identity(n)(S) == S


def test_group_order():
    assert len(list(symmetries(3))) == 48
    assert len(set(symmetries(3))) == 48


def test_orbit_sizes():
    antipodal = ConvexCircuit.make(4, [(0, H), (0b1111, H)])
    assert len(orbit(4, antipodal)) == 8
    third = ConvexCircuit.make(4, [(0, Fraction(1, 3))] + [(s, Fraction(1, 6)) for s in (0b0111, 0b1011, 0b1101, 0b1110)])
    assert len(orbit(4, third)) == 16
    seg = ConvexCircuit.make(1, [(0, H), (1, H)])
    assert len(orbit(1, seg)) == 1


def test_center_circuits_n2():
    cs = center_circuits(2)
    assert [c.support for c in cs] == [(0, 3), (1, 2)]
    assert all(c.weights == (H, H) for c in cs)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_center_circuits_are_circuits(n):
    half = tuple([H] * n)
    for c in center_circuits(n):
        assert c.barycenter == half
        assert affinely_independent([[s >> i & 1 for i in range(n)] for s in c.support])


def _brute_center_circuits(n):
    """Independent enumeration: all affinely independent vertex sets whose hull has the center inside."""
    import sympy

    found = set()
    verts = range(1 << n)
    for k in range(2, n + 2):
        for support in itertools.combinations(verts, k):
            pts = [[s >> i & 1 for i in range(n)] for s in support]
            if rank([p + [1] for p in pts]) != k:
                continue
            lam = sympy.symbols(f"l0:{k}")
            eqs = [sum(l * p[i] for l, p in zip(lam, pts)) - sympy.Rational(1, 2) for i in range(n)]
            eqs.append(sum(lam) - 1)
            sol = sympy.solve(eqs, lam, dict=True)
            if sol and all(sol[0].get(l, None) is not None and sol[0][l] > 0 for l in lam):
                found.add((support, tuple(Fraction(str(sol[0][l])) for l in lam)))
    return found


@pytest.mark.parametrize("n", [2, 3])
def test_center_circuits_match_brute_force(n):
    ours = {(c.support, c.weights) for c in center_circuits(n)}
    assert ours == _brute_center_circuits(n)


def test_center_circuits_n4_orbits():
    cs = center_circuits(4)
    reps = [
        ConvexCircuit.make(4, [(0, H), (0b1111, H)]),
        ConvexCircuit.make(4, [(s, Fraction(1, 4)) for s in (0, 0b1001, 0b0111, 0b1110)]),
        ConvexCircuit.make(4, [(0, Fraction(1, 3))] + [(s, Fraction(1, 6)) for s in (0b0111, 0b1011, 0b1101, 0b1110)]),
    ]
    orbits = [orbit(4, r) for r in reps]
    assert [len(o) for o in orbits] == [8, 24, 16]
    assert set(cs) == orbits[0] | orbits[1] | orbits[2]
    assert len(cs) == 48


def test_circuit_validation():
    with pytest.raises(ValueError):
        ConvexCircuit.make(2, [(0, Fraction(1, 3)), (3, Fraction(1, 3))])
    with pytest.raises(ValueError):
        ConvexCircuit.make(1, [(0, Fraction(1, 3)), (1, Fraction(1, 3)), (0, Fraction(1, 3))])
