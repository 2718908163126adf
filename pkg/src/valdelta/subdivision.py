"""Regular subdivisions of the cube induced by a subset function.

Face tests are exact LPs; the valuated Δ-matroid checker combines the local
3- and 4-dimensional certificates with the exchange axiom on the domain.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator

from .cube import (
    INF,
    ConvexCircuit,
    CubeFace,
    center_circuits,
    enumerate_faces,
    indicator,
    popcount,
    subset_str,
)
from .deltamatroid import BasisFamily, find_exchange_violation
from .linalg import affinely_independent, nullspace, rank, rref, solve
from .lp import lp_strict_feasible, maximize
from .subset_function import SubsetFunction


@dataclass(frozen=True)
class FaceWitness:
    """``phi.e_S + p_S = b`` on the face, ``>= b + margin`` elsewhere on dom p."""

    phi: tuple[Fraction, ...]
    b: Fraction
    margin: Fraction

    def verify(self, p: SubsetFunction, V: Iterable[int]) -> bool:
        V = set(V)
        for s in p.dom:
            lhs = sum((c for i, c in enumerate(self.phi) if s >> i & 1), Fraction(0)) + p[s]
            if s in V:
                if lhs != self.b:
                    return False
            elif lhs < self.b + self.margin:
                return False
        return self.margin > 0


def _face_lp(p: SubsetFunction, V: set[int]) -> FaceWitness | None:
    n = p.n
    eq = [(indicator(s, n) + [-1], -p[s]) for s in sorted(V)]
    ge = [(indicator(u, n) + [-1], -p[u]) for u in p.dom if u not in V]
    sol = lp_strict_feasible(eq, ge)
    if sol is None:
        return None
    return FaceWitness(sol.y[:n], sol.y[n], sol.margin)


def _lift_witness(p: SubsetFunction, face: CubeFace, w: FaceWitness) -> FaceWitness:
    """Extend a witness for ``p`` restricted to ``face`` to all of dom p.

    Adds ``M`` times the number of fixed coordinates a vertex disagrees on,
    which leaves the face untouched and pushes everything else up by >= M.
    """
    phi = [Fraction(0)] * p.n
    for k, c in enumerate(face.free):
        phi[c] = w.phi[k]
    b = w.b

    def gap(u):
        return sum((phi[i] for i in range(p.n) if u >> i & 1), Fraction(0)) + p[u] - b

    need = [w.margin - gap(u) for u in p.dom if not face.contains(u)]
    M = max([Fraction(0)] + need)
    ones = 0
    for c, bit in face.fixed:
        if bit:
            phi[c] -= M
            ones += 1
        else:
            phi[c] += M
    return FaceWitness(tuple(phi), b - M * ones, w.margin)


def smallest_face(n: int, V: Iterable[int]) -> CubeFace:
    V = list(V)
    meet = (1 << n) - 1
    join = 0
    for s in V:
        meet &= s
        join |= s
    free = tuple(c for c in range(n) if (join ^ meet) >> c & 1)
    fixed = tuple((c, (meet >> c) & 1) for c in range(n) if not (join ^ meet) >> c & 1)
    return CubeFace(n, fixed, free)


def is_face(p: SubsetFunction, V: Iterable[int], local: bool = False) -> FaceWitness | None:
    """Witness that ``V`` is exactly the vertex set of a cell of S_p, or None.

    With ``local`` the LP only involves the smallest cube face containing V
    (cells inside a face are the cells of the restriction); the witness is
    then extended back to the whole domain.
    """
    V = set(V)
    if not V:
        raise ValueError("vertex set must be nonempty")
    if any(p[s] == INF for s in V):
        raise ValueError("vertex set is not contained in dom p")
    if not local:
        w = _face_lp(p, V)
    else:
        face = smallest_face(p.n, V)
        q = p.restrict(face)
        w = _face_lp(q, {face.to_local(s) for s in V})
        if w is not None:
            w = _lift_witness(p, face, w)
    if w is not None and not w.verify(p, V):
        raise AssertionError("face witness failed re-verification")
    return w


def _dominated_by_other_pair(p: SubsetFunction, S: int, T: int) -> bool:
    """Another pair with the same midpoint and no larger value sum rules out [S, T]."""
    diff = S ^ T
    total = p[S] + p[T]
    sub = (diff - 1) & diff
    while True:
        # U agrees with S off diff; U' is its antipode inside the face
        U = (S & ~diff) | sub
        U2 = U ^ diff
        if U != S and U != T and p[U] + p[U2] <= total:
            return True
        if sub == 0:
            return False
        sub = (sub - 1) & diff


def iter_long_edges(p: SubsetFunction, min_len: int, prefilter: bool = True,
                    local: bool = True) -> Iterator[tuple[int, int]]:
    dom = p.dom
    for k, S in enumerate(dom):
        for T in dom[k + 1:]:
            if popcount(S ^ T) < min_len:
                continue
            if prefilter and _dominated_by_other_pair(p, S, T):
                continue
            if is_face(p, (S, T), local=local) is not None:
                yield S, T


def long_edges(p: SubsetFunction, min_len: int, prefilter: bool = True,
               local: bool = True) -> list[tuple[int, int]]:
    """All 1-cells ``(S, T)`` of S_p with ``|S Δ T| >= min_len``, S < T."""
    return list(iter_long_edges(p, min_len, prefilter, local))


# -- local certificates ----------------------------------------------------

# pairs (A, B) for the six quantities on a 3-face, in local coordinates
_CHECK3_TERMS = (
    ((0b000, 2), (0b111, 2)),
    ((0b001, 2), (0b110, 2)),
    ((0b010, 2), (0b101, 2)),
    ((0b100, 2), (0b011, 2)),
    ((0b000, 1), (0b011, 1), (0b101, 1), (0b110, 1)),
    ((0b001, 1), (0b010, 1), (0b100, 1), (0b111, 1)),
)


@dataclass(frozen=True)
class Check3Result:
    passed: bool
    quantities: tuple
    argmin: tuple[int, ...]
    edge: tuple[int, int] | None = None  # global masks of the forced long edge


def _as_face(p: SubsetFunction, face: CubeFace | None, dim: int) -> CubeFace:
    if face is None:
        if p.n != dim:
            raise ValueError(f"expected a {dim}-dimensional cube, got n={p.n}")
        return CubeFace(dim, (), tuple(range(dim)))
    if face.dim != dim:
        raise ValueError(f"expected a {dim}-dimensional face, got dimension {face.dim}")
    return face


def check3(p: SubsetFunction, face: CubeFace | None = None) -> Check3Result:
    """The six-quantity test on a 3-dimensional face."""
    face = _as_face(p, face, 3)
    vals = []
    for term in _CHECK3_TERMS:
        total = Fraction(0)
        for loc, mult in term:
            total = total + mult * p[face.to_global(loc)]
        vals.append(total)
    m = min(vals)
    argmin = tuple(k for k, v in enumerate(vals) if v == m)
    passed = m == INF or len(argmin) >= 2 or argmin[0] >= 4
    edge = None
    if not passed:
        (a, _), (b, _) = _CHECK3_TERMS[argmin[0]]
        edge = tuple(sorted((face.to_global(a), face.to_global(b))))
    return Check3Result(passed, tuple(vals), argmin, edge)


@lru_cache(maxsize=None)
def _circuits4() -> tuple[ConvexCircuit, ...]:
    return tuple(center_circuits(4))


@dataclass(frozen=True)
class Check4Result:
    passed: bool
    facet_failure: tuple[CubeFace, Check3Result] | None = None
    circuit_min: object = None
    circuit_argmin: tuple[ConvexCircuit, ...] = ()  # circuits in local coordinates

    @property
    def min_count(self) -> int:
        return len(self.circuit_argmin)


def check4(p: SubsetFunction, face: CubeFace | None = None) -> Check4Result:
    """Facet checks plus the center-circuit minimum on a 4-dimensional face."""
    face = _as_face(p, face, 4)
    for sub in enumerate_faces(4, 3):
        facet = CubeFace(
            p.n,
            tuple(sorted(face.fixed + tuple((face.free[c], b) for c, b in sub.fixed))),
            tuple(face.free[c] for c in sub.free),
        )
        r = check3(p, facet)
        if not r.passed:
            return Check4Result(False, (facet, r))
    if all(p[face.to_global(s)] == INF for s in range(16)):
        return Check4Result(True, None, INF, ())
    local = p.restrict(face)
    values = [(c.value(local), c) for c in _circuits4()]
    m = min(v for v, _ in values)
    argmin = tuple(c for v, c in values if v == m)
    passed = m == INF or len(argmin) >= 2
    return Check4Result(passed, None, m, argmin)


@dataclass
class Verdict:
    valuated: bool
    certificate: dict | None = None
    checked_faces: int = 0

    def __bool__(self):
        return self.valuated

    def to_json(self) -> dict:
        return {"valuated": self.valuated, "certificate": self.certificate}


def _edge_cert(n: int, edge, via: str, face: CubeFace | None) -> dict:
    cert = {"kind": "edge", "via": via, "edge": [subset_str(edge[0], n), subset_str(edge[1], n)]}
    if face is not None:
        cert["face"] = str(face)
    return cert


def is_valuated_delta_matroid(p: SubsetFunction, find_edge: bool = True) -> Verdict:
    """Decide whether S_p has only cells with edges of length at most 2.

    For n >= 4 this is the exchange axiom on dom p plus ``check4`` on every
    4-face.  Certificates name a forbidden edge whenever one can be produced;
    ``find_edge=False`` skips the LP search used for circuit failures whose
    minimizer is not a single antipodal pair.
    """
    n = p.n
    if n <= 2:
        return Verdict(True)
    if n == 3:
        r = check3(p)
        if r.passed:
            return Verdict(True, None, 1)
        return Verdict(False, _edge_cert(n, r.edge, "check3", None), 1)

    dom = BasisFamily(n, frozenset(p.dom))
    bad = find_exchange_violation(dom)
    if bad is not None:
        A, B, a = bad
        cert = {"kind": "exchange", "A": subset_str(A, n), "B": subset_str(B, n),
                "a": a.bit_length()}
        if find_edge:
            e = next(iter_long_edges(p, 3), None)
            if e is not None:
                cert["edge"] = [subset_str(e[0], n), subset_str(e[1], n)]
        return Verdict(False, cert)

    checked = 0
    for face in enumerate_faces(n, 4):
        checked += 1
        r = check4(p, face)
        if r.passed:
            continue
        if r.facet_failure is not None:
            facet, r3 = r.facet_failure
            return Verdict(False, _edge_cert(n, r3.edge, "check3", facet), checked)
        (circ,) = r.circuit_argmin
        cert = {"kind": "circuit", "face": str(face),
                "circuit": [subset_str(face.to_global(s), n) for s in circ.support],
                "weights": [str(w) for w in circ.weights]}
        if len(circ.support) == 2:
            edge = tuple(sorted(face.to_global(s) for s in circ.support))
            cert = _edge_cert(n, edge, "check4", face) | {"circuit": cert["circuit"]}
        elif find_edge:
            e = next(iter_long_edges(p.restrict(face), 3), None)
            if e is not None:
                edge = tuple(sorted((face.to_global(e[0]), face.to_global(e[1]))))
                cert["edge"] = [subset_str(edge[0], n), subset_str(edge[1], n)]
        return Verdict(False, cert, checked)
    return Verdict(True, None, checked)


# -- cells -----------------------------------------------------------------

@dataclass(frozen=True)
class Cell:
    vertices: tuple[int, ...]
    dim: int


def cell_edges(cell: Cell, n: int) -> list[tuple[int, int]]:
    """Vertex pairs spanning an edge of the polytope of ``cell``."""
    zero = SubsetFunction.from_callable(n, lambda s: 0 if s in cell.vertices else INF)
    verts = cell.vertices
    return [(S, T) for k, S in enumerate(verts) for T in verts[k + 1:]
            if is_face(zero, (S, T), local=True) is not None]


class CellBudgetExceeded(RuntimeError):
    pass


def _projection(points: list[int], n: int) -> list[int]:
    """Coordinates on which projection is injective on the affine hull of points."""
    base = indicator(points[0], n)
    diffs = [[x - y for x, y in zip(indicator(s, n), base)] for s in points[1:]]
    if not diffs:
        return []
    _, pivots = rref(diffs)
    return pivots


def _lift(points, heights, idx):
    """Affine function ``psi.x + beta`` through the given points, or None."""
    a = [list(points[k]) + [1] for k in idx]
    return solve(a, [heights[k] for k in idx])


def _evaluate(lift, x):
    return sum((c * v for c, v in zip(lift, x)), Fraction(0)) + lift[-1]


def _cells_exhaustive(points, heights) -> list[frozenset[int]]:
    d = len(points[0])
    m = len(points)
    found: list[int] = []  # index bitmasks
    cells = []
    for combo in itertools.combinations(range(m), d + 1):
        mask = sum(1 << k for k in combo)
        if any(mask & f == mask for f in found):
            continue
        if not affinely_independent([points[k] for k in combo]):
            continue
        lift = _lift(points, heights, combo)
        if lift is None:
            continue
        tight = 0
        ok = True
        for k in range(m):
            h = _evaluate(lift, points[k])
            if h > heights[k]:
                ok = False
                break
            if h == heights[k]:
                tight |= 1 << k
        if ok:
            found.append(tight)
            cells.append(frozenset(k for k in range(m) if tight >> k & 1))
    return cells


def cone_rays(rows: list[list[int]]) -> list[tuple[tuple[int, ...], int]]:
    """Extreme rays of the pointed cone ``{y : a.y >= 0}`` by double description.

    ``rows`` must span the ambient space.  Returns ``(ray, zero_set)`` with the
    zero set as a bitmask over row indices.
    """
    D = len(rows[0])
    basis = []
    for k, r in enumerate(rows):
        if rank([rows[j] for j in basis] + [r]) == len(basis) + 1:
            basis.append(k)
            if len(basis) == D:
                break
    if len(basis) < D:
        raise ValueError("constraint rows do not span; cone is not pointed")
    A0 = [rows[k] for k in basis]
    rays = []
    for col in range(D):
        y = solve(A0, [int(i == col) for i in range(D)])
        rays.append(_normalize(y))
    all_basis = sum(1 << k for k in basis)
    zeros = [all_basis & ~(1 << basis[col]) for col in range(D)]
    for r_idx, a in enumerate(rows):
        if (all_basis >> r_idx) & 1:
            continue
        vals = [sum(x * y for x, y in zip(a, ray)) for ray in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        new_rays = []
        new_zeros = []
        for k, v in enumerate(vals):
            if v >= 0:
                new_rays.append(rays[k])
                new_zeros.append(zeros[k] | (1 << r_idx) if v == 0 else zeros[k])
        for i in pos:
            for j in neg:
                common = zeros[i] & zeros[j]
                if popcount(common) < D - 2:
                    continue
                if any(k != i and k != j and common & zeros[k] == common for k in range(len(rays))):
                    continue
                vi, vj = vals[i], vals[j]
                y = [vi * b - vj * c for b, c in zip(rays[j], rays[i])]
                new_rays.append(_normalize(y))
                new_zeros.append(common | (1 << r_idx))
        rays, zeros = new_rays, new_zeros
    return list(zip(rays, zeros))


def _normalize(y) -> tuple[int, ...]:
    y = [Fraction(v) for v in y]
    den = 1
    for v in y:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in y]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints) if g else tuple(ints)


def polytope_facets(points: list[tuple[int, ...]]) -> list[tuple[tuple[int, ...], int]]:
    """Facets ``u.x >= s`` of a full-dimensional lattice polytope."""
    rows = [list(x) + [-1] for x in points]
    out = []
    for ray, _ in cone_rays(rows):
        out.append((ray[:-1], ray[-1]))
    return out


def _cells_bfs(points, heights, budget: int) -> list[frozenset[int]]:
    d = len(points[0])
    m = len(points)
    centroid = [sum(x[i] for x in points) for i in range(d)]
    ge = [([-v for v in x] + [-1], -h) for x, h in zip(points, heights)]
    res = maximize(centroid + [m], (), ge)
    if res.status != "optimal":
        raise AssertionError(f"lower-hull LP not optimal: {res.status}")
    start = tuple(res.y)

    def tight(lift):
        return frozenset(k for k in range(m) if _evaluate(lift, points[k]) == heights[k])

    first = tight(start)
    seen = {first: start}
    queue = [first]
    while queue:
        cell = queue.pop()
        lift = seen[cell]
        verts = sorted(cell)
        for u, s in polytope_facets([points[k] for k in verts]):
            below = [k for k in range(m) if sum(a * b for a, b in zip(u, points[k])) < s]
            if not below:
                continue
            t = min(
                (heights[k] - _evaluate(lift, points[k])) / (s - sum(a * b for a, b in zip(u, points[k])))
                for k in below
            )
            new_lift = tuple(c - t * a for c, a in zip(lift[:d], u)) + (lift[d] + t * s,)
            nxt = tight(new_lift)
            if nxt not in seen:
                if len(seen) >= budget:
                    raise CellBudgetExceeded(f"more than {budget} maximal cells")
                seen[nxt] = new_lift
                queue.append(nxt)
    return list(seen)


def maximal_cells(p: SubsetFunction, mode: str = "auto", budget: int = 100_000) -> list[Cell]:
    """Inclusion-maximal cells of S_p, sorted by vertex list.

    ``exhaustive`` interpolates every affinely independent (d+1)-subset of dom p
    and keeps lower ones (n <= 4); ``bfs`` walks across interior walls starting
    from the cell above the centroid (n <= 6).  ``auto`` picks exhaustive for
    n <= 3.
    """
    n = p.n
    if mode == "auto":
        mode = "exhaustive" if n <= 3 else "bfs"
    if mode == "exhaustive" and n > 4:
        raise ValueError("exhaustive cell enumeration is limited to n <= 4")
    if mode == "bfs" and n > 6:
        raise ValueError("BFS cell enumeration is limited to n <= 6")
    if mode not in ("exhaustive", "bfs"):
        raise ValueError(f"unknown mode {mode!r}")
    dom = p.dom
    coords = _projection(dom, n)
    d = len(coords)
    if d == 0:
        return [Cell((dom[0],), 0)]
    points = [tuple((s >> c) & 1 for c in coords) for s in dom]
    heights = [p[s] for s in dom]
    if mode == "exhaustive":
        raw = _cells_exhaustive(points, heights)
    else:
        raw = _cells_bfs(points, heights, budget)
    cells = [Cell(tuple(sorted(dom[k] for k in c)), d) for c in raw]
    return sorted(cells, key=lambda c: c.vertices)


def cone_dimension(p: SubsetFunction, mode: str = "auto") -> int:
    """Dimension of the space of lifts inducing the same subdivision as p."""
    if not p.is_finite:
        raise ValueError("cone dimension needs a finite-valued function")
    n = p.n
    size = 1 << n
    equations = []
    for cell in maximal_cells(p, mode):
        cols = [indicator(s, n) + [1] for s in cell.vertices]
        matrix = [[col[r] for col in cols] for r in range(n + 1)]
        for mu in nullspace(matrix):
            row = [Fraction(0)] * size
            for s, c in zip(cell.vertices, mu):
                row[s] = c
            equations.append(row)
    return size - (rank(equations) if equations else 0)
