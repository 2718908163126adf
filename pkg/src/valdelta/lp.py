"""Exact rational linear programming.

The workhorse is a dense two-phase tableau simplex over ``Fraction`` with
Bland's rule, solving ``min w.x  s.t.  M x = c, x >= 0``.  Problems with free
variables,

    max c.y   s.t.   E y = f,   G y >= h,

are solved through that standard-form dual; the optimal ``y`` is read off as
the simplex multipliers of the final basis.  Every system handled here has
few unknowns (at most n + 2) and many constraints, which keeps the dual
tableau narrow in rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import solve


class LPError(Exception):
    pass


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    y: tuple[Fraction, ...] | None = None


def _pivot(tab: list[list[Fraction]], r: int, c: int) -> None:
    row = tab[r]
    inv = 1 / row[c]
    if inv != 1:
        row[:] = [x * inv for x in row]
    for i, other in enumerate(tab):
        if i != r:
            f = other[c]
            if f:
                other[:] = [a - f * b for a, b in zip(other, row)]


def _run(tab, basis, cost_row: int, allowed) -> str:
    """Minimize with Bland's rule; the cost row stores reduced costs."""
    m = len(basis)
    last = len(tab[0]) - 1
    while True:
        z = tab[cost_row]
        enter = next((j for j in range(last) if allowed[j] and z[j] < 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][last] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        r = best[1]
        _pivot(tab, r, enter)
        basis[r] = enter


def simplex_standard(M: Sequence[Sequence], c: Sequence, w: Sequence):
    """Solve ``min w.x s.t. M x = c, x >= 0`` exactly.

    Returns ``(status, value, x, pi)`` where ``pi`` are optimal multipliers
    (a solution of the dual ``max c.pi s.t. M^T pi <= w``).
    """
    m = len(M)
    nvar = len(w)
    rows = []
    rhs = []
    for row, b in zip(M, c):
        row = [Fraction(x) for x in row]
        b = Fraction(b)
        if b < 0:
            row = [-x for x in row]
            b = -b
        rows.append(row)
        rhs.append(b)
    # columns: original vars, then one artificial per row, then rhs
    tab = []
    for i in range(m):
        art = [Fraction(int(i == k)) for k in range(m)]
        tab.append(rows[i] + art + [rhs[i]])
    width = nvar + m
    phase1 = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(nvar):
            phase1[j] -= tab[i][j]
        phase1[width] -= tab[i][width]
    tab.append(phase1)
    basis = list(range(nvar, nvar + m))
    allowed = [True] * width
    status = _run(tab, basis, m, allowed)
    if status != "optimal":
        raise LPError("phase one cannot be unbounded")
    if tab[m][width] != 0:
        return "infeasible", None, None, None
    tab.pop()

    # drive zero-level artificials out, dropping redundant rows
    i = 0
    while i < len(basis):
        if basis[i] >= nvar:
            j = next((j for j in range(nvar) if tab[i][j] != 0), None)
            if j is None:
                del tab[i]
                del basis[i]
                continue
            _pivot(tab, i, j)
            basis[i] = j
        i += 1
    m2 = len(basis)

    cost = [Fraction(x) for x in w] + [Fraction(0)] * m + [Fraction(0)]
    z = cost[:]
    for i in range(m2):
        cb = cost[basis[i]]
        if cb:
            z = [a - cb * b for a, b in zip(z, tab[i])]
    tab.append(z)
    allowed = [j < nvar for j in range(width)]
    status = _run(tab, basis, m2, allowed)
    if status == "unbounded":
        return "unbounded", None, None, None

    x = [Fraction(0)] * nvar
    for i, b in enumerate(basis):
        x[b] = tab[i][width]
    value = sum((Fraction(a) * b for a, b in zip(w, x)), Fraction(0))

    # multipliers: any solution of B^T pi = w_B is dual optimal, since
    # dropped rows only add directions in the left kernel of M
    bt = [[Fraction(M[r][b]) for r in range(m)] for b in basis]
    pi = solve(bt, [Fraction(w[b]) for b in basis])
    if pi is None:
        raise LPError("singular final basis")
    return "optimal", value, x, pi


def maximize(c: Sequence, eq: Sequence[tuple[Sequence, object]] = (),
             ge: Sequence[tuple[Sequence, object]] = ()) -> LPResult:
    """``max c.y`` over free ``y`` subject to ``a.y = b`` (eq) and ``a.y >= b`` (ge)."""
    dim = len(c)
    cols = []
    costs = []
    for a, b in eq:
        cols.append([Fraction(x) for x in a])
        costs.append(Fraction(b))
        cols.append([-Fraction(x) for x in a])
        costs.append(-Fraction(b))
    for a, b in ge:
        cols.append([-Fraction(x) for x in a])
        costs.append(-Fraction(b))
    for a in cols:
        if len(a) != dim:
            raise LPError("constraint length does not match objective")
    M = [[col[i] for col in cols] for i in range(dim)]
    if not cols:
        if any(Fraction(x) != 0 for x in c):
            return LPResult("unbounded")
        return LPResult("optimal", Fraction(0), tuple(Fraction(0) for _ in c))
    status, value, _, pi = simplex_standard(M, c, costs)
    if status == "infeasible":
        # dual infeasible: primal unbounded or infeasible; decide by phase one
        feas = maximize([0] * dim, eq, ge) if any(Fraction(x) for x in c) else None
        if feas is not None and feas.status == "optimal":
            return LPResult("unbounded")
        return LPResult("infeasible")
    if status == "unbounded":
        return LPResult("infeasible")
    return LPResult("optimal", value, tuple(pi))


@dataclass(frozen=True)
class StrictSolution:
    """A point satisfying the equalities and every inequality with slack ``margin``."""

    y: tuple[Fraction, ...]
    margin: Fraction


def lp_strict_feasible(eq: Sequence[tuple[Sequence, object]],
                       ge: Sequence[tuple[Sequence, object]]) -> StrictSolution | None:
    """Find ``y`` with ``a.y = b`` on ``eq`` and ``a.y > b`` on ``ge``.

    Maximizes a margin ``t <= 1`` in ``a.y - t >= b``; strict feasibility holds
    iff the optimum is positive.  The returned solution is re-verified by
    substitution before it is handed back.
    """
    dims = {len(a) for a, _ in list(eq) + list(ge)}
    if len(dims) > 1:
        raise LPError("malformed system: rows of different lengths")
    if not dims:
        return StrictSolution((), Fraction(1))
    dim = dims.pop()
    eq2 = [(list(a) + [0], b) for a, b in eq]
    ge2 = [(list(a) + [-1], b) for a, b in ge]
    ge2.append(([0] * dim + [-1], -1))
    res = maximize([0] * dim + [1], eq2, ge2)
    if res.status == "unbounded":
        raise LPError("margin LP unbounded despite the cap t <= 1")
    if res.status != "optimal" or res.value <= 0:
        return None
    y = res.y[:dim]
    margin = res.y[dim]
    for a, b in eq:
        if sum(Fraction(x) * v for x, v in zip(a, y)) != b:
            raise LPError("witness violates an equality")
    for a, b in ge:
        if sum(Fraction(x) * v for x, v in zip(a, y)) < Fraction(b) + margin:
            raise LPError("witness violates a strict inequality")
    return StrictSolution(tuple(y), margin)
