"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's own LP and elimination code:
edge tests go through scipy's floating-point LP on small integer data, and
delta-matroid and rank checks are plain brute force.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
from scipy.optimize import linprog

from valdelta.cube import INF
from valdelta.subset_function import SubsetFunction

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = ROOT / "golden"


def golden_input(name: str) -> dict:
    return json.loads((GOLDEN / "inputs" / f"{name}.json").read_text())


def by_size(n, table):
    return SubsetFunction.by_size(n, table)


def dimdr4() -> SubsetFunction:
    special = {0b0000, 0b0011, 0b1100, 0b1111}

    def value(s):
        if s in special:
            return 0
        return 100 if bin(s).count("1") % 2 else 1

    return SubsetFunction.from_callable(4, value)


# -- oracles -----------------------------------------------------------------

def oracle_is_edge(p: SubsetFunction, S: int, T: int) -> bool:
    """Whether conv{S, T} is a cell of the regular subdivision, by float LP.

    Unknowns (phi, b, m): phi.e_S + b = p_S, phi.e_T + b = p_T, and
    phi.e_U + b + m <= p_U for the other finite points; maximize m <= 1.
    """
    n = p.n
    dom = [s for s in range(1 << n) if p[s] != INF]
    if S not in dom or T not in dom:
        return False

    def row(s):
        return [float(s >> i & 1) for i in range(n)] + [1.0]

    a_eq = [row(S) + [0.0], row(T) + [0.0]]
    b_eq = [float(p[S]), float(p[T])]
    a_ub = [row(u) + [1.0] for u in dom if u not in (S, T)]
    b_ub = [float(p[u]) for u in dom if u not in (S, T)]
    bounds = [(None, None)] * (n + 1) + [(None, 1.0)]
    c = np.zeros(n + 2)
    c[-1] = -1.0
    res = linprog(c, A_ub=a_ub or None, b_ub=b_ub or None, A_eq=a_eq, b_eq=b_eq, bounds=bounds,
                  method="highs")
    return res.status == 0 and -res.fun > 1e-7


def oracle_long_edges(p: SubsetFunction, min_len: int = 3) -> list[tuple[int, int]]:
    n = p.n
    out = []
    for S in range(1 << n):
        for T in range(S + 1, 1 << n):
            if bin(S ^ T).count("1") >= min_len and oracle_is_edge(p, S, T):
                out.append((S, T))
    return out


def oracle_is_delta_matroid(bases, n) -> bool:
    bases = set(bases)
    for A in bases:
        for B in bases:
            d = A ^ B
            for a in range(n):
                if not d >> a & 1:
                    continue
                if not any(d >> b & 1 and (A ^ (1 << a) ^ (1 << b) if a != b else A ^ (1 << a)) in bases
                           for b in range(n)):
                    return False
    return True


def oracle_rank(bases, n, S) -> int:
    return n - min(bin(S ^ B).count("1") for B in bases)


def all_families(n):
    """Every nonempty family of subsets of [n]."""
    size = 1 << n
    for code in range(1, 1 << size):
        yield [s for s in range(size) if code >> s & 1]


def frac(x) -> Fraction:
    return Fraction(x)


@pytest.fixture
def counterexample_p():
    return by_size(3, [0, 2, 1, 0])


@pytest.fixture
def hermitian_example_p():
    return by_size(3, [0, 1, 0, 1])


@pytest.fixture
def dimdr4_p():
    return dimdr4()


def pairs(n):
    return list(itertools.combinations(range(n), 2))


# -- acceptance summary --------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
