"""Command-line front end.

Every command reads one JSON document (``--input`` is a path or inline JSON)
and writes a deterministic JSON report.  Exit codes: 0 when the property holds
or the computation finished, 1 when the property fails (the report carries a
certificate), 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .cube import center_circuits, orbit, subset_str
from .deltamatroid import (BasisFamily, find_exchange_violation, is_even, polytope_edges,
                           rank_function, strong_exchange_holds)
from .fields import FieldSpec
from .matrices import MatrixK
from .polys import rayleigh
from .representability import (FORMS, det_poly, diagonal_poly, isotropic_rep, minor_coefficients,
                               principal_minors, realize3, valuation_function, verify_factorization)
from .search import SHAPES, conjecture_search
from .subdivision import cell_edges, cone_dimension, is_valuated_delta_matroid, long_edges, maximal_cells
from .subset_function import SubsetFunction

COMMANDS = ("check", "edges", "cells", "cone-dim", "dom-check", "rank", "minors", "rayleigh",
            "factorize", "realize3", "isotropic", "circuits", "search")
RANDOMIZED = ("search",)


class InputError(ValueError):
    pass


def load_input(text: str | None):
    """Parse ``text`` as inline JSON, or read it as a path when it does not look like JSON."""
    if text is None:
        raise InputError("--input is required")
    stripped = text.lstrip()
    if stripped.startswith(("{", "[", '"')):
        source = "<inline>"
        raw = text
    else:
        source = text
        try:
            raw = Path(text).read_text()
        except OSError as exc:
            raise InputError(f"{text}: cannot read input ({exc.strerror})") from None
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _subset_function(data) -> SubsetFunction:
    if isinstance(data, dict) and "p" in data:
        data = data["p"]
    return SubsetFunction.from_json(data)


def _matrix(data) -> tuple[MatrixK, list | None]:
    if not isinstance(data, dict):
        raise InputError("expected a JSON object with a 'matrix'")
    m = data.get("matrix", data)
    A = MatrixK.from_json(m)
    vectors = data.get("vectors")
    if vectors is not None:
        vectors = [[A.K(str(x)) for x in v] for v in vectors]
        if len(vectors) != A.n or any(len(v) != A.n for v in vectors):
            raise InputError("'vectors' must be n vectors of length n")
    return A, vectors


def _pair(data, n: int) -> tuple[int, int]:
    try:
        i, j = int(data["i"]) - 1, int(data["j"]) - 1
    except (KeyError, TypeError, ValueError):
        raise InputError("'i' and 'j' (1-based) are required") from None
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise InputError("'i' and 'j' must be distinct indices in 1..n")
    return i, j


def _minors_poly(A: MatrixK, vectors):
    if vectors is None:
        return diagonal_poly(A)
    return det_poly(A.entries, vectors, A.K)


# -- commands --------------------------------------------------------------

def cmd_check(data, args):
    p = _subset_function(data)
    v = is_valuated_delta_matroid(p)
    return (0 if v.valuated else 1), {"input": p.to_json(), **v.to_json()}


def cmd_edges(data, args):
    p = _subset_function(data)
    es = long_edges(p, args.min_len)
    return 0, {"input": p.to_json(), "min_len": args.min_len,
               "edges": [[subset_str(s, p.n), subset_str(t, p.n)] for s, t in es]}


def cmd_cells(data, args):
    p = _subset_function(data)
    cells = maximal_cells(p, args.mode)
    out = []
    for c in cells:
        long = [e for e in cell_edges(c, p.n) if bin(e[0] ^ e[1]).count("1") >= 3]
        out.append({"dim": c.dim, "vertices": [subset_str(s, p.n) for s in c.vertices],
                    "long_edges": [[subset_str(s, p.n), subset_str(t, p.n)] for s, t in long]})
    return 0, {"input": p.to_json(), "mode": args.mode, "cells": out}


def cmd_cone_dim(data, args):
    p = _subset_function(data)
    if not p.is_finite:
        raise InputError("cone-dim needs finite values")
    d = cone_dimension(p, args.mode)
    return 0, {"input": p.to_json(), "dim": d, "codim": (1 << p.n) - d}


def cmd_dom_check(data, args):
    F = BasisFamily.from_json(data)
    bad = find_exchange_violation(F)
    report = {"input": F.to_json(), "delta_matroid": bad is None}
    if bad is not None:
        A, B, a = bad
        report["certificate"] = {"A": subset_str(A, F.n), "B": subset_str(B, F.n), "a": a.bit_length()}
        return 1, report
    report["even"] = is_even(F)
    report["strong_exchange"] = strong_exchange_holds(F)
    report["edges"] = [{"edge": [subset_str(e.S, F.n), subset_str(e.T, F.n)], "direction": e.direction}
                       for e in polytope_edges(F)]
    return 0, report


def cmd_rank(data, args):
    F = BasisFamily.from_json(data)
    r = rank_function(F)
    return 0, {"input": F.to_json(), "rank": {subset_str(s, F.n): v for s, v in enumerate(r.values)}}


def cmd_minors(data, args):
    A, vectors = _matrix(data)
    if vectors is None:
        coeffs = principal_minors(A)
    else:
        coeffs = minor_coefficients(det_poly(A.entries, vectors, A.K))
    p = valuation_function(A.n, coeffs)
    v = is_valuated_delta_matroid(p)
    report = {"input": _matrix_json(A, vectors), "minors": {subset_str(s, A.n): str(x) for s, x in enumerate(coeffs)},
              "p": p.to_json(), "verdict": v.to_json()}
    return 0, report


def cmd_rayleigh(data, args):
    A, vectors = _matrix(data)
    i, j = _pair(data, A.n)
    f = _minors_poly(A, vectors)
    delta = rayleigh(f, i, j)
    return 0, {"input": _matrix_json(A, vectors) | {"i": i + 1, "j": j + 1},
               "f": str(f), "delta": str(delta), "terms": delta.to_json()["terms"]}


def cmd_factorize(data, args):
    A, vectors = _matrix(data)
    i, j = _pair(data, A.n)
    fac = verify_factorization(A, vectors, i, j)
    return (0 if fac.passed else 1), {"input": _matrix_json(A, vectors) | {"i": i + 1, "j": j + 1},
                                       **fac.to_json()}


def cmd_realize3(data, args):
    p = _subset_function(data)
    r = realize3(p)
    return (0 if r.ok else 1), {"input": p.to_json(), **r.to_json()}


def cmd_isotropic(data, args):
    if not isinstance(data, dict) or data.get("form") not in FORMS:
        raise InputError(f"'form' must be one of {', '.join(FORMS)}")
    A, _ = _matrix({"matrix": data.get("matrix")})
    v = data.get("v")
    alpha = data.get("alpha")
    rep = isotropic_rep(data["form"], A, [A.K(str(x)) for x in v] if v is not None else None,
                        A.K(str(alpha)) if alpha is not None else None)
    inp = {"form": rep.form, "matrix": A.to_json()}
    if v is not None:
        inp.update(v=[str(A.K(str(x))) for x in v], alpha=str(A.K(str(alpha))))
    report = {"input": inp, "p": rep.p.to_json(), "signs": {subset_str(s, A.n): x for s, x in enumerate(rep.signs)},
              "verdict": rep.verdict.to_json()}
    return (0 if rep.verdict.valuated else 1), report


def cmd_circuits(data, args):
    n = int(data.get("n", 4)) if isinstance(data, dict) else int(data)
    circuits = center_circuits(n)
    remaining = set(circuits)
    orbits = []
    for c in circuits:
        if c not in remaining:
            continue
        o = orbit(n, c)
        remaining -= o
        orbits.append({"size": len(o), "support_size": len(c.support),
                       "representative": {subset_str(s, n): str(w) for s, w in zip(c.support, c.weights)}})
    return 0, {"input": {"n": n}, "count": len(circuits), "orbits": orbits}


def cmd_search(data, args):
    if not isinstance(data, dict):
        raise InputError("expected an object with 'shape', 'spec' and 'n'")
    shape = data.get("shape", data.get("which"))
    if shape not in SHAPES:
        raise InputError(f"'shape' must be one of {', '.join(SHAPES)}")
    spec = FieldSpec.from_json(data.get("spec"))
    n = int(data.get("n", 3))
    trials = args.trials if args.trials is not None else int(data.get("trials", 200))
    rep = conjecture_search(shape, spec, n, trials, args.seed, jobs=args.jobs)
    return (1 if rep.counterexamples else 0), rep.to_json()


def _matrix_json(A: MatrixK, vectors) -> dict:
    out = {"matrix": A.to_json()}
    if vectors is not None:
        out["vectors"] = [[str(x) for x in v] for v in vectors]
    return out


HANDLERS = {"check": cmd_check, "edges": cmd_edges, "cells": cmd_cells, "cone-dim": cmd_cone_dim,
            "dom-check": cmd_dom_check, "rank": cmd_rank, "minors": cmd_minors, "rayleigh": cmd_rayleigh,
            "factorize": cmd_factorize, "realize3": cmd_realize3, "isotropic": cmd_isotropic,
            "circuits": cmd_circuits, "search": cmd_search}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="valdelta", description="Valuated Δ-matroids and their representations.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--input", help="path to a JSON file or inline JSON")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--trials", type=int)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--output", help="write the report here instead of stdout")
    ap.add_argument("--min-len", type=int, default=3)
    ap.add_argument("--mode", choices=("auto", "exhaustive", "bfs"), default="auto")
    return ap


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def run(args: argparse.Namespace) -> tuple[int, dict]:
    if args.command in RANDOMIZED and args.seed is None:
        raise InputError(f"{args.command} needs --seed")
    if args.jobs < 1:
        raise InputError("--jobs must be positive")
    if args.command == "circuits" and args.input is None:
        data = {"n": 4}
    else:
        data = load_input(args.input)
    code, body = HANDLERS[args.command](data, args)
    report = {"command": args.command, "version": __version__, "exit": code, **body}
    if args.command in RANDOMIZED:
        report["seed"] = args.seed
    return code, report


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, report = run(args)
    except ValueError as exc:  # InputError, ParseError and model validation errors
        print(f"valdelta: error: {exc}", file=sys.stderr)
        return 2
    text = dumps(report)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
