"""Command-line interface: matroid document parsing and command dispatch.

Documents are JSON; constructions nest recursively::

    {"type": "two_sum",
     "left":  {"type": "uniform", "r": 2, "n": 4}, "pl": 0,
     "right": {"type": "uniform", "r": 2, "n": 4}, "pr": 0}

Rationals cross the boundary as strings ("3/2", "-2", "0.25") so no value
is ever rounded.  Reports are JSON objects whose ``payload`` is byte-stable
for identical command, input and seed; ``timing_ms`` is the only
run-dependent field.

Exit codes: 0 success, 2 invalid input, 3 cap exceeded, 4 selftest failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from typing import Optional

from . import selftest as selftest_mod
from .connectivity import components, find_separation, is_2connected
from .constructions import (
    CATALOG_NAMES,
    catalog,
    direct_sum,
    parallel_extension,
    relax_circuit_hyperplane,
    series_extension,
    two_sum,
)
from .core import (
    BasisMatroid,
    BinaryMatroid,
    CircuitsMatroid,
    DirectSumMatroid,
    DualMatroid,
    GraphicMatroid,
    Matroid,
    MinorMatroid,
    ParallelExtensionMatroid,
    UniformMatroid,
    elements_of,
    full_mask,
    mask_of,
)
from .errors import CapExceededError, MatroidError, ParseError
from .locked import enumerate_locked, k_locked_oracle, uniformity_report
from .maxweight import brute_force_best, certify_optimal, greedy_basis, parse_weights
from .polytope import (
    ConstraintSystem,
    LinearConstraint,
    brute_force_facets,
    facet_system,
)

DEFAULT_CAPS = {"enum": 20, "poly": 12, "iso": 10}


# ----------------------------------------------------------- doc parsing

def _need(obj: dict, key: str, path: str):
    if key not in obj:
        raise ParseError(path, f"missing field {key!r}")
    return obj[key]


def _int_field(obj: dict, key: str, path: str) -> int:
    v = _need(obj, key, path)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"{path}.{key}", f"expected an integer, got {v!r}")
    return v


def parse_matroid(doc, path: str = "$", cap: Optional[int] = None) -> Matroid:
    """Recursively build a matroid from a document; errors carry the path."""
    if not isinstance(doc, dict):
        raise ParseError(path, "matroid document must be an object")
    kind = _need(doc, "type", path)
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError(f"{path}.name", "name must be a string")
    ground_cap = cap if cap is not None else DEFAULT_CAPS["enum"]
    try:
        if kind == "uniform":
            return UniformMatroid(_int_field(doc, "r", path),
                                  _int_field(doc, "n", path),
                                  name=name, cap=ground_cap)
        if kind == "graphic":
            edges = _need(doc, "edges", path)
            if not isinstance(edges, list) or any(
                    not isinstance(e, list) or len(e) != 2 for e in edges):
                raise ParseError(f"{path}.edges", "expected a list of pairs")
            return GraphicMatroid([tuple(e) for e in edges], name=name,
                                  cap=ground_cap)
        if kind == "binary":
            matrix = _need(doc, "matrix", path)
            if not isinstance(matrix, list):
                raise ParseError(f"{path}.matrix", "expected a list of rows")
            return BinaryMatroid(matrix, name=name, cap=ground_cap)
        if kind == "bases":
            n = _int_field(doc, "n", path)
            bases = _need(doc, "bases", path)
            if not isinstance(bases, list):
                raise ParseError(f"{path}.bases", "expected a list of bases")
            masks = [mask_of(b) for b in bases]
            return BasisMatroid(n, masks, name=name, cap=ground_cap)
        if kind == "dual":
            return DualMatroid(parse_matroid(_need(doc, "of", path),
                                             f"{path}.of", cap), name=name)
        if kind == "direct_sum":
            parts = _need(doc, "parts", path)
            if not isinstance(parts, list) or not parts:
                raise ParseError(f"{path}.parts", "expected a nonempty list")
            built = [parse_matroid(p, f"{path}.parts[{i}]", cap)
                     for i, p in enumerate(parts)]
            return direct_sum(*built, name=name, cap=ground_cap)
        if kind == "two_sum":
            left = parse_matroid(_need(doc, "left", path), f"{path}.left", cap)
            right = parse_matroid(_need(doc, "right", path), f"{path}.right", cap)
            return two_sum(left, _int_field(doc, "pl", path),
                           right, _int_field(doc, "pr", path),
                           name=name, cap=cap)
        if kind == "catalog":
            return catalog(_need(doc, "name", path), cap=cap)
        if kind == "parallel_ext":
            inner = parse_matroid(_need(doc, "of", path), f"{path}.of", cap)
            return parallel_extension(inner, _int_field(doc, "e", path), name=name)
        if kind == "series_ext":
            inner = parse_matroid(_need(doc, "of", path), f"{path}.of", cap)
            return series_extension(inner, _int_field(doc, "e", path), name=name)
        if kind == "relax":
            inner = parse_matroid(_need(doc, "of", path), f"{path}.of", cap)
            subset = _need(doc, "set", path)
            if not isinstance(subset, list):
                raise ParseError(f"{path}.set", "expected a list of elements")
            return relax_circuit_hyperplane(inner, mask_of(subset),
                                            name=name, cap=cap)
    except ParseError:
        raise
    except MatroidError:
        raise
    except (TypeError, ValueError) as exc:
        raise ParseError(path, str(exc)) from exc
    raise ParseError(f"{path}.type", f"unknown matroid type {kind!r}")


def to_document(m: Matroid) -> dict:
    """Structural document for a matroid; inverse of parse_matroid up to
    isomorphism (derived representations are emitted as explicit bases)."""
    doc: dict
    if isinstance(m, UniformMatroid):
        doc = {"type": "uniform", "r": m.r, "n": m.n}
    elif isinstance(m, GraphicMatroid):
        doc = {"type": "graphic", "edges": [list(e) for e in m.edges]}
    elif isinstance(m, BinaryMatroid):
        doc = {"type": "binary",
               "matrix": [[(row >> j) & 1 for j in range(m.n)]
                          for row in m._rows]}
    elif isinstance(m, DualMatroid):
        doc = {"type": "dual", "of": to_document(m.inner)}
    elif isinstance(m, DirectSumMatroid):
        doc = {"type": "direct_sum", "parts": [to_document(p) for p in m.parts]}
    elif isinstance(m, ParallelExtensionMatroid):
        doc = {"type": "parallel_ext", "of": to_document(m.inner), "e": m.e}
    elif isinstance(m, CircuitsMatroid) and "two_sum_info" in m._memo:
        a, pa, b, pb = m._memo["two_sum_info"]
        doc = {"type": "two_sum", "left": to_document(a), "pl": pa,
               "right": to_document(b), "pr": pb}
    else:
        doc = {"type": "bases", "n": m.n,
               "bases": [elements_of(b) for b in m.bases()]}
    if m.name:
        doc["name"] = m.name
    return doc


# ------------------------------------------------------------- rendering

def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _constraint_json(c: LinearConstraint) -> dict:
    return {
        "coeffs": {str(e): _frac(v) for e, v in enumerate(c.coeffs) if v != 0},
        "rhs": _frac(c.rhs),
        "sense": c.sense,
        "kind": c.kind,
        "support": elements_of(c.support),
    }


def _system_json(sys_: ConstraintSystem) -> dict:
    counts: dict[str, int] = {}
    for c in sys_.inequalities:
        counts[c.kind] = counts.get(c.kind, 0) + 1
    return {
        "n": sys_.n,
        "equalities": [_constraint_json(c) for c in sys_.equalities],
        "inequalities": [_constraint_json(c) for c in sys_.inequalities],
        "kind_counts": counts,
    }


def _matroid_summary(m: Matroid) -> dict:
    return {"n": m.n, "rank": m.full_rank}


# -------------------------------------------------------------- commands

def _load_matroid(args) -> tuple[Matroid, str]:
    if not args.input:
        raise ParseError("$", "this command needs --input FILE")
    with open(args.input, "rb") as fh:
        raw = fh.read()
    digest = "sha256:" + hashlib.sha256(raw).hexdigest()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError("$", f"not valid JSON: {exc}") from exc
    return parse_matroid(doc, cap=args.cap), digest


def _parse_subset(spec: str, n: int) -> int:
    if spec.strip() == "":
        return 0
    try:
        elems = [int(tok) for tok in spec.split(",")]
    except ValueError as exc:
        raise ParseError("--subset", f"expected comma-separated ints: {exc}")
    if any(e < 0 or e >= n for e in elems):
        raise ParseError("--subset", f"element outside 0..{n - 1}")
    return mask_of(elems)


def _cmd_rank(args):
    m, digest = _load_matroid(args)
    subset = full_mask(m.n) if args.subset is None else _parse_subset(args.subset, m.n)
    payload = {
        "n": m.n,
        "subset": elements_of(subset),
        "rank": m.rank(subset),
        "corank": m.corank(subset),
    }
    return payload, digest


def _cmd_dual(args):
    m, digest = _load_matroid(args)
    d = m.dual()
    payload = _matroid_summary(d)
    payload["base_count"] = len(d.bases(args.cap))
    payload["document"] = to_document(d)
    return payload, digest


def _cmd_connectivity(args):
    m, digest = _load_matroid(args)
    payload = {"n": m.n, "is_2connected": is_2connected(m, args.cap)}
    if m.n == 0:
        payload["components"] = []
        payload["separation"] = None
    else:
        payload["components"] = [elements_of(c) for c in components(m, args.cap)]
        sep = find_separation(m, args.cap)
        payload["separation"] = (
            None if sep is None
            else {"part_a": elements_of(sep.part_a),
                  "part_b": elements_of(sep.part_b)}
        )
    return payload, digest


def _locked_json(report) -> dict:
    return {
        "count": report.count,
        "truncated": report.truncated,
        "certificates": [
            {"subset": elements_of(c.subset), "rank": c.rank,
             "corank_complement": c.corank_complement, "component": c.component}
            for c in report.certificates
        ],
    }


def _cmd_locked(args):
    m, digest = _load_matroid(args)
    payload = _locked_json(enumerate_locked(m, args.cap))
    return payload, digest


def _cmd_k_locked(args):
    m, digest = _load_matroid(args)
    answer, report = k_locked_oracle(m, args.k, args.cap)
    payload = {"k": args.k, "threshold": m.n ** (args.k + 1), "answer": answer}
    payload.update(_locked_json(report))
    return payload, digest


def _cmd_facets(args):
    m, digest = _load_matroid(args)
    return _system_json(facet_system(m, args.cap)), digest


def _cmd_verify_facets(args):
    from .polytope import minimize_system, systems_equal
    from .locked import is_locked

    m, digest = _load_matroid(args)
    theo = facet_system(m, args.cap)
    vecs = [[(b >> e) & 1 for e in range(m.n)] for b in m.bases(args.cap)]
    hull_sys = brute_force_facets(vecs, args.poly_cap)
    matches = systems_equal(theo, hull_sys)
    minimized = minimize_system(m, theo, args.cap)
    minimal = len(minimized.inequalities) == len(theo.inequalities)
    locked_ok = all(is_locked(m, c.support, args.cap)
                    for c in theo.inequalities if c.kind == "locked")
    payload = {
        "facet_description_matches_hull": matches,
        "minimal": minimal,
        "locked_supports_locked": locked_ok,
        "facet_count": len(theo.inequalities),
        "hull_facet_count": len(hull_sys.inequalities),
        "ok": matches and minimal and locked_ok,
    }
    return payload, digest


def _cmd_separate(args):
    from .polytope import separate

    m, digest = _load_matroid(args)
    if not args.point:
        raise ParseError("$", "separate needs --point FILE")
    with open(args.point, "rb") as fh:
        coords = json.loads(fh.read())
    if not isinstance(coords, list):
        raise ParseError("--point", "expected a JSON list of rationals")
    try:
        point = tuple(Fraction(str(x)) for x in coords)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("--point", f"bad rational: {exc}")
    hit = separate(m, point, args.cap)
    payload = {
        "member": hit is None,
        "violation": None if hit is None else _constraint_json(hit),
    }
    return payload, digest


def _cmd_mwbp(args):
    m, digest = _load_matroid(args)
    if not args.weights:
        raise ParseError("$", "mwbp needs --weights FILE")
    with open(args.weights, "rb") as fh:
        raw = json.loads(fh.read())
    if not isinstance(raw, list):
        raise ParseError("--weights", "expected a JSON list of rationals")
    w = parse_weights(raw, m.n)
    result = greedy_basis(m, w)
    payload = {
        "basis": elements_of(result.basis),
        "value": _frac(result.value),
        "method": result.method,
    }
    if args.certify:
        payload["certified"] = certify_optimal(m, w, result.basis, args.cap)
        payload["brute_force_value"] = _frac(brute_force_best(m, w, args.cap).value)
    return payload, digest


def _cmd_is_uniform(args):
    m, digest = _load_matroid(args)
    uniform, path = uniformity_report(m, args.cap)
    return {"uniform": uniform, "path": path}, digest


def _cmd_has_minor(args):
    from .constructions import has_minor

    m, digest = _load_matroid(args)
    if not args.target:
        raise ParseError("$", "has-minor needs --target FILE")
    with open(args.target, "rb") as fh:
        tdoc = json.loads(fh.read())
    target = parse_matroid(tdoc, "target", cap=args.cap)
    return {"has_minor": has_minor(m, target, args.cap)}, digest


def _cmd_catalog(args):
    if not args.name:
        raise ParseError("$", "catalog needs --name NAME")
    m = catalog(args.name, cap=args.cap)
    payload = _matroid_summary(m)
    payload["name"] = args.name
    payload["base_count"] = len(m.bases(args.cap))
    if args.emit:
        payload["document"] = to_document(m)
    return payload, None


def _cmd_selftest(args):
    results = selftest_mod.run_all(args.seed)
    payload = {
        "criteria": [
            {"number": r.number, "name": r.name, "passed": r.passed,
             "detail": r.detail}
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    return payload, None


_COMMANDS = {
    "rank": _cmd_rank,
    "dual": _cmd_dual,
    "connectivity": _cmd_connectivity,
    "locked": _cmd_locked,
    "k-locked": _cmd_k_locked,
    "facets": _cmd_facets,
    "verify-facets": _cmd_verify_facets,
    "separate": _cmd_separate,
    "mwbp": _cmd_mwbp,
    "is-uniform": _cmd_is_uniform,
    "has-minor": _cmd_has_minor,
    "catalog": _cmd_catalog,
    "selftest": _cmd_selftest,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mxt",
        description="Exact matroid analysis: locked subsets, bases-polytope "
                    "facets, separation, and maximum-weight bases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", help="matroid document (JSON file)")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--cap", type=int, default=None,
                       help="override the enumeration cap")
        p.add_argument("--seed", type=int, default=0)
        if name == "rank":
            p.add_argument("--subset", default=None,
                           help='comma-separated elements, e.g. "0,2,3"')
        if name == "k-locked":
            p.add_argument("--k", type=int, required=True)
        if name == "separate":
            p.add_argument("--point", help="JSON list of rationals")
        if name == "mwbp":
            p.add_argument("--weights", help="JSON list of rationals")
            p.add_argument("--certify", action="store_true")
        if name == "has-minor":
            p.add_argument("--target", help="matroid document (JSON file)")
        if name == "catalog":
            p.add_argument("--name",
                           help=f"one of U(r,n), wheel(k), {', '.join(CATALOG_NAMES)}")
            p.add_argument("--emit", action="store_true",
                           help="include a re-parseable document in the payload")
    return parser


def _render_text(report: dict, out) -> None:
    payload = report["payload"]
    print(f"# mxt {report['command']}", file=out)
    if report["command"] == "selftest":
        for c in payload["criteria"]:
            status = "PASS" if c["passed"] else "FAIL"
            print(f"[{status}] {c['number']:>2}. {c['name']}: {c['detail']}",
                  file=out)
        print(f"all passed: {payload['all_passed']}", file=out)
        return
    print(json.dumps(payload, indent=2, sort_keys=True), file=out)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    t0 = time.perf_counter()
    if args.cap is not None:
        args.poly_cap = args.cap
    else:
        args.poly_cap = None
    try:
        payload, digest = _COMMANDS[args.command](args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except MatroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    caps = dict(DEFAULT_CAPS)
    if args.cap is not None:
        caps = {"enum": args.cap, "poly": args.cap, "iso": args.cap}
    report = {
        "command": args.command,
        "input_digest": digest,
        "seed": args.seed if args.command == "selftest" else None,
        "caps": caps,
        "payload": payload,
        "timing_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        _render_text(report, sys.stdout)
    if args.command == "selftest" and not payload["all_passed"]:
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
