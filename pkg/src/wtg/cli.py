"""``wtg``: weighted chromatic, Tutte and Tutte–Grothendieck polynomials.

Exit status is 0 on success, 1 when a verification fails and 2 for bad
input or an exceeded size guard.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from .algebra import MVPoly
from .categorification import (
    build_complex,
    build_differential,
    fqdim_complex,
    graded_dimension_table,
    homology_dims,
    verify_chromatic_euler,
    verify_tutte_euler,
    weighted_euler,
)
from .graph import Multigraph, identity_label, load_label
from .invariants import (
    distinguishing_pair_search,
    invariant_closed_form,
    invariant_label_sum,
    log_concavity_check,
    matroid_pair_check,
)
from .matroid import RankOracle
from .polynomials import (
    BRIDGE_RULES,
    TGParams,
    chromatic_direct,
    chromatic_recursive,
    tg_p,
    tg_phi,
    tutte_direct,
    tutte_recursive,
)
from .suite import (
    WHEEL_EXPECTED,
    builtin_corpus,
    load_corpus_dir,
    plan,
    run_tasks,
    wheel_pair_polynomials,
)
from .weights import WeightError, WeightFn, harmonic_basis, hom_basis

log = logging.getLogger("wtg")

CHECK_TARGETS = {
    "example6.1": "matroid-pair",
    "matroid-pair": "matroid-pair",
    "example6.2": "wheel-pair",
    "wheel-pair": "wheel-pair",
    "logconcavity": "logconcavity",
}
VERIFY_TARGETS = {
    "thm4.3": ("chromatic-tutte",),
    "chromatic-tutte": ("chromatic-tutte",),
    "thm5.2": ("tg-recipe",),
    "tg-recipe": ("tg-recipe",),
    "all": ("recursion", "chromatic-tutte", "tg-recipe", "invariants", "complex", "matroid"),
}


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# input parsing
# ---------------------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def parse_weight(spec: str, n: int, degree: int = 0) -> WeightFn:
    """Resolve a weight spec against a ground set of size ``n``.

    ``ones`` (f ≡ 1 on the ``degree``-subsets), ``basis:hom:d:k``,
    ``basis:harm:d:k``, ``harmonic-basis:k`` (degree from ``--degree``),
    ``file:path`` or a bare path to a weight JSON file.  ``k`` is 1-based.
    """
    parts = spec.split(":")
    if spec == "ones":
        return WeightFn.ones(n, degree)
    if parts[0] == "basis" and len(parts) == 4 and parts[1] in ("hom", "harm"):
        return _basis_element(parts[1], n, _int(parts[2], spec), _int(parts[3], spec))
    if parts[0] == "harmonic-basis" and len(parts) == 2:
        return _basis_element("harm", n, degree, _int(parts[1], spec))
    path = spec[5:] if spec.startswith("file:") else spec
    if not Path(path).is_file():
        raise WeightError(f"weight spec {spec!r} is neither a known form nor a file")
    f = WeightFn.load(path)
    if f.n != n:
        raise WeightError(f"weight file is on {f.n} elements but the instance has {n}")
    return f


def _int(text: str, spec: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise WeightError(f"bad integer {text!r} in weight spec {spec!r}") from exc


def _basis_element(which: str, n: int, d: int, k: int) -> WeightFn:
    if not 0 <= d <= n:
        raise WeightError(f"degree {d} outside 0..{n}")
    basis = hom_basis(n, d) if which == "hom" else harmonic_basis(n, d)
    if not 1 <= k <= len(basis):
        raise WeightError(f"basis index {k} outside 1..{len(basis)} for {which} degree {d} on {n} elements")
    return basis[k - 1]


def _load_graph(path: str) -> Multigraph:
    return Multigraph.load(path)


def _load_instance(args) -> Multigraph | RankOracle:
    if getattr(args, "matroid", None):
        return RankOracle.load(args.matroid)
    if getattr(args, "graph", None):
        return _load_graph(args.graph)
    raise UsageError("give --graph or --matroid")


def _size(inst) -> int:
    return inst.edge_count if isinstance(inst, Multigraph) else inst.size


def _label(args, n: int) -> tuple[int, ...]:
    return identity_label(n) if args.label is None else load_label(args.label, n)


def _params(args) -> TGParams:
    if args.alpha is None or args.beta is None:
        raise UsageError("--alpha and --beta are required")
    return TGParams(args.alpha, args.beta)


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _poly_json(p: MVPoly) -> dict:
    return {"text": p.to_text(), "terms": p.to_json()}


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_chromatic(args) -> int:
    g = _load_graph(args.graph)
    n = g.edge_count
    label = _label(args, n)
    f = parse_weight(args.weight, n, args.degree)
    fn = chromatic_recursive if args.method == "recursive" else chromatic_direct
    p = fn(g, label, f)
    _emit(args, p.to_text(), {"polynomial": _poly_json(p), "method": args.method, "label": list(label)})
    return 0


def cmd_tutte(args) -> int:
    inst = _load_instance(args)
    m = inst if isinstance(inst, RankOracle) else RankOracle.graphic(inst)
    label = _label(args, m.size)
    f = parse_weight(args.weight, m.size, args.degree)
    fn = tutte_recursive if args.method == "recursive" else tutte_direct
    p = fn(m, label, f)
    _emit(args, p.to_text(), {"polynomial": _poly_json(p), "method": args.method, "label": list(label)})
    return 0


def cmd_tg(args) -> int:
    g = _load_graph(args.graph)
    n = g.edge_count
    label = _label(args, n)
    f = parse_weight(args.weight, n, args.degree)
    fn = tg_p if args.polynomial == "p" else tg_phi
    p = fn(g, label, f, _params(args), bridge_rule=args.bridge_rule)
    _emit(args, p.to_text(), {
        "polynomial": _poly_json(p),
        "which": args.polynomial,
        "bridge_rule": args.bridge_rule,
        "label": list(label),
    })
    return 0


def cmd_invariant(args) -> int:
    inst = _load_instance(args)
    n = _size(inst)
    f = parse_weight(args.weight, n, args.degree)
    method = args.method or ("label-sum" if args.kind == "tg" else "closed-form")
    if method == "closed-form":
        if args.kind == "tg":
            raise UsageError("the tg invariant is only available as a label sum")
        report = invariant_closed_form(inst, f, args.kind)
    else:
        report = invariant_label_sum(inst, f, args.kind, _params(args) if args.kind == "tg" else None)
    _emit(args, report.to_text(), {
        "kind": report.kind,
        "method": report.method,
        "n": report.n,
        "n_factorial": report.n_factorial_factor,
        "polynomial": _poly_json(report.polynomial),
        "reduced": _poly_json(report.reduced),
    })
    return 0


def cmd_categorify(args) -> int:
    g = _load_graph(args.graph)
    n = g.edge_count
    label = _label(args, n)
    f = parse_weight(args.weight, n, args.degree)
    levels = build_complex(g, label, args.kind)
    fq = fqdim_complex(levels, f)
    S = weighted_euler(levels, f)
    payload: dict = {
        "kind": args.kind,
        "fqdim": [p.to_text() for p in fq],
        "euler": S.to_text(),
    }
    lines = [f"fqdim C^{q} = {p.to_text()}" for q, p in enumerate(fq)]
    lines.append(f"S = {S.to_text()}")
    if f.is_harmonic():
        if args.kind == "chromatic":
            r = verify_chromatic_euler(g, label, f)
            verdicts = {
                "derived_identity": r["derived_identity"],
                "unsigned_statement": r["unsigned_statement"],
                "sign": r["sign"],
            }
        else:
            r = verify_tutte_euler(g, label, f)
            verdicts = {
                "derived_identity": r["derived_identity"],
                "unsubstituted_statement": r["unsubstituted_statement"],
                "derived_rhs": r["derived_rhs"].to_text(),
            }
        payload["identities"] = verdicts
        lines += [f"{k}: {v}" for k, v in verdicts.items()]
    else:
        payload["identities"] = None
        lines.append("identities: weight is not harmonic, not checked")
    if args.homology:
        diffs = build_differential(g, label, args.kind, levels)
        table = homology_dims(levels, diffs)
        chains = graded_dimension_table(levels)
        payload["homology"] = [
            {"q": q, "degree": list(deg), "dim": h} for (q, deg), h in sorted(table.items())
        ]
        payload["chain_dims"] = [
            [{"degree": list(deg), "dim": dim} for deg, dim in sorted(level.items())] for level in chains
        ]
        lines.append("homology (q, degree): dim")
        lines += [f"  {q} {list(deg)}: {h}" for (q, deg), h in sorted(table.items())]
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_harmonic_basis(args) -> int:
    basis = harmonic_basis(args.n, args.d)
    if args.index is not None:
        if not 1 <= args.index <= len(basis):
            raise UsageError(f"index {args.index} outside 1..{len(basis)}")
        basis = [basis[args.index - 1]]
    docs = [f.to_json() for f in basis]
    text = "\n".join(json.dumps(doc, sort_keys=True) for doc in docs)
    _emit(args, text or "(empty basis)", docs)
    return 0


def cmd_search(args) -> int:
    if args.catalog:
        entries = [(p.name, p) for p in sorted(Path(args.catalog).glob("*.json"))]
    else:
        entries = []
    report = distinguishing_pair_search(entries)
    payload = {
        "buckets": report["buckets"],
        "distinguishing": [{"pair": list(x["pair"]), "degrees": x["degrees"]} for x in report["distinguishing"]],
        "agreeing": [list(x["pair"]) for x in report["agreeing"]],
        "errors": report["errors"],
    }
    lines = [f"bucket: {', '.join(b)}" for b in payload["buckets"]]
    lines += [f"distinguishing: {a} / {b} at d = {x['degrees']}" for x in payload["distinguishing"] for a, b in [x["pair"]]]
    lines += [f"agreeing: {a} / {b}" for a, b in payload["agreeing"]]
    lines += [f"error: {e['name']}: {e['error']}" for e in payload["errors"]]
    _emit(args, "\n".join(lines) or "empty catalog", payload)
    return 0


def cmd_check(args) -> int:
    target = CHECK_TARGETS[args.target]
    if target == "matroid-pair":
        r = matroid_pair_check()
        ok = r["weighted_equal"] and r["size_refined_equal"]
        payload = {
            "weighted_equal_by_degree": {str(d): v for d, v in r["weighted_equal_by_degree"].items()},
            "size_refined_equal": r["size_refined_equal"],
            "classical_equal": r["classical_equal"],
            "classical": [r["classical_m1"].to_text(), r["classical_m2"].to_text()],
        }
        lines = [f"d={d}: weighted invariants equal: {v}" for d, v in r["weighted_equal_by_degree"].items()]
        lines.append(f"size-refined rank sums equal: {r['size_refined_equal']}")
        lines.append(f"classical Tutte polynomials equal (informational): {r['classical_equal']}")
    elif target == "wheel-pair":
        reports = wheel_pair_polynomials()
        matches = [tuple(rep.reduced.coefficients("λ")) == exp for rep, exp in zip(reports, WHEEL_EXPECTED)]
        ok = all(matches) and reports[0].polynomial != reports[1].polynomial
        payload = {"invariants": [rep.to_text() for rep in reports], "match_expected": matches, "differ": ok}
        lines = [rep.to_text() for rep in reports]
        lines.append(f"match expected: {matches}; distinct: {reports[0].polynomial != reports[1].polynomial}")
    else:
        reports = wheel_pair_polynomials()
        checks = [log_concavity_check(rep.reduced) for rep in reports]
        ok = all(c.holds for c in checks)
        payload = {
            "sequences": [[str(a) for a in c.sequence] for c in checks],
            "log_concave": [c.holds for c in checks],
            "violation": [c.index for c in checks],
        }
        lines = [f"{[str(a) for a in c.sequence]}: log-concave {c.holds}" for c in checks]
    _emit(args, "\n".join(lines), payload)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    suites = VERIFY_TARGETS[args.target]
    errors: list[str] = []
    if args.corpus:
        items, errors = load_corpus_dir(args.corpus)
    else:
        items = builtin_corpus(args.seed)
    tasks = plan(items, suites, args.seed, examples=args.target == "all")
    results = run_tasks(tasks, args.jobs)
    ok = not errors and all(r["passed"] for r in results)
    lines = []
    for r in results:
        if r["skipped"]:
            lines.append(f"SKIP {r['check']} {r['instance']} ({r['skipped']})")
            continue
        lines.append(f"{'PASS' if r['passed'] else 'FAIL'} {r['check']} {r['instance']} ({r['comparisons']} comparisons)")
        lines += [f"  note: literal form {k} differs on {v} case(s)" for k, v in r["literal_statement_mismatches"].items()]
        lines += [f"  failed: {x}" for x in r["failures"]]
    lines += [f"ERROR {e}" for e in errors]
    lines.append("all checks passed" if ok else "some checks failed")
    _emit(args, "\n".join(lines), {"results": results, "errors": errors, "passed": ok})
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json"), default=default("text"), help="output format")
    parser.add_argument("--jobs", type=int, default=default(1), help="worker processes for verification")
    parser.add_argument("--seed", type=int, default=default(0), help="seed for random labels, graphs and parameters")
    parser.add_argument("-v", "--verbose", action="store_true", default=default(False))


def _weight_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--weight", default="ones",
                   help="ones | basis:hom:d:k | basis:harm:d:k | harmonic-basis:k | file:path (default: ones)")
    p.add_argument("--degree", type=int, default=0, help="degree for 'ones' and 'harmonic-basis:k'")


def _tg_flags(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--alpha", type=parse_rational, required=required)
    p.add_argument("--beta", type=parse_rational, required=required)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wtg",
        description="Exact weighted chromatic, Tutte and Tutte–Grothendieck polynomials and their checks.",
    )
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chromatic", parents=[common], help="weighted chromatic polynomial of a labelled graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--label", help='JSON file or inline list like "[4,1,2,3]" (default: identity)')
    _weight_flags(p)
    p.add_argument("--method", choices=("direct", "recursive"), default="direct")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("tutte", parents=[common], help="weighted Tutte polynomial of a labelled matroid")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--matroid")
    src.add_argument("--graph")
    p.add_argument("--label")
    _weight_flags(p)
    p.add_argument("--method", choices=("direct", "recursive"), default="direct")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("tg", parents=[common], help="weighted Tutte–Grothendieck polynomial")
    p.add_argument("--graph", required=True)
    p.add_argument("--label")
    _weight_flags(p)
    _tg_flags(p, required=True)
    p.add_argument("--polynomial", choices=("phi", "p"), default="phi")
    p.add_argument("--bridge-rule", choices=BRIDGE_RULES, default="recipe")
    p.set_defaults(func=cmd_tg)

    p = sub.add_parser("invariant", parents=[common], help="label-sum invariant")
    p.add_argument("--kind", choices=("chromatic", "tutte", "tg"), required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--matroid")
    src.add_argument("--graph")
    _weight_flags(p)
    p.add_argument("--method", choices=("label-sum", "closed-form"))
    _tg_flags(p, required=False)
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("categorify", parents=[common], help="weighted graded dimensions of the chain complexes")
    p.add_argument("--graph", required=True)
    p.add_argument("--label")
    _weight_flags(p)
    p.add_argument("--kind", choices=("chromatic", "tutte"), default="chromatic")
    p.add_argument("--homology", action="store_true", help="also report rational homology dimensions")
    p.set_defaults(func=cmd_categorify)

    p = sub.add_parser("harmonic-basis", parents=[common], help="basis of the harmonic weights as weight JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--index", type=int, help="only the k-th basis element (1-based)")
    p.set_defaults(func=cmd_harmonic_basis)

    p = sub.add_parser("search", parents=[common], help="look for matroid pairs told apart by weighted invariants")
    p.add_argument("--catalog", help="directory of matroid JSON files")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("check", parents=[common], help="reproduce a fixed example")
    p.add_argument("target", choices=sorted(CHECK_TARGETS))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", parents=[common], help="run identity checks over a corpus")
    p.add_argument("target", choices=sorted(VERIFY_TARGETS))
    p.add_argument("--corpus", help="directory of graph/matroid JSON files (default: built-in fixtures)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ValueError, TypeError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"wtg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
