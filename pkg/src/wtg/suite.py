"""Identity checks over instances, shared by ``wtg verify`` and the tests.

Each check returns a :class:`CheckResult`.  ``passed`` only covers the
identities that hold as implemented; statements that are known to fail in
their literal reading are counted in ``notes`` and never gate the result.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .categorification import (
    build_complex,
    build_differential,
    composition_is_zero,
    euler_from_chains,
    euler_from_homology,
    homology_dims,
    verify_chromatic_euler,
    verify_tutte_euler,
)
from .fixtures import matroid_files, random_graphs, random_labels, wheel_pair, paw, paw_complex
from .graph import Multigraph
from .invariants import (
    invariant_closed_form,
    invariant_label_sum,
    log_concavity_check,
    matroid_pair_check,
    verify_invariant_identities,
)
from .matroid import RankOracle
from .polynomials import (
    TGParams,
    chromatic_direct,
    chromatic_setpoly,
    classical_chromatic,
    tg_phi,
    tg_phi_subset_form,
    tutte_direct,
    tutte_setpoly,
    verify_chromatic_tutte,
    verify_tg_recipe,
)
from .weights import WeightFn, harmonic_basis, hom_basis

SUITES = ("recursion", "chromatic-tutte", "tg-recipe", "invariants", "complex", "matroid")
INVARIANT_SIZE = 6
COMPLEX_SIZE = 6
BASIS_CAP = 4  # basis elements per degree on instances with more than 7 edges


@dataclass
class CheckResult:
    check: str
    instance: str
    passed: bool
    comparisons: int = 0
    failures: list[str] = field(default_factory=list)
    notes: dict[str, int] = field(default_factory=dict)
    skipped: str | None = None

    def note(self, key: str, holds: bool) -> None:
        if not holds:
            self.notes[key] = self.notes.get(key, 0) + 1

    def expect(self, holds: bool, what: str) -> None:
        self.comparisons += 1
        if not holds:
            self.passed = False
            if len(self.failures) < 5:
                self.failures.append(what)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "instance": self.instance,
            "passed": self.passed,
            "comparisons": self.comparisons,
            "failures": self.failures,
            "literal_statement_mismatches": dict(sorted(self.notes.items())),
            "skipped": self.skipped,
        }

    def to_text(self) -> str:
        if self.skipped:
            return f"SKIP {self.check} {self.instance} ({self.skipped})"
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.check} {self.instance} ({self.comparisons} comparisons)"
        for key, count in sorted(self.notes.items()):
            line += f"\n  note: literal form {key} differs on {count} case(s)"
        for f in self.failures:
            line += f"\n  failed: {f}"
        return line


def _rng(seed: int, *parts) -> random.Random:
    return random.Random(":".join(str(p) for p in (seed,) + parts))


def _capped(basis: list[WeightFn], n: int, rng: random.Random) -> list[tuple[int, WeightFn]]:
    indexed = list(enumerate(basis, 1))
    if n <= 7 or len(indexed) <= BASIS_CAP:
        return indexed
    return sorted(rng.sample(indexed, BASIS_CAP), key=lambda t: t[0])


def random_params(rng: random.Random) -> TGParams:
    def nonzero() -> Fraction:
        return Fraction(rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]), rng.randint(1, 4))

    return TGParams(nonzero(), nonzero())


# ---------------------------------------------------------------------------
# checks on graphs
# ---------------------------------------------------------------------------

def check_recursion(g: Multigraph, name: str, seed: int = 0, labels: int = 3) -> CheckResult:
    res = CheckResult("recursion", name, True)
    n = g.edge_count
    m = RankOracle.graphic(g)
    rng = _rng(seed, "recursion", name)
    for label in random_labels(n, labels, seed):
        # the recursions build f-independent expansions; evaluate them per weight
        chromatic = chromatic_setpoly(g, label)
        tutte = tutte_setpoly(m, label)
        for d in range(n + 1):
            for k, f in _capped(hom_basis(n, d), n, rng):
                tag = f"label={list(label)} d={d} basis={k}"
                res.expect(chromatic.evaluate(f) == chromatic_direct(g, label, f), "chromatic " + tag)
                res.expect(tutte.evaluate(f) == tutte_direct(m, label, f), "tutte " + tag)
    return res


def check_chromatic_tutte(g: Multigraph, name: str, seed: int = 0, labels: int = 2) -> CheckResult:
    res = CheckResult("chromatic-tutte", name, True)
    n = g.edge_count
    rng = _rng(seed, "chromatic-tutte", name)
    for label in random_labels(n, labels, seed):
        for d in range(n + 1):
            for k, f in _capped(harmonic_basis(n, d), n, rng):
                res.expect(verify_chromatic_tutte(g, label, f), f"label={list(label)} d={d} basis={k}")
    return res


def check_tg_recipe(g: Multigraph, name: str, seed: int = 0, pairs: int = 5) -> CheckResult:
    res = CheckResult("tg-recipe", name, True)
    n = g.edge_count
    rng = _rng(seed, "tg-recipe", name)
    label = random_labels(n, 2, seed)[-1]
    params = [random_params(rng) for _ in range(pairs)]
    for d in range(n + 1):
        for k, f in _capped(harmonic_basis(n, d), n, rng):
            for p in params:
                tag = f"d={d} basis={k} alpha={p.alpha} beta={p.beta}"
                res.expect(verify_tg_recipe(g, label, f, p), tag)
                res.note("tg-literal-bridge", verify_tg_recipe(g, label, f, p, bridge_rule="literal"))
        # the pivot-free subset sum agrees with the recursion for every weight
        for k, f in _capped(hom_basis(n, d), n, rng):
            p = params[0]
            res.expect(tg_phi(g, label, f, p) == tg_phi_subset_form(g, label, f, p), f"subset form d={d} basis={k}")
    return res


def check_invariants(g: Multigraph, name: str, seed: int = 0) -> CheckResult:
    res = CheckResult("invariants", name, True)
    n = g.edge_count
    if n > INVARIANT_SIZE:
        res.skipped = f"label sums run up to {INVARIANT_SIZE} edges"
        return res
    m = RankOracle.graphic(g)
    params = random_params(_rng(seed, "invariants", name))
    for d in range(n + 1):
        for k, f in enumerate(hom_basis(n, d), 1):
            tag = f"d={d} basis={k}"
            for kind, inst in (("chromatic", g), ("tutte", m)):
                a = invariant_label_sum(inst, f, kind).polynomial
                b = invariant_closed_form(inst, f, kind).polynomial
                res.expect(a == b, f"{kind} closed form {tag}")
            report = verify_invariant_identities(g, f, params)
            res.expect(report["tg_recipe_dual"], f"tg recipe via dual {tag}")
            res.expect(report["chromatic_tutte_dual"], f"chromatic-tutte via dual {tag}")
            res.note("label-summed-tg-recipe", report["tg_recipe"])
            res.note("label-summed-chromatic-tutte", report["chromatic_tutte"])
        for k, f in enumerate(harmonic_basis(n, d), 1):
            if d >= 1:
                res.expect(invariant_closed_form(g, f, "chromatic").polynomial.is_zero(), f"harmonic chromatic vanishes d={d} basis={k}")
                res.expect(invariant_closed_form(m, f, "tutte").polynomial.is_zero(), f"harmonic tutte vanishes d={d} basis={k}")
    return res


def check_complex(g: Multigraph, name: str, seed: int = 0) -> CheckResult:
    res = CheckResult("complex", name, True)
    n = g.edge_count
    if n > COMPLEX_SIZE:
        res.skipped = f"complexes run up to {COMPLEX_SIZE} edges"
        return res
    label = random_labels(n, 2, seed)[-1]
    for kind in ("chromatic", "tutte"):
        levels = build_complex(g, label, kind)
        diffs = build_differential(g, label, kind, levels)
        for d1, d2 in zip(diffs, diffs[1:]):
            res.expect(composition_is_zero(d1, d2), f"{kind} d∘d at q={d1.q}")
        res.expect(all(d.is_degree_preserving() for d in diffs), f"{kind} degree preserving")
        table = homology_dims(levels, diffs)
        res.expect(euler_from_homology(table, kind) == euler_from_chains(levels), f"{kind} homology Euler")
    for d in range(n + 1):
        for k, f in enumerate(harmonic_basis(n, d), 1):
            c = verify_chromatic_euler(g, label, f)
            res.expect(c["derived_identity"], f"chromatic Euler d={d} basis={k}")
            res.note("chromatic-euler-unsigned", c["unsigned_statement"])
            t = verify_tutte_euler(g, label, f)
            res.expect(t["derived_identity"], f"tutte Euler d={d} basis={k}")
            res.note("tutte-euler-unsubstituted", t["unsubstituted_statement"])
    return res


def check_matroid(m: RankOracle, name: str, seed: int = 0) -> CheckResult:
    res = CheckResult("matroid", name, True)
    n = m.size
    rng = _rng(seed, "matroid", name)
    for label in random_labels(n, 2, seed):
        tutte = tutte_setpoly(m, label)
        for d in range(n + 1):
            for k, f in _capped(hom_basis(n, d), n, rng):
                res.expect(tutte.evaluate(f) == tutte_direct(m, label, f), f"label={list(label)} d={d} basis={k}")
    if 0 < n <= INVARIANT_SIZE:
        for d in range(n + 1):
            for k, f in enumerate(hom_basis(n, d), 1):
                a = invariant_label_sum(m, f, "tutte").polynomial
                res.expect(a == invariant_closed_form(m, f, "tutte").polynomial, f"closed form d={d} basis={k}")
    return res


GRAPH_CHECKS = {
    "recursion": check_recursion,
    "chromatic-tutte": check_chromatic_tutte,
    "tg-recipe": check_tg_recipe,
    "invariants": check_invariants,
    "complex": check_complex,
}


# ---------------------------------------------------------------------------
# fixed examples
# ---------------------------------------------------------------------------

WHEEL_EXPECTED = (
    (0, -435, 1960, -3450, 2975, -1260, 210),
    (0, -416, 1925, -3434, 2975, -1260, 210),
)


def wheel_pair_polynomials() -> list:
    """Closed-form χ̂ of the wheel pair for ``f ≡ 1`` on the 4-subsets of ``{1..10}``."""
    out = []
    for g in wheel_pair():
        f = WeightFn.constant(10, 4, 1)
        out.append(invariant_closed_form(g, f, "chromatic"))
    return out


def check_wheel_pair() -> CheckResult:
    res = CheckResult("wheel-pair", "wheel5/wheel5_variant", True)
    reports = wheel_pair_polynomials()
    for rep, expected in zip(reports, WHEEL_EXPECTED):
        res.expect(tuple(rep.reduced.coefficients("λ")) == expected, f"{rep.to_text()}")
    res.expect(reports[0].polynomial != reports[1].polynomial, "weighted invariants differ")
    g1, g2 = wheel_pair()
    res.expect(classical_chromatic(g1) == classical_chromatic(g2), "classical chromatic polynomials coincide")
    return res


def check_matroid_pair() -> CheckResult:
    res = CheckResult("matroid-pair", "binary7/ternary7", True)
    report = matroid_pair_check()
    for d, ok in report["weighted_equal_by_degree"].items():
        res.expect(ok, f"weighted Tutte invariants equal at d={d}")
    res.expect(report["size_refined_equal"], "size-refined rank sums equal")
    return res


def check_log_concavity() -> CheckResult:
    res = CheckResult("log-concavity", "wheel5/wheel5_variant", True)
    for rep in wheel_pair_polynomials():
        res.expect(log_concavity_check(rep.reduced).holds, rep.to_text())
    return res


# ---------------------------------------------------------------------------
# corpus and orchestration
# ---------------------------------------------------------------------------

def load_corpus_dir(path: str | Path) -> tuple[list[tuple[str, object]], list[str]]:
    """Graph and matroid JSON files of a directory, sorted by file name."""
    items, errors = [], []
    for p in sorted(Path(path).glob("*.json")):
        try:
            data = json.loads(p.read_text())
            if isinstance(data, dict) and "vertices" in data:
                items.append((p.name, Multigraph.from_json(data)))
            elif isinstance(data, dict) and "kind" in data:
                items.append((p.name, RankOracle.from_json(data)))
        except (ValueError, KeyError, TypeError) as exc:
            errors.append(f"{p.name}: {exc}")
    return items, errors


def builtin_corpus(seed: int = 0, random_count: int = 6) -> list[tuple[str, object]]:
    items: list[tuple[str, object]] = [("paw", paw()), ("paw_complex", paw_complex())]
    g1, g2 = wheel_pair()
    items += [("wheel5", g1), ("wheel5_variant", g2)]
    items += [(name.removesuffix(".json"), m) for name, m in matroid_files().items()]
    items += [(f"random{i}", g) for i, g in enumerate(random_graphs(random_count, seed))]
    return items


def _serialize(inst) -> tuple[str, dict]:
    if isinstance(inst, Multigraph):
        return "graph", inst.to_json()
    return "matroid", inst.to_json()


def _run_task(task: tuple) -> dict:
    check, name, kind, data, seed = task
    if check == "wheel-pair":
        return check_wheel_pair().to_json()
    if check == "matroid-pair":
        return check_matroid_pair().to_json()
    if check == "log-concavity":
        return check_log_concavity().to_json()
    if kind == "graph":
        return GRAPH_CHECKS[check](Multigraph.from_json(data), name, seed).to_json()
    return check_matroid(RankOracle.from_json(data), name, seed).to_json()


def plan(items: list[tuple[str, object]], suites: tuple[str, ...], seed: int, examples: bool) -> list[tuple]:
    tasks = []
    for name, inst in items:
        kind, data = _serialize(inst)
        if kind == "graph":
            tasks += [(s, name, kind, data, seed) for s in suites if s in GRAPH_CHECKS]
        elif "matroid" in suites:
            tasks.append(("matroid", name, kind, data, seed))
    if examples:
        tasks += [(c, "", "", None, seed) for c in ("wheel-pair", "matroid-pair", "log-concavity")]
    return tasks


def run_tasks(tasks: list[tuple], jobs: int = 1) -> list[dict]:
    """Run checks in order; with ``jobs > 1`` in worker processes, results still in task order."""
    if jobs <= 1:
        return [_run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_task, tasks))
