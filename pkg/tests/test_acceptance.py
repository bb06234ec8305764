"""Acceptance criteria, one test each, all exact.

Every test prints a single ``CRITERION nn PASS|FAIL`` line (visible with
``-s``); the terminal summary repeats the outcomes.  Runtime budgets are
part of each criterion.
"""

import random
import time
from math import factorial

from wtg.algebra import BIG_X, BIG_Y, LAM, Q, X_, Y_, MVPoly
from wtg.categorification import (
    build_complex,
    build_differential,
    composition_is_zero,
    euler_from_chains,
    euler_from_homology,
    fqdim_complex,
    homology_dims,
    verify_chromatic_euler,
    verify_tutte_euler,
)
from wtg.fixtures import matroid_files, paw, paw_complex, paw_label, random_graphs, random_labels, wheel_pair
from wtg.graph import colouring_count, identity_label
from wtg.invariants import (
    invariant_closed_form,
    invariant_label_sum,
    log_concavity_check,
    matroid_pair,
    size_refined_rank_sums,
)
from wtg.matroid import RankOracle
from wtg.polynomials import (
    chromatic_direct,
    chromatic_recursive,
    classical_chromatic,
    tg_phi,
    tutte_direct,
    tutte_recursive,
    verify_chromatic_tutte,
    verify_tg_recipe,
)
from wtg.suite import random_params
from wtg.weights import WeightFn, harmonic_basis, hom_basis


def _criterion(number: int, title: str, failures: list, elapsed: float, budget: float) -> None:
    over = elapsed >= budget
    ok = not failures and not over
    detail = f"{elapsed:.2f}s of {budget:g}s"
    if failures:
        detail += f"; {len(failures)} mismatch(es), first: {failures[0]}"
    if over:
        detail += "; over budget"
    print(f"CRITERION {number:02d} {'PASS' if ok else 'FAIL'} {title} ({detail})")
    assert not failures, failures[:3]
    assert not over, f"took {elapsed:.2f}s, budget {budget}s"


def _slices(n: int):
    """``(a, f)`` for the indicator basis of degree 1: a is the coefficient vector."""
    for k, f in enumerate(hom_basis(n, 1)):
        a = [0] * n
        a[k] = 1
        yield a, f


# ---------------------------------------------------------------------------


def test_criterion_01_weighted_chromatic_of_labelled_paw():
    t0 = time.perf_counter()
    g, s = paw(), paw_label()
    failures = []
    for a, f in _slices(4):
        total = sum(a)
        expected = (LAM ** 4 - 3 * LAM ** 3 + 3 * LAM ** 2) * total - (LAM * a[0] + a[1] + a[2] + a[3]) * LAM
        got = chromatic_direct(g, s, f)
        if got != expected:
            failures.append(f"a={a}: {got} != {expected}")
    _criterion(1, "weighted chromatic polynomial of the labelled paw", failures, time.perf_counter() - t0, 1)


def test_criterion_02_weighted_tutte_of_labelled_paw():
    t0 = time.perf_counter()
    m, s = RankOracle.graphic(paw()), paw_label()
    failures = []
    for a, f in _slices(4):
        total = sum(a)
        expected = (
            (X_ - 1) ** 2 * total
            + (X_ - 1) * (Y_ - 1) * (a[1] + a[2] + a[3])
            + (X_ - 1) * (3 * total)
            + 2 * total
            + a[0]
        )
        got = tutte_direct(m, s, f)
        if got != expected:
            failures.append(f"a={a}: {got} != {expected}")
    _criterion(2, "weighted Tutte polynomial of the labelled paw, four-term form", failures, time.perf_counter() - t0, 1)


WHEEL_PRINTED = (
    210 * LAM ** 6 - 1260 * LAM ** 5 + 2975 * LAM ** 4 - 3450 * LAM ** 3 + 1960 * LAM ** 2 - 435 * LAM,
    210 * LAM ** 6 - 1260 * LAM ** 5 + 2975 * LAM ** 4 - 3434 * LAM ** 3 + 1925 * LAM ** 2 - 416 * LAM,
)


def test_criterion_03_wheel_pair_chromatic_invariants():
    t0 = time.perf_counter()
    g1, g2 = wheel_pair()
    f = WeightFn.ones(10, 4)
    failures = []
    got = [invariant_closed_form(g, f, "chromatic").polynomial for g in (g1, g2)]
    for i, (p, printed) in enumerate(zip(got, WHEEL_PRINTED), 1):
        if p != printed * factorial(10):
            failures.append(f"graph {i}: {p} != 10! * ({printed})")
    if got[0] == got[1]:
        failures.append("weighted invariants coincide")
    if classical_chromatic(g1) != classical_chromatic(g2):
        failures.append("classical chromatic polynomials differ")
    _criterion(3, "weighted chromatic invariants of the wheel pair", failures, time.perf_counter() - t0, 5)


def _small_fixtures(corpus):
    named = [("paw", paw()), ("paw_complex", paw_complex())]
    named += [(k, v) for k, v in matroid_files().items() if 0 < v.size <= 6]
    extra = [(f"random{i}", g) for i, g in enumerate(random_graphs(12, seed=0)) if g.edge_count <= 6]
    return named, extra + [(f"corpus{i}", g) for i, g in enumerate(corpus)]


def test_criterion_04_matroid_pair_weighted_tutte_invariants(corpus):
    t0 = time.perf_counter()
    failures = []
    m1, m2 = matroid_pair()
    for d in range(1, 8):
        for k, f in enumerate(hom_basis(7, d), 1):
            if invariant_closed_form(m1, f, "tutte").polynomial != invariant_closed_form(m2, f, "tutte").polynomial:
                failures.append(f"pair differs at d={d} basis={k}")
    if size_refined_rank_sums(m1) != size_refined_rank_sums(m2):
        failures.append("size-refined rank sums differ")
    # closed form against the literal label sum on every fixture with n <= 6
    named, generated = _small_fixtures(corpus)
    rng = random.Random("criterion-4")
    for name, inst in named + generated:
        n = inst.edge_count if hasattr(inst, "edge_count") else inst.size
        matroid = inst if isinstance(inst, RankOracle) else RankOracle.graphic(inst)
        kinds = [("tutte", matroid)] + ([] if isinstance(inst, RankOracle) else [("chromatic", inst)])
        for d in range(n + 1):
            if (name, inst) in named:
                weights = hom_basis(n, d)
            else:
                weights = [WeightFn.from_vector(n, d, [rng.randint(-3, 3) for _ in hom_basis(n, d)])]
            for f in weights:
                for kind, obj in kinds:
                    if invariant_label_sum(obj, f, kind).polynomial != invariant_closed_form(obj, f, kind).polynomial:
                        failures.append(f"{name} {kind} d={d}")
    _criterion(4, "matroid pair invariants and closed form against label sums", failures, time.perf_counter() - t0, 30)


def test_criterion_05_recursions_match_subset_sums(corpus):
    t0 = time.perf_counter()
    failures = []
    for i, g in enumerate(corpus):
        n = g.edge_count
        m = RankOracle.graphic(g)
        for s in random_labels(n, 3, seed=5):
            for d in range(n + 1):
                for k, f in enumerate(hom_basis(n, d), 1):
                    if chromatic_recursive(g, s, f) != chromatic_direct(g, s, f):
                        failures.append(f"chromatic corpus{i} s={s} d={d} basis={k}")
                    if tutte_recursive(m, s, f) != tutte_direct(m, s, f):
                        failures.append(f"tutte corpus{i} s={s} d={d} basis={k}")
    _criterion(5, "deletion-contraction equals subset sums on the corpus", failures, time.perf_counter() - t0, 120)


def test_criterion_06_harmonic_chromatic_tutte_and_tg_recipe(corpus):
    t0 = time.perf_counter()
    failures = []
    rng = random.Random("criterion-6")
    for i, g in enumerate(corpus):
        n = g.edge_count
        s = random_labels(n, 2, seed=6)[-1]
        pairs = [random_params(rng) for _ in range(5)]
        for d in range(n + 1):
            for k, f in enumerate(harmonic_basis(n, d), 1):
                if not verify_chromatic_tutte(g, s, f):
                    failures.append(f"chromatic-tutte corpus{i} d={d} basis={k}")
                for p in pairs:
                    if not verify_tg_recipe(g, s, f, p):
                        failures.append(f"tg recipe corpus{i} d={d} basis={k} alpha={p.alpha} beta={p.beta}")
    _criterion(6, "harmonic chromatic-Tutte relation and TG recipe on the corpus", failures, time.perf_counter() - t0, 120)


def test_criterion_07_label_summed_recipes(corpus):
    """Literal label-summed TG recipe and its chromatic specialization.

    Label sums depend on f only through d and F = Σ f(Z), so one indicator
    weight per degree covers the whole homogeneous space.
    """
    t0 = time.perf_counter()
    failures = []
    rng = random.Random("criterion-7")
    for i, g in enumerate(corpus):
        n = g.edge_count
        if n > 7:
            continue
        m = RankOracle.graphic(g)
        p = random_params(rng)
        k, rE = g.component_count(), m.rank()
        prefactor = p.alpha ** (n - g.vertex_count + k) * p.beta ** (g.vertex_count - k)
        for d in range(n + 1):
            f = hom_basis(n, d)[0]
            phi_hat = invariant_label_sum(g, f, "tg", p).polynomial
            chi_hat = invariant_label_sum(g, f, "chromatic").polynomial
            t_hat = invariant_label_sum(m, f, "tutte").polynomial
            tg_side = t_hat.substitute({"x": BIG_X / p.beta, "y": BIG_Y / p.alpha}).scale(prefactor)
            chi_side = t_hat.substitute({"x": 1 - LAM, "y": 0}) * LAM ** k * (-1) ** rE
            if phi_hat != tg_side:
                failures.append(f"tg recipe corpus{i} d={d}")
            if chi_hat != chi_side:
                failures.append(f"chromatic recipe corpus{i} d={d}")
    _criterion(7, "label-summed TG recipe and chromatic specialization", failures, time.perf_counter() - t0, 300)


def test_criterion_07_companion_dual_forms_hold(corpus):
    """With the Tutte invariant of the dual matroid the label-summed recipes hold for all f."""
    from wtg.invariants import verify_invariant_identities

    rng = random.Random("criterion-7-dual")
    failures = []
    for i, g in enumerate(corpus):
        p = random_params(rng)
        for d in range(g.edge_count + 1):
            r = verify_invariant_identities(g, hom_basis(g.edge_count, d)[0], p)
            if not (r["tg_recipe_dual"] and r["chromatic_tutte_dual"]):
                failures.append(f"corpus{i} d={d}")
            if d == 0 and not (r["tg_recipe"] and r["chromatic_tutte"]):
                failures.append(f"literal form at d=0 corpus{i}")
    assert not failures, failures[:3]


def test_criterion_07_companion_harmonic_invariants_vanish(corpus):
    """Harmonic weights of positive degree have F = 0, so every label sum is zero."""
    failures = []
    for i, g in enumerate(corpus[:60]):
        n = g.edge_count
        for d in range(1, n + 1):
            for f in harmonic_basis(n, d):
                for kind in ("chromatic", "tutte"):
                    obj = g if kind == "chromatic" else RankOracle.graphic(g)
                    if invariant_label_sum(obj, f, kind).polynomial:
                        failures.append(f"{kind} corpus{i} d={d}")
    assert not failures, failures[:3]


def test_criterion_08_categorification(corpus):
    t0 = time.perf_counter()
    failures = []
    # (b) the five weighted graded dimensions of the paw complex
    g = paw_complex()
    levels = build_complex(g, identity_label(4), "chromatic")
    for k, f in enumerate(harmonic_basis(4, 1), 1):
        a = [f(1 << j) for j in range(4)]
        total = sum(a)
        expected = [
            MVPoly.zero(),
            (1 + Q) ** 3 * total,
            (1 + Q) ** 2 * (3 * total),
            -(1 + Q) ** 2 * a[3] + (1 + Q) * a[3],
            MVPoly.zero(),
        ]
        if fqdim_complex(levels, f) != expected:
            failures.append(f"paw complex fqdim, harmonic basis {k}")
    for i, g in enumerate(corpus):
        n = g.edge_count
        s = random_labels(n, 2, seed=8)[-1]
        for kind in ("chromatic", "tutte"):
            lv = build_complex(g, s, kind)
            diffs = build_differential(g, s, kind, lv)
            # (a) d∘d = 0
            if not all(composition_is_zero(d1, d2) for d1, d2 in zip(diffs, diffs[1:])):
                failures.append(f"{kind} d∘d corpus{i}")
            # (e) Euler via homology against Euler via chains, f = 1
            if euler_from_homology(homology_dims(lv, diffs), kind) != euler_from_chains(lv):
                failures.append(f"{kind} homology Euler corpus{i}")
        for d in range(n + 1):
            for k, f in enumerate(harmonic_basis(n, d), 1):
                # (c) and (d): the derived Euler identities
                if not verify_chromatic_euler(g, s, f)["derived_identity"]:
                    failures.append(f"chromatic Euler corpus{i} d={d} basis={k}")
                if not verify_tutte_euler(g, s, f)["derived_identity"]:
                    failures.append(f"tutte Euler corpus{i} d={d} basis={k}")
    _criterion(8, "chain complexes, graded dimensions and Euler identities", failures, time.perf_counter() - t0, 300)


def test_criterion_09_property_suites(corpus):
    t0 = time.perf_counter()
    failures = []
    from math import comb

    # level sums and the complement identity for harmonic weights
    for n in range(1, 7):
        for d in range(n + 1):
            basis = harmonic_basis(n, d)
            expected_dim = 1 if d == 0 else comb(n, d) - comb(n, d - 1)
            if len(basis) != max(expected_dim, 0):
                failures.append(f"harmonic dimension n={n} d={d}")
            full = (1 << n) - 1
            for k, f in enumerate(basis, 1):
                for J in range(1 << n):
                    if f.tilde(J) != (-1) ** d * f.tilde(full & ~J):
                        failures.append(f"complement n={n} d={d} basis={k} J={J}")
                    for i in range(d + 1):
                        if f.level_sum(J, i) != (-1) ** (d - i) * comb(d, i) * f.tilde(J):
                            failures.append(f"level sum n={n} d={d} basis={k} J={J} i={i}")
    # colouring counts against λ^k on graphs with at most 4 vertices
    for i, g in enumerate(corpus):
        if g.vertex_count > 4:
            continue
        for A in range(1 << g.edge_count):
            for lam in (1, 2, 3):
                if colouring_count(g, A, lam) != lam ** g.component_count(A):
                    failures.append(f"colouring corpus{i} A={A} λ={lam}")
    # rank axioms on every constructed matroid with at most 6 elements
    matroids = [RankOracle.graphic(g) for g in corpus]
    matroids += [RankOracle.uniform(r, n) for n in range(7) for r in range(n + 1)]
    matroids += [m for m in matroid_files().values() if m.size <= 6]
    m1, m2 = matroid_pair()
    matroids += [m1.delete(0), m2.contract(6)]
    for j, m in enumerate(matroids):
        elems = m.elements()
        ground = m.ground
        subsets = [A for A in range(1 << m.size) if A & ~ground == 0]
        if m.rank(0) != 0:
            failures.append(f"matroid{j} rank of empty set")
        for A in subsets:
            rA = m.rank(A)
            if not 0 <= rA <= A.bit_count():
                failures.append(f"matroid{j} bounds A={A}")
            for e in elems:
                if not A >> e & 1:
                    step = m.rank(A | 1 << e) - rA
                    if step not in (0, 1):
                        failures.append(f"matroid{j} unit increase A={A} e={e}")
        for A in subsets[:: max(1, len(subsets) // 16)]:
            for B in subsets:
                if m.rank(A | B) + m.rank(A & B) > m.rank(A) + m.rank(B):
                    failures.append(f"matroid{j} submodularity A={A} B={B}")
    # recursion results do not depend on the pivot order
    rng = random.Random("criterion-9")

    def random_pivot(ids):
        return rng.choice(sorted(ids))

    for i, g in enumerate(corpus):
        n = g.edge_count
        m = RankOracle.graphic(g)
        s = random_labels(n, 2, seed=9)[-1]
        p = random_params(rng)
        for d in range(n + 1):
            for f in hom_basis(n, d):
                if chromatic_recursive(g, s, f, pivot=random_pivot) != chromatic_recursive(g, s, f):
                    failures.append(f"chromatic pivot corpus{i} d={d}")
                if tutte_recursive(m, s, f, pivot=random_pivot) != tutte_recursive(m, s, f):
                    failures.append(f"tutte pivot corpus{i} d={d}")
            for f in harmonic_basis(n, d):
                if tg_phi(g, s, f, p, pivot=random_pivot) != tg_phi(g, s, f, p):
                    failures.append(f"tg pivot corpus{i} d={d}")
    _criterion(9, "property suites", failures, time.perf_counter() - t0, 300)


def test_criterion_10_log_concavity_of_wheel_invariants():
    t0 = time.perf_counter()
    failures = []
    for i, printed in enumerate(WHEEL_PRINTED, 1):
        result = log_concavity_check(printed)
        if not result.holds:
            failures.append(f"sequence {i} violated at {result.index}")
    _criterion(10, "log-concavity of both wheel invariant sequences", failures, time.perf_counter() - t0, 5)
